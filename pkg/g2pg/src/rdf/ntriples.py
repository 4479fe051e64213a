from logging import getLogger
from typing import Dict, List, Tuple

from rdflib import BNode
from rdflib.exceptions import ParserError
from rdflib.plugins.parsers.ntriples import W3CNTriplesParser
from rdflib.term import Node

from core.exceptions import RdfParseError
from models.rdf import term_sort_key
from rdf.graph import RdfGraph
from rdf.syntax import check_escapes, tokenize
from rdf.terms import triple_from_rdflib

logger = getLogger(__name__)


class _BlankNodeLabels(dict):
    """Label to node map filled by the parser, remembering the way back."""

    def __init__(self) -> None:
        super().__init__()
        self.labels: Dict[BNode, str] = {}

    def __setitem__(self, label: str, node: BNode) -> None:
        super().__setitem__(label, node)
        self.labels[node] = label


class _TripleSink:
    def __init__(self) -> None:
        self.triples: List[Tuple[Node, Node, Node]] = []

    def triple(self, s: Node, p: Node, o: Node) -> None:
        self.triples.append((s, p, o))


def load_ntriples(source: str) -> RdfGraph:
    """Parse N-Triples line by line so errors carry their line number.

    Blank node labels of the document are kept as blank node ids.
    """
    graph = RdfGraph()
    sink = _TripleSink()
    parser = W3CNTriplesParser(sink)
    blank_nodes = _BlankNodeLabels()
    for lineno, line in enumerate(source.split('\n'), 1):
        check_escapes(tokenize(line, first_line=lineno, error=RdfParseError), RdfParseError)
        sink.triples.clear()
        try:
            parser.parsestring(line, bnode_context=blank_nodes)
            for nodes in sink.triples:
                graph.add(triple_from_rdflib(nodes, blank_nodes.labels))
        except (ParserError, ValueError) as exc:
            raise RdfParseError(f'invalid N-Triples: {exc}', lineno) from None
    logger.debug('Loaded %s N-Triples', len(graph))
    return graph


def serialize_ntriples(graph: RdfGraph) -> str:
    triples = sorted(
        graph,
        key=lambda t: tuple(term_sort_key(term) for term in t),
    )
    return ''.join(f'{triple}\n' for triple in triples)
