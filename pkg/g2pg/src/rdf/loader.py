from logging import getLogger
from pathlib import Path
from typing import Sequence

from models.rdf import BlankNode, Triple
from rdf.graph import RdfGraph
from rdf.ntriples import load_ntriples
from rdf.turtle import load_turtle_subset

logger = getLogger(__name__)

NTRIPLES_SUFFIXES = {'.nt', '.ntriples'}


def load_graph(path: Path) -> RdfGraph:
    """Load one data file; N-Triples by suffix, the Turtle subset otherwise."""
    text = Path(path).read_text(encoding='utf-8')
    if Path(path).suffix.lower() in NTRIPLES_SUFFIXES:
        graph = load_ntriples(text)
    else:
        graph = load_turtle_subset(text)
    logger.info('Loaded %s triples from %s', len(graph), path)
    return graph


def load_graphs(paths: Sequence[Path]) -> RdfGraph:
    """Merge several files; blank nodes stay local to the file they came from."""
    if len(paths) == 1:
        return load_graph(paths[0])
    merged = RdfGraph()
    for index, path in enumerate(paths):
        for triple in load_graph(path):
            merged.add(Triple(*(
                BlankNode(f'f{index}_{term.id}') if isinstance(term, BlankNode) else term
                for term in triple
            )))
    return merged
