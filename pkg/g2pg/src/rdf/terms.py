"""rdflib nodes to the converter's own term model."""
from typing import Iterable, Mapping, Optional

import rdflib
from rdflib import BNode, URIRef
from rdflib import Literal as RdflibLiteral
from rdflib.term import Node

from models.rdf import IRI, BlankNode, Literal, RdfTerm, Triple

# Lexical forms stay as written: "01"^^xsd:integer is not rewritten to "1".
rdflib.NORMALIZE_LITERALS = False


def from_rdflib(node: Node, blank_labels: Optional[Mapping[BNode, str]] = None) -> RdfTerm:
    if isinstance(node, URIRef):
        return IRI(str(node))
    if isinstance(node, BNode):
        return BlankNode((blank_labels or {}).get(node, str(node)))
    if isinstance(node, RdflibLiteral):
        if node.language:
            return Literal.tagged(str(node), node.language)
        if node.datatype is None:
            return Literal(str(node))
        return Literal(str(node), str(node.datatype))
    raise ValueError(f'unsupported RDF node {node!r}')


def triple_from_rdflib(nodes: Iterable[Node],
                       blank_labels: Optional[Mapping[BNode, str]] = None,
                       ) -> Triple:
    return Triple(*(from_rdflib(node, blank_labels) for node in nodes))
