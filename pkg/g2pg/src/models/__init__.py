from models.bindings import BindingTable  # noqa
from models.mapping import (EdgeMappingDef, MappingDocument,  # noqa
                            NodeMappingDef, PrefixMap)
from models.pattern import GraphPattern, Variable  # noqa
from models.pg import PgEdge, PgNode, PgValue, PropertyGraph, ValueKind  # noqa
from models.rdf import IRI, BlankNode, Literal, RdfTerm, Triple  # noqa
