from abc import ABC, abstractmethod
from logging import getLogger
from typing import List

from extract.schema import EndpointConfig
from extract.sparql import SparqlClient, generate_query
from models.bindings import BindingTable
from models.mapping import MappingDef, PrefixMap
from pattern.engine import evaluate
from rdf.graph import RdfGraph

logger = getLogger(__name__)


class BindingSource(ABC):
    """Where the binding tables of a mapping come from."""

    max_in_flight: int = 1

    def __init__(self) -> None:
        self.warnings: List[str] = []

    @abstractmethod
    def bindings(self, mapping: MappingDef, prefixes: PrefixMap) -> BindingTable:
        ...

    @abstractmethod
    def describe(self) -> str:
        ...


class LocalGraphSource(BindingSource):
    def __init__(self, graph: RdfGraph) -> None:
        super().__init__()
        self.graph = graph

    def bindings(self, mapping: MappingDef, prefixes: PrefixMap) -> BindingTable:
        return evaluate(mapping.pattern, self.graph).project(mapping.projected_vars)

    def describe(self) -> str:
        return f'local graph ({len(self.graph)} triples)'


class EndpointSource(BindingSource):
    def __init__(self, config: EndpointConfig) -> None:
        super().__init__()
        self.config = config
        self.max_in_flight = config.max_in_flight

    def bindings(self, mapping: MappingDef, prefixes: PrefixMap) -> BindingTable:
        query = generate_query(mapping, prefixes)
        logger.debug('Generated query for %s:\n%s', query.origin, query.text)
        # One session per call; calls for different mappings run in parallel.
        with SparqlClient(self.config) as client:
            table = client.execute(query)
        self.warnings.extend(client.warnings)
        return table

    def describe(self) -> str:
        return f'endpoint {self.config.url}'
