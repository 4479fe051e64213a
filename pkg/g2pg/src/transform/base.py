from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from logging import getLogger
from typing import List, Optional, Tuple, Union

from extract.base import BindingSource, EndpointSource, LocalGraphSource
from extract.schema import EndpointConfig
from models.bindings import BindingTable
from models.mapping import EdgeMappingDef, MappingDocument, NodeMappingDef
from models.pg import PgValue, PropertyGraph
from models.rdf import IRI, BlankNode, Literal, RdfTerm
from rdf.graph import RdfGraph
from transform.schema import MappingStats, RunReport
from transform.values import value_from_literal

logger = getLogger(__name__)


@dataclass
class Tally:
    """Counts for one mapping while its rows are turned into graph elements."""
    kind: str
    name: str
    rows: int = 0
    emitted: int = 0
    dropped: int = 0
    skipped: int = 0
    reasons: Counter = field(default_factory=Counter)

    def warn(self, reason: str) -> None:
        self.reasons[reason] += 1

    def stats(self) -> MappingStats:
        return MappingStats(
            kind=self.kind, name=self.name, rows=self.rows,
            emitted=self.emitted, dropped=self.dropped, skipped=self.skipped,
        )

    def warnings(self) -> List[str]:
        return [
            f'{self.name}: {count} x {reason}'
            for reason, count in sorted(self.reasons.items())
        ]


def _kind_of(term: Optional[RdfTerm]) -> str:
    if term is None:
        return 'unbound'
    if isinstance(term, BlankNode):
        return 'a blank node'
    return 'a literal'


def _property_values(properties, row, tally: Tally) -> List[Tuple[str, PgValue]]:
    values = []
    for key, var in properties:
        term = row.get(var)
        if term is None:
            continue
        if not isinstance(term, Literal):
            tally.warn(f'property {key} bound to a resource, value ignored')
            continue
        values.append((key, value_from_literal(term, on_warning=tally.warn)))
    return values


def build_nodes(mapping: NodeMappingDef,
                bindings: BindingTable,
                graph_acc: PropertyGraph,
                tally: Optional[Tally] = None,
                ) -> PropertyGraph:
    tally = tally or Tally('node', mapping.label)
    for row in bindings:
        tally.rows += 1
        term = row.get(mapping.node_var)
        if not isinstance(term, IRI):
            tally.skipped += 1
            tally.warn(f'row skipped, node variable {mapping.node_var} is {_kind_of(term)}')
            continue
        graph_acc.upsert_node(
            term.value, (mapping.label,),
            _property_values(mapping.properties, row, tally),
        )
        tally.emitted += 1
    return graph_acc


def build_edges(mapping: EdgeMappingDef,
                bindings: BindingTable,
                graph_acc: PropertyGraph,
                tally: Optional[Tally] = None,
                ) -> PropertyGraph:
    """Add an edge for each row whose endpoints are nodes with the declared labels."""
    tally = tally or Tally('edge', mapping.edge_label)
    for row in bindings:
        tally.rows += 1
        src, dst = row.get(mapping.src_var), row.get(mapping.dst_var)
        if not (isinstance(src, IRI) and isinstance(dst, IRI)
                and graph_acc.has_node(src.value, mapping.src_label)
                and graph_acc.has_node(dst.value, mapping.dst_label)):
            tally.dropped += 1
            continue
        graph_acc.upsert_edge(
            src.value, mapping.edge_label, dst.value,
            _property_values(mapping.properties, row, tally),
        )
        tally.emitted += 1
    if tally.dropped:
        logger.info(
            'Edge mapping %s: %s of %s rows dropped, an endpoint is not a mapped node',
            mapping.edge_label, tally.dropped, tally.rows,
        )
    return graph_acc


class MappingRunner:
    """Runs node mappings, then edge mappings, against one binding source.

    Binding tables of one phase are fetched in parallel; their results are
    merged into the graph in document order by the calling thread.
    """

    def __init__(self, document: MappingDocument, source: BindingSource) -> None:
        self.document = document
        self.source = source

    def _fetch_all(self, mappings) -> List[BindingTable]:
        prefixes = self.document.prefixes
        workers = max(1, min(self.source.max_in_flight, len(mappings)))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(self.source.bindings, mapping, prefixes)
                for mapping in mappings
            ]
            return [future.result() for future in futures]

    def run(self) -> Tuple[PropertyGraph, RunReport]:
        graph = PropertyGraph()
        tallies: List[Tally] = []

        node_mappings = self.document.node_mappings
        for mapping, table in zip(node_mappings, self._fetch_all(node_mappings)):
            tally = Tally('node', mapping.label)
            graph.merge(build_nodes(mapping, table, PropertyGraph(), tally))
            tallies.append(tally)
            logger.info('Node mapping %s: %s rows', mapping.label, tally.rows)

        edge_mappings = self.document.edge_mappings
        if edge_mappings:
            for mapping, table in zip(edge_mappings, self._fetch_all(edge_mappings)):
                tally = Tally('edge', mapping.edge_label)
                build_edges(mapping, table, graph, tally)
                tallies.append(tally)
                logger.info('Edge mapping %s: %s rows', mapping.edge_label, tally.rows)

        warnings = list(self.source.warnings)
        for tally in tallies:
            for warning in tally.warnings():
                logger.warning(warning)
                warnings.append(warning)
        report = RunReport(
            source=self.source.describe(),
            mappings=[tally.stats() for tally in tallies],
            nodes=len(graph.nodes),
            edges=len(graph.edges),
            warnings=warnings,
        )
        return graph, report


def run_mapping(document: MappingDocument,
                source: Union[RdfGraph, EndpointConfig, BindingSource],
                ) -> Tuple[PropertyGraph, RunReport]:
    if isinstance(source, RdfGraph):
        source = LocalGraphSource(source)
    elif isinstance(source, EndpointConfig):
        source = EndpointSource(source)
    return MappingRunner(document, source).run()
