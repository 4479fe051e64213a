"""Bulk-import CSV layouts for Neo4j, Oracle PGX and Amazon Neptune."""
import csv
import io
from typing import Iterable, List, Sequence, Set, Tuple

from models.pg import PgValue, Properties, PropertyGraph, ValueKind, sorted_values

CsvPair = Tuple[str, str]

NEPTUNE_TYPES = {
    ValueKind.TEXT: 'String',
    ValueKind.INTEGER: 'Long',
    ValueKind.DECIMAL: 'Double',
    ValueKind.BOOLEAN: 'Bool',
    ValueKind.DATETIME: 'Date',
}


def _render(rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerows(rows)
    return buffer.getvalue()


def _joined(values: Iterable[str], escape: str) -> str:
    return ';'.join(value.replace(';', escape) for value in values)


def _lexicals(properties: Properties, key: str) -> List[str]:
    return [value.lexical for value in sorted_values(properties.get(key, ()))]


def emit_neo4j_csv(graph: PropertyGraph) -> CsvPair:
    """``;`` joins labels and multi-values; a ``;`` inside a value is doubled."""
    node_keys = graph.node_keys()
    nodes = [[':ID', ':LABEL', *node_keys]]
    for node in graph.sorted_nodes():
        nodes.append([
            node.id,
            _joined(sorted(node.labels), ';;'),
            *(_joined(_lexicals(node.properties, key), ';;') for key in node_keys),
        ])

    edge_keys = graph.edge_keys()
    edges = [[':START_ID', ':END_ID', ':TYPE', *edge_keys]]
    for edge in graph.sorted_edges():
        edges.append([
            edge.src_id, edge.dst_id, edge.label,
            *(_joined(_lexicals(edge.properties, key), ';;') for key in edge_keys),
        ])
    return _render(nodes), _render(edges)


def _pgx_rows(prefix: List[str], properties: Properties) -> List[List[str]]:
    if not properties:
        return [prefix + ['', '', '']]
    return [
        prefix + [key, value.kind.value, value.lexical]
        for key in sorted(properties)
        for value in sorted_values(properties[key])
    ]


def emit_pgx_flat(graph: PropertyGraph) -> CsvPair:
    vertices = []
    for node in graph.sorted_nodes():
        labels = ';'.join(sorted(node.labels))
        vertices.extend(_pgx_rows([node.id, labels], node.properties))
    edges = []
    for seq, edge in enumerate(graph.sorted_edges(), 1):
        edges.extend(_pgx_rows(
            [str(seq), edge.src_id, edge.dst_id, edge.label], edge.properties
        ))
    return _render(vertices), _render(edges)


def _neptune_type(values: Iterable[PgValue]) -> str:
    kinds: Set[ValueKind] = {value.kind for value in values}
    if len(kinds) == 1:
        return NEPTUNE_TYPES[kinds.pop()]
    return 'String'


def emit_neptune_csv(graph: PropertyGraph) -> CsvPair:
    """Gremlin load format: node properties are sets, edge properties single values.

    An edge property that ever holds several values is typed String and its
    values are ``;``-joined.
    """
    node_keys = graph.node_keys()
    node_types = [
        _neptune_type(v for node in graph.nodes.values()
                      for v in node.properties.get(key, ()))
        for key in node_keys
    ]
    nodes = [['~id', '~label', *(f'{key}:{type_}[]'
                                 for key, type_ in zip(node_keys, node_types))]]
    for node in graph.sorted_nodes():
        nodes.append([
            node.id,
            _joined(sorted(node.labels), '\\;'),
            *(_joined(_lexicals(node.properties, key), '\\;') for key in node_keys),
        ])

    edge_keys = graph.edge_keys()
    edge_types = []
    for key in edge_keys:
        value_sets = [e.properties[key] for e in graph.edges.values() if key in e.properties]
        if any(len(values) > 1 for values in value_sets):
            edge_types.append('String')
        else:
            edge_types.append(_neptune_type(v for values in value_sets for v in values))
    edges = [['~id', '~from', '~to', '~label',
              *(f'{key}:{type_}' for key, type_ in zip(edge_keys, edge_types))]]
    for seq, edge in enumerate(graph.sorted_edges(), 1):
        edges.append([
            f'e{seq}', edge.src_id, edge.dst_id, edge.label,
            *(_joined(_lexicals(edge.properties, key), '\\;') for key in edge_keys),
        ])
    return _render(nodes), _render(edges)
