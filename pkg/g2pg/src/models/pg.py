from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from typing import Dict, Iterable, List, Set, Tuple, Union

Scalar = Union[str, int, Decimal, bool]


class ValueKind(str, Enum):
    TEXT = 'string'
    INTEGER = 'integer'
    DECIMAL = 'decimal'
    BOOLEAN = 'boolean'
    DATETIME = 'datetime'


_KIND_ORDER = {kind: i for i, kind in enumerate(ValueKind)}


@dataclass(frozen=True)
class PgValue:
    kind: ValueKind
    value: Scalar

    @classmethod
    def text(cls, value: str) -> 'PgValue':
        return cls(ValueKind.TEXT, value)

    @classmethod
    def integer(cls, value: int) -> 'PgValue':
        return cls(ValueKind.INTEGER, value)

    @classmethod
    def decimal(cls, value: Decimal) -> 'PgValue':
        return cls(ValueKind.DECIMAL, value)

    @classmethod
    def boolean(cls, value: bool) -> 'PgValue':
        return cls(ValueKind.BOOLEAN, value)

    @classmethod
    def datetime(cls, lexical: str) -> 'PgValue':
        return cls(ValueKind.DATETIME, lexical)

    @property
    def lexical(self) -> str:
        if self.kind is ValueKind.BOOLEAN:
            return 'true' if self.value else 'false'
        return str(self.value)

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.value)


def sorted_values(values: Iterable[PgValue]) -> List[PgValue]:
    return sorted(values, key=PgValue.sort_key)


Properties = Dict[str, Set[PgValue]]


def merge_properties(target: Properties,
                     updates: Iterable[Tuple[str, PgValue]],
                     ) -> None:
    for key, value in updates:
        target.setdefault(key, set()).add(value)


@dataclass
class PgNode:
    id: str
    labels: Set[str] = field(default_factory=set)
    properties: Properties = field(default_factory=dict)


@dataclass
class PgEdge:
    src_id: str
    label: str
    dst_id: str
    properties: Properties = field(default_factory=dict)

    @property
    def key(self) -> Tuple[str, str, str]:
        return self.src_id, self.label, self.dst_id


class PropertyGraph:
    """Nodes keyed by resource IRI and directed edges keyed by (src, label, dst).

    Upserts merge: labels and property values accumulate as sets.
    """

    def __init__(self) -> None:
        self.nodes: Dict[str, PgNode] = {}
        self.edges: Dict[Tuple[str, str, str], PgEdge] = {}

    def upsert_node(self,
                    node_id: str,
                    labels: Iterable[str],
                    properties: Iterable[Tuple[str, PgValue]] = (),
                    ) -> PgNode:
        if not node_id:
            raise ValueError('node id must be nonempty')
        node = self.nodes.get(node_id)
        if node is None:
            node = self.nodes[node_id] = PgNode(node_id)
        node.labels.update(labels)
        merge_properties(node.properties, properties)
        return node

    def upsert_edge(self,
                    src_id: str,
                    label: str,
                    dst_id: str,
                    properties: Iterable[Tuple[str, PgValue]] = (),
                    ) -> PgEdge:
        if src_id not in self.nodes or dst_id not in self.nodes:
            raise ValueError(f'edge {src_id} -> {dst_id} references a missing node')
        edge = self.edges.get((src_id, label, dst_id))
        if edge is None:
            edge = self.edges[(src_id, label, dst_id)] = PgEdge(
                src_id, label, dst_id
            )
        merge_properties(edge.properties, properties)
        return edge

    def merge(self, other: 'PropertyGraph') -> None:
        for node in other.nodes.values():
            self.upsert_node(node.id, node.labels, _pairs(node.properties))
        for edge in other.edges.values():
            self.upsert_edge(
                edge.src_id, edge.label, edge.dst_id, _pairs(edge.properties)
            )

    def has_node(self, node_id: str, label: str) -> bool:
        node = self.nodes.get(node_id)
        return node is not None and label in node.labels

    def sorted_nodes(self) -> List[PgNode]:
        return [self.nodes[node_id] for node_id in sorted(self.nodes)]

    def sorted_edges(self) -> List[PgEdge]:
        return [self.edges[key] for key in sorted(self.edges)]

    def node_keys(self) -> List[str]:
        return sorted({key for node in self.nodes.values() for key in node.properties})

    def edge_keys(self) -> List[str]:
        return sorted({key for edge in self.edges.values() for key in edge.properties})

    def canonical(self) -> tuple:
        """Order-independent snapshot used for equality."""
        return (
            tuple(
                (node.id, tuple(sorted(node.labels)), _canonical_properties(node.properties))
                for node in self.sorted_nodes()
            ),
            tuple(
                (edge.key, _canonical_properties(edge.properties))
                for edge in self.sorted_edges()
            ),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PropertyGraph):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __repr__(self) -> str:
        return f'PropertyGraph(nodes={len(self.nodes)}, edges={len(self.edges)})'


def _pairs(properties: Properties) -> List[Tuple[str, PgValue]]:
    return [(key, value) for key, values in properties.items() for value in values]


def _canonical_properties(properties: Properties) -> tuple:
    return tuple(
        (key, tuple(sorted_values(values)))
        for key, values in sorted(properties.items())
    )
