from dataclasses import dataclass, field
from typing import Dict, Iterator, Mapping, Tuple, Union

from core.exceptions import UnknownPrefix
from models.pattern import GraphPattern
from models.rdf import is_absolute_iri

PropertyList = Tuple[Tuple[str, str], ...]


class PrefixMap(Mapping[str, str]):
    """Prefix name (without the colon) to namespace IRI."""

    def __init__(self, entries: Mapping[str, str] | None = None) -> None:
        self._entries: Dict[str, str] = {}
        for name, iri in (entries or {}).items():
            self.declare(name, iri)

    def declare(self, name: str, iri: str) -> None:
        if name in self._entries:
            raise ValueError(f"prefix '{name}:' is already declared")
        if not is_absolute_iri(iri):
            raise ValueError(f'not an absolute IRI: {iri!r}')
        self._entries[name] = iri

    def __getitem__(self, name: str) -> str:
        return self._entries[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mapping):
            return NotImplemented
        return dict(self._entries) == dict(other)

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        return f'PrefixMap({self._entries!r})'


def expand_prefixed_name(name: str, prefixes: Mapping[str, str]) -> str:
    prefix, colon, local = name.partition(':')
    if not colon:
        raise ValueError(f'not a prefixed name: {name!r}')
    try:
        return prefixes[prefix] + local
    except KeyError:
        raise UnknownPrefix(prefix) from None


@dataclass(frozen=True)
class NodeMappingDef:
    node_var: str
    label: str
    properties: PropertyList
    rdf_pattern_text: str
    pattern: GraphPattern
    line: int = field(default=0, compare=False)

    @property
    def projected_vars(self) -> Tuple[str, ...]:
        return _unique((self.node_var, *(var for _, var in self.properties)))


@dataclass(frozen=True)
class EdgeMappingDef:
    src_var: str
    src_label: str
    edge_label: str
    dst_var: str
    dst_label: str
    properties: PropertyList
    rdf_pattern_text: str
    pattern: GraphPattern
    line: int = field(default=0, compare=False)

    @property
    def projected_vars(self) -> Tuple[str, ...]:
        return _unique(
            (self.src_var, self.dst_var, *(var for _, var in self.properties))
        )


MappingDef = Union[NodeMappingDef, EdgeMappingDef]


@dataclass(frozen=True)
class MappingDocument:
    prefixes: PrefixMap
    node_mappings: Tuple[NodeMappingDef, ...]
    edge_mappings: Tuple[EdgeMappingDef, ...] = ()


def _unique(names: Tuple[str, ...]) -> Tuple[str, ...]:
    return tuple(dict.fromkeys(names))
