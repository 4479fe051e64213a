from dataclasses import dataclass, field
from typing import Iterator, Optional, Tuple, Union

from models.rdf import IRI, RdfTerm

# Path rewriting mints variables with this prefix; it can't start a
# SPARQL variable name, so they never collide with user variables.
INTERNAL_PREFIX = '.'


@dataclass(frozen=True)
class Variable:
    name: str

    @property
    def internal(self) -> bool:
        return self.name.startswith(INTERNAL_PREFIX)

    def __str__(self) -> str:
        return f'?{self.name}'


PatternTerm = Union[RdfTerm, Variable]


@dataclass(frozen=True)
class TriplePattern:
    subject: PatternTerm
    predicate: PatternTerm
    object: PatternTerm
    # Set on every link of a rewritten `p1 / p2 / ...` chain.
    path: Optional[Tuple[IRI, ...]] = None

    def variables(self) -> Iterator[Variable]:
        for term in (self.subject, self.predicate, self.object):
            if isinstance(term, Variable):
                yield term


@dataclass(frozen=True)
class Compare:
    left: PatternTerm
    op: str
    right: PatternTerm

    def variables(self) -> Iterator[Variable]:
        for term in (self.left, self.right):
            if isinstance(term, Variable):
                yield term


@dataclass(frozen=True)
class LangEquals:
    variable: Variable
    language: str

    def variables(self) -> Iterator[Variable]:
        yield self.variable


FilterExpr = Union[Compare, LangEquals]


@dataclass(frozen=True)
class Filter:
    expr: FilterExpr


@dataclass(frozen=True)
class OptionalPattern:
    pattern: 'GraphPattern'


PatternElement = Union[TriplePattern, OptionalPattern, Filter]


@dataclass(frozen=True)
class GraphPattern:
    elements: Tuple[PatternElement, ...] = field(default_factory=tuple)

    def triples(self) -> Iterator[TriplePattern]:
        for element in self.elements:
            if isinstance(element, TriplePattern):
                yield element
            elif isinstance(element, OptionalPattern):
                yield from element.pattern.triples()

    def filters(self) -> Tuple[Filter, ...]:
        return tuple(e for e in self.elements if isinstance(e, Filter))

    def without_filters(self) -> 'GraphPattern':
        return GraphPattern(
            tuple(e for e in self.elements if not isinstance(e, Filter))
        )

    @property
    def has_nested_optional(self) -> bool:
        return any(isinstance(e, OptionalPattern) for e in self.elements)

    def all_variables(self) -> Tuple[Variable, ...]:
        """Variables bound by triple patterns, internal ones included.

        Variables mentioned only inside a FILTER are not in scope and are
        left out.
        """
        seen: dict = {}
        for triple in self.triples():
            for variable in triple.variables():
                seen.setdefault(variable, None)
        return tuple(seen)

    def variables(self) -> Tuple[str, ...]:
        return tuple(v.name for v in self.all_variables() if not v.internal)
