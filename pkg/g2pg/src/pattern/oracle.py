"""Reference evaluator used to check the pattern engine.

Every basic graph pattern is solved by trying each assignment of its
variables to the terms of the graph; OPTIONAL and FILTER follow the
algebraic definitions of left join and filter. Nothing here uses the
graph indexes, so it shares no code path with ``pattern.engine``.
"""
from itertools import product
from typing import Dict, List, Sequence

from core.exceptions import CapacityExceeded
from models.bindings import BindingTable
from models.pattern import (Filter, GraphPattern, OptionalPattern,
                            TriplePattern, Variable)
from models.rdf import RdfTerm, Triple
from pattern.filters import holds
from rdf.graph import RdfGraph

MAX_TRIPLES = 50
MAX_VARIABLES = 8
MAX_ASSIGNMENTS = 2_000_000

Solution = Dict[str, RdfTerm]


def brute_force_evaluate(pattern: GraphPattern, graph: RdfGraph) -> BindingTable:
    if len(graph) > MAX_TRIPLES:
        raise CapacityExceeded(
            f'graph has {len(graph)} triples, the limit is {MAX_TRIPLES}'
        )
    variables = pattern.all_variables()
    if len(variables) > MAX_VARIABLES:
        raise CapacityExceeded(
            f'pattern has {len(variables)} variables, the limit is {MAX_VARIABLES}'
        )
    universe = sorted(graph.terms(), key=repr)
    triples = graph.triples

    columns = pattern.variables()
    solutions = _solve_group(pattern, universe, triples)
    return BindingTable.from_mappings(
        columns,
        ({name: term for name, term in s.items() if name in columns}
         for s in solutions),
    )


def _solve_group(group: GraphPattern,
                 universe: Sequence[RdfTerm],
                 triples: frozenset,
                 ) -> List[Solution]:
    solutions: List[Solution] = [{}]
    block: List[TriplePattern] = []
    for element in group.elements:
        if isinstance(element, TriplePattern):
            block.append(element)
            continue
        if block:
            solutions = join(solutions, _solve_bgp(block, universe, triples))
            block = []
        if isinstance(element, OptionalPattern):
            inner = element.pattern
            solutions = left_join(
                solutions,
                _solve_group(inner.without_filters(), universe, triples),
                inner.filters(),
            )
    if block:
        solutions = join(solutions, _solve_bgp(block, universe, triples))
    return [
        s for s in solutions
        if all(holds(f.expr, s) for f in group.filters())
    ]


def _solve_bgp(block: List[TriplePattern],
               universe: Sequence[RdfTerm],
               triples: frozenset,
               ) -> List[Solution]:
    variables = list(dict.fromkeys(
        v.name for triple in block for v in triple.variables()
    ))
    if len(universe) ** len(variables) > MAX_ASSIGNMENTS:
        raise CapacityExceeded(
            f'{len(universe)} terms over {len(variables)} variables'
        )
    solutions = []
    for values in product(universe, repeat=len(variables)):
        assignment = dict(zip(variables, values))
        if all(_instantiate(t, assignment) in triples for t in block):
            solutions.append(assignment)
    return solutions


def _instantiate(triple: TriplePattern, assignment: Solution) -> Triple:
    return Triple(*(
        assignment[term.name] if isinstance(term, Variable) else term
        for term in (triple.subject, triple.predicate, triple.object)
    ))


def _compatible(left: Solution, right: Solution) -> bool:
    return all(left[name] == term for name, term in right.items() if name in left)


def join(left: List[Solution], right: List[Solution]) -> List[Solution]:
    return [
        {**a, **b} for a in left for b in right if _compatible(a, b)
    ]


def left_join(left: List[Solution],
              right: List[Solution],
              condition: Sequence[Filter],
              ) -> List[Solution]:
    result = []
    for a in left:
        matched = [
            merged for merged in ({**a, **b} for b in right if _compatible(a, b))
            if all(holds(f.expr, merged) for f in condition)
        ]
        result.extend(matched or [a])
    return result
