from logging import getLogger
from typing import Dict, Iterator, List

from models.bindings import BindingTable
from models.pattern import (Filter, GraphPattern, OptionalPattern,
                            PatternTerm, TriplePattern, Variable)
from models.rdf import RdfTerm
from pattern.filters import holds
from rdf.graph import RdfGraph

logger = getLogger(__name__)

Solution = Dict[str, RdfTerm]


def evaluate(pattern: GraphPattern, graph: RdfGraph) -> BindingTable:
    """All solutions of the pattern, as SELECT DISTINCT * would return them.

    Triple patterns are joined left to right, each one probing the graph
    indexes with the terms already bound. Internal path variables are
    projected away.
    """
    solutions = _evaluate_group(pattern, graph, [{}])
    table = BindingTable(pattern.variables())
    for solution in solutions:
        table.add({
            name: term for name, term in solution.items()
            if name in table.columns
        })
    logger.debug('Pattern evaluated to %s rows', len(table))
    return table


def _evaluate_group(group: GraphPattern,
                    graph: RdfGraph,
                    seeds: List[Solution],
                    ) -> List[Solution]:
    solutions = seeds
    filters: List[Filter] = []
    for element in group.elements:
        if isinstance(element, TriplePattern):
            solutions = [
                extended
                for solution in solutions
                for extended in _match_triple(element, graph, solution)
            ]
        elif isinstance(element, OptionalPattern):
            solutions = _left_join(element.pattern, graph, solutions)
        else:
            filters.append(element)
        if not solutions:
            break
    # Group filters apply to the whole group, after its joins.
    if filters:
        solutions = [
            solution for solution in solutions
            if all(holds(f.expr, solution) for f in filters)
        ]
    return solutions


def _left_join(optional: GraphPattern,
               graph: RdfGraph,
               solutions: List[Solution],
               ) -> List[Solution]:
    result: List[Solution] = []
    if not optional.has_nested_optional:
        # For a flat group, evaluating it under each solution gives exactly
        # the compatible extensions, with the group's filters as the
        # left-join condition.
        for solution in solutions:
            extensions = _evaluate_group(optional, graph, [solution])
            result.extend(extensions or [solution])
        return result

    condition = optional.filters()
    inner = _evaluate_group(optional.without_filters(), graph, [{}])
    for solution in solutions:
        extensions = []
        for candidate in inner:
            merged = merge(solution, candidate)
            if merged is not None and all(holds(f.expr, merged) for f in condition):
                extensions.append(merged)
        result.extend(extensions or [solution])
    return result


def _match_triple(triple: TriplePattern,
                  graph: RdfGraph,
                  solution: Solution,
                  ) -> Iterator[Solution]:
    positions = (triple.subject, triple.predicate, triple.object)
    bound = [_bound(term, solution) for term in positions]
    for found in graph.match(*bound):
        extended = dict(solution)
        if all(_bind(extended, term, value) for term, value in zip(positions, found)):
            yield extended


def _bound(term: PatternTerm, solution: Solution):
    if isinstance(term, Variable):
        return solution.get(term.name)
    return term


def _bind(solution: Solution, term: PatternTerm, value: RdfTerm) -> bool:
    if not isinstance(term, Variable):
        return True
    current = solution.setdefault(term.name, value)
    return current == value


def compatible(left: Solution, right: Solution) -> bool:
    return all(left[name] == term for name, term in right.items() if name in left)


def merge(left: Solution, right: Solution) -> Solution | None:
    if not compatible(left, right):
        return None
    return {**left, **right}
