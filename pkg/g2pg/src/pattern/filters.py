from decimal import Decimal, InvalidOperation
from typing import Mapping, Optional

from models.pattern import Compare, FilterExpr, LangEquals, PatternTerm, Variable
from models.rdf import XSD, Literal, RdfTerm

NUMERIC_DATATYPES = frozenset(XSD + name for name in (
    'integer', 'decimal', 'float', 'double', 'int', 'long', 'short', 'byte',
    'nonNegativeInteger', 'nonPositiveInteger', 'positiveInteger',
    'negativeInteger', 'unsignedLong', 'unsignedInt', 'unsignedShort',
    'unsignedByte',
))

Solution = Mapping[str, RdfTerm]


def numeric_value(term: RdfTerm) -> Optional[Decimal]:
    if not isinstance(term, Literal) or term.datatype not in NUMERIC_DATATYPES:
        return None
    try:
        value = Decimal(term.lexical.strip())
    except InvalidOperation:
        return None
    return None if value.is_nan() else value


def terms_equal(left: RdfTerm, right: RdfTerm) -> bool:
    """Term identity, except numeric literals compare in value space."""
    left_number, right_number = numeric_value(left), numeric_value(right)
    if left_number is not None and right_number is not None:
        return left_number == right_number
    return left == right


def language_matches(language: Optional[str], wanted: str) -> bool:
    """Case-insensitive; a bare primary tag like ``ja`` also matches ``ja-jp``."""
    actual = (language or '').lower()
    wanted = wanted.lower()
    if actual == wanted:
        return True
    return bool(wanted) and '-' not in wanted and actual.split('-')[0] == wanted


def resolve(term: PatternTerm, solution: Solution) -> Optional[RdfTerm]:
    if isinstance(term, Variable):
        return solution.get(term.name)
    return term


def holds(expr: FilterExpr, solution: Solution) -> bool:
    """Evaluate a filter; an unbound operand is an error, which counts as false."""
    if isinstance(expr, LangEquals):
        term = solution.get(expr.variable.name)
        if not isinstance(term, Literal):
            return False
        return language_matches(term.language, expr.language)
    if isinstance(expr, Compare):
        left, right = resolve(expr.left, solution), resolve(expr.right, solution)
        if left is None or right is None:
            return False
        equal = terms_equal(left, right)
        return equal if expr.op == '=' else not equal
    raise TypeError(f'unknown filter expression {expr!r}')
