import re
from decimal import MAX_EMAX, MIN_EMIN, Decimal, localcontext
from logging import getLogger
from typing import Callable, Optional

from dateutil import parser as date_parser

from core.exceptions import MalformedLexical
from models.pg import PgValue
from models.rdf import XSD, Literal

logger = getLogger(__name__)

INTEGER_TYPES = frozenset(XSD + name for name in (
    'integer', 'int', 'long', 'short', 'byte',
    'nonNegativeInteger', 'nonPositiveInteger', 'positiveInteger',
    'negativeInteger', 'unsignedLong', 'unsignedInt', 'unsignedShort',
    'unsignedByte',
))
DECIMAL_TYPES = frozenset(XSD + name for name in ('decimal', 'float', 'double'))
BOOLEAN_TYPE = XSD + 'boolean'
DATETIME_TYPES = frozenset(XSD + name for name in ('date', 'dateTime'))

_INTEGER = re.compile(r'^[+-]?\d+$')
_NUMBER = re.compile(r'^(?:[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?|[+-]?INF|NaN)$')
_DATE = re.compile(r'^-?(?P<core>\d{4,}-\d{2}-\d{2})(?:Z|[+-]\d{2}:\d{2})?$')
_DATETIME = re.compile(
    r'^-?(?P<core>\d{4,}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}(?:\.\d+)?)(?:Z|[+-]\d{2}:\d{2})?$'
)
_BOOLEANS = {'true': True, '1': True, 'false': False, '0': False}


def _integer(lexical: str) -> PgValue:
    if not _INTEGER.match(lexical):
        raise MalformedLexical(f'not an integer: {lexical!r}')
    try:
        return PgValue.integer(int(lexical))
    except ValueError:
        # int() refuses digit strings beyond sys.get_int_max_str_digits().
        raise MalformedLexical(f'integer too long: {len(lexical)} digits') from None


def _decimal(lexical: str) -> PgValue:
    if not _NUMBER.match(lexical):
        raise MalformedLexical(f'not a number: {lexical!r}')
    try:
        value = Decimal(lexical.replace('INF', 'Infinity'))
        if value.is_nan():
            return PgValue.text(lexical)
        if value.is_finite():
            with localcontext() as context:
                context.Emax, context.Emin = MAX_EMAX, MIN_EMIN
                # 1.0 and 1.00 are one value; keep a single spelling for it.
                value = value.normalize()
                if value.as_tuple().exponent > 0 and value.adjusted() < 28:
                    value = value.quantize(Decimal(1))
    except ArithmeticError as exc:
        raise MalformedLexical(f'number out of range: {lexical!r}') from exc
    return PgValue.decimal(value)


def _boolean(lexical: str) -> PgValue:
    try:
        return PgValue.boolean(_BOOLEANS[lexical])
    except KeyError:
        raise MalformedLexical(f'not a boolean: {lexical!r}') from None


def _datetime(lexical: str, datatype: str) -> PgValue:
    pattern = _DATE if datatype.endswith('#date') else _DATETIME
    match = pattern.match(lexical)
    if not match:
        raise MalformedLexical(f'not an xsd date or dateTime: {lexical!r}')
    try:
        date_parser.isoparse(match.group('core'))
    except (ValueError, OverflowError) as exc:
        raise MalformedLexical(f'invalid date {lexical!r}: {exc}') from None
    return PgValue.datetime(lexical)


def value_from_literal(term: Literal,
                       on_warning: Optional[Callable[[str], None]] = None,
                       ) -> PgValue:
    """Map a literal to a typed property value, falling back to its text."""
    lexical = term.lexical
    datatype = term.datatype
    stripped = lexical.strip()
    try:
        if datatype in INTEGER_TYPES:
            return _integer(stripped)
        if datatype in DECIMAL_TYPES:
            return _decimal(stripped)
        if datatype == BOOLEAN_TYPE:
            return _boolean(stripped)
        if datatype in DATETIME_TYPES:
            return _datetime(stripped, datatype)
    except MalformedLexical as exc:
        logger.debug('Falling back to text: %s', exc)
        if on_warning is not None:
            on_warning(f'malformed {datatype.rsplit("#", 1)[-1]} literal')
    return PgValue.text(lexical)
