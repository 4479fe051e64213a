"""Tokens and term syntax for RDF patterns, also used to pre-scan data files."""
import re
from typing import List, Mapping, NamedTuple, Optional, Type

from core.exceptions import PositionedError, UnknownPrefix, UnsupportedFeature
from models.mapping import expand_prefixed_name
from models.rdf import (IRI, RDF_LANG_STRING, XSD_BOOLEAN, XSD_DECIMAL,
                        XSD_DOUBLE, XSD_INTEGER, Literal, is_absolute_iri)

PN_PREFIX = r'[A-Za-z](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?'
_PN_CHAR = r'(?:[A-Za-z0-9_:\-]|%[0-9A-Fa-f]{2})'
PN_LOCAL = (r'(?:[A-Za-z0-9_:]|%[0-9A-Fa-f]{2})'
            rf'(?:(?:[A-Za-z0-9_.:\-]|%[0-9A-Fa-f]{{2}})*{_PN_CHAR})?')

TOKEN_SPEC = [
    ('WS', r'[ \t\r\f]+'),
    ('NEWLINE', r'\n'),
    ('COMMENT', r'#[^\n]*'),
    ('IRIREF', r'<(?:[^<>"{}|^`\\\x00-\x20]|\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8})*>'),
    ('LONG_STRING', r'"""(?:[^"\\]|\\.|"(?!""))*"""'
                    r"|'''(?:[^'\\]|\\.|'(?!''))*'''"),
    ('STRING', r'"(?:[^"\\\n\r]|\\.)*"' r"|'(?:[^'\\\n\r]|\\.)*'"),
    ('DIRECTIVE', r'@(?:prefix|base)\b'),
    ('LANGTAG', r'@[A-Za-z]+(?:-[A-Za-z0-9]+)*'),
    ('DTYPE', r'\^\^'),
    ('VAR', r'[?$][A-Za-z0-9_]+'),
    ('BNODE', r'_:[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?'),
    ('NUMBER', r'[+-]?(?:[0-9]+\.[0-9]*[eE][+-]?[0-9]+|\.[0-9]+[eE][+-]?[0-9]+'
               r'|[0-9]+[eE][+-]?[0-9]+|[0-9]*\.[0-9]+|[0-9]+)'),
    ('PNAME', rf'(?:{PN_PREFIX})?:(?:{PN_LOCAL})?'),
    ('NAME', r'[A-Za-z_][A-Za-z0-9_]*'),
    ('OP', r'!=|&&|\|\||<=|>=|[.;,{}()\[\]/|=*+?!^<>]'),
    ('ERROR', r'.'),
]
_MASTER = re.compile('|'.join(f'(?P<{kind}>{regex})' for kind, regex in TOKEN_SPEC))
_SKIPPED = {'WS', 'NEWLINE', 'COMMENT'}

_STRING_ESCAPES = {
    't': '\t', 'b': '\b', 'n': '\n', 'r': '\r', 'f': '\f',
    '"': '"', "'": "'", '\\': '\\',
}
_ESCAPE = re.compile(r'\\(u[0-9A-Fa-f]{4}|U[0-9A-Fa-f]{8}|.)', re.DOTALL)


class Token(NamedTuple):
    kind: str
    value: str
    line: int
    column: int


def tokenize(text: str,
             first_line: int = 1,
             error: Type[PositionedError] = PositionedError,
             ) -> List[Token]:
    tokens = []
    line, line_start = first_line, 0
    for match in _MASTER.finditer(text):
        kind = match.lastgroup
        value = match.group()
        column = match.start() - line_start + 1
        if kind == 'ERROR':
            raise error(f'unexpected character {value!r}', line, column)
        if kind not in _SKIPPED:
            tokens.append(Token(kind, value, line, column))
        newlines = value.count('\n')
        if newlines:
            line += newlines
            line_start = match.start() + value.rindex('\n') + 1
    return tokens


def unescape(body: str, error: Type[PositionedError], token: Token) -> str:
    def replace(match: re.Match) -> str:
        escape = match.group(1)
        if escape[0] in 'uU' and len(escape) > 1:
            code_point = int(escape[1:], 16)
            if code_point > 0x10FFFF or 0xD800 <= code_point <= 0xDFFF:
                raise error(f'escape \\{escape} is not a Unicode scalar value',
                            token.line, token.column)
            return chr(code_point)
        try:
            return _STRING_ESCAPES[escape]
        except KeyError:
            raise error(f'invalid escape \\{escape}', token.line, token.column)
    return _ESCAPE.sub(replace, body)


def token_body(token: Token) -> str:
    quote = 3 if token.kind == 'LONG_STRING' else 1
    return token.value[quote:-quote]


def check_escapes(tokens: List[Token], error: Type[PositionedError]) -> None:
    """Raise at the first IRI or string whose escapes do not decode."""
    for token in tokens:
        if token.kind in ('IRIREF', 'STRING', 'LONG_STRING'):
            unescape(token_body(token), error, token)


class TokenStream:
    def __init__(self,
                 tokens: List[Token],
                 error: Type[PositionedError],
                 end: tuple = (None, None),
                 ) -> None:
        self.tokens = tokens
        self.position = 0
        self.error_cls = error
        self.end = end

    @property
    def at_end(self) -> bool:
        return self.position >= len(self.tokens)

    def peek(self, offset: int = 0) -> Optional[Token]:
        index = self.position + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def next(self) -> Token:
        token = self.peek()
        if token is None:
            raise self.error('unexpected end of input')
        self.position += 1
        return token

    def at(self, kind: str, value: str | None = None) -> bool:
        token = self.peek()
        return token is not None and _matches(token, kind, value)

    def accept(self, kind: str, value: str | None = None) -> Optional[Token]:
        if self.at(kind, value):
            return self.next()
        return None

    def expect(self, kind: str, value: str | None = None) -> Token:
        token = self.peek()
        if token is None or not _matches(token, kind, value):
            raise self.error(f"expected {value or kind}", token)
        return self.next()

    def error(self,
              message: str,
              token: Optional[Token] = None,
              ) -> PositionedError:
        if token is None:
            token = self.peek()
        if token is None:
            line, column = self.end
            return self.error_cls(message, line, column)
        if message.startswith('expected'):
            message = f'{message}, found {token.value!r}'
        return self.error_cls(message, token.line, token.column)


def _matches(token: Token, kind: str, value: str | None) -> bool:
    if token.kind != kind:
        return False
    if value is None:
        return True
    if kind == 'NAME':
        return token.value.upper() == value.upper()
    return token.value == value


def is_keyword(token: Optional[Token], *names: str) -> bool:
    return (token is not None and token.kind == 'NAME'
            and token.value.upper() in names)


class TermParser:
    """Reads IRIs and literals off a token stream.

    Subclasses choose the error type and how prefixed names resolve.
    """
    error_cls: Type[PositionedError] = PositionedError

    def __init__(self, stream: TokenStream, prefixes: Mapping[str, str]) -> None:
        self.stream = stream
        self.prefixes = prefixes

    def unknown_prefix(self, prefix: str, token: Token) -> PositionedError:
        return self.error_cls(f"unknown prefix '{prefix}:'", token.line, token.column)

    def unsupported(self, token: Token, name: str | None = None) -> UnsupportedFeature:
        return UnsupportedFeature(name or token.value, token.line, token.column)

    def is_iri_start(self, token: Optional[Token]) -> bool:
        return token is not None and token.kind in ('IRIREF', 'PNAME')

    def is_literal_start(self, token: Optional[Token]) -> bool:
        if token is None:
            return False
        if token.kind in ('STRING', 'LONG_STRING', 'NUMBER'):
            return True
        return token.kind == 'NAME' and token.value in ('true', 'false')

    def read_iri(self, token: Token) -> IRI:
        if token.kind == 'IRIREF':
            value = unescape(token_body(token), self.error_cls, token)
            if not is_absolute_iri(value):
                raise self.relative_iri(token)
            return IRI(value)
        if token.kind == 'PNAME':
            try:
                value = expand_prefixed_name(token.value, self.prefixes)
            except UnknownPrefix as exc:
                raise self.unknown_prefix(exc.prefix, token) from None
            if not is_absolute_iri(value):
                raise self.error_cls(f'invalid IRI {value!r}', token.line, token.column)
            return IRI(value)
        raise self.stream.error('expected an IRI', token)

    def relative_iri(self, token: Token) -> PositionedError:
        return self.unsupported(token, f'relative IRI {token.value}')

    def read_literal(self, token: Token) -> Literal:
        if token.kind == 'NUMBER':
            return Literal(token.value, _number_datatype(token.value))
        if token.kind == 'NAME':
            return Literal(token.value, XSD_BOOLEAN)
        lexical = unescape(token_body(token), self.error_cls, token)
        language = self.stream.accept('LANGTAG')
        if language is not None:
            return Literal(lexical, RDF_LANG_STRING, language.value[1:])
        if self.stream.accept('DTYPE'):
            datatype = self.read_iri(self.stream.next())
            if datatype.value == RDF_LANG_STRING:
                raise self.stream.error('rdf:langString literal without a language tag')
            return Literal(lexical, datatype.value)
        return Literal(lexical)


def _number_datatype(lexical: str) -> str:
    if 'e' in lexical or 'E' in lexical:
        return XSD_DOUBLE
    if '.' in lexical:
        return XSD_DECIMAL
    return XSD_INTEGER
