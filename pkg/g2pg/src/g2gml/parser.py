import re
import textwrap
from logging import getLogger
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional, Tuple

from core.exceptions import MappingSyntaxError
from models.mapping import (EdgeMappingDef, MappingDocument, NodeMappingDef,
                            PrefixMap, PropertyList)
from models.pattern import GraphPattern
from models.rdf import is_absolute_iri
from pattern.parser import parse_rdf_pattern
from rdf.syntax import PN_PREFIX

logger = getLogger(__name__)

NAME = r'[A-Za-z_][A-Za-z0-9_]*'

_PREFIX_LINE = re.compile(
    rf'^PREFIX\s+(?P<name>(?:{PN_PREFIX})?):\s*<(?P<iri>[^<>"{{}}|^`\\\x00-\x20]*)>\s*$',
    re.IGNORECASE,
)
_PREFIX_KEYWORD = re.compile(r'^PREFIX\b', re.IGNORECASE)
# A '#' starts a comment unless it sits inside an IRI or a string.
_COMMENT_SCAN = re.compile(
    r'(<[^<>"{}|^`\\\x00-\x20]*>)'
    r'|("(?:[^"\\\n]|\\.)*")'
    r"|('(?:[^'\\\n]|\\.)*')"
    r'|(#.*$)'
)
_PG_TOKEN = re.compile(
    rf'(?P<WS>\s+)|(?P<ARROW><-|->)|(?P<PUNCT>[()\[\]{{}}:,\-])|(?P<NAME>{NAME})'
    r'|(?P<LITERAL>"[^"]*"|\'[^\']*\'|[-+]?\d[\w.]*)|(?P<ERROR>.)'
)
_LOOKS_LIKE_RDF = re.compile(
    rf'^(?:[?$]|<|_:|OPTIONAL\b|FILTER\b|(?:{PN_PREFIX})?:)', re.IGNORECASE
)


def strip_comment(line: str) -> str:
    for match in _COMMENT_SCAN.finditer(line):
        if match.group(4) is not None:
            return line[:match.start()]
    return line


class PgToken(NamedTuple):
    kind: str
    value: str
    column: int


class PgPatternParser:
    """Parses the Cypher-like property graph side of a mapping.

    node := '(' var ':' label [ '{' key ':' var ( ',' key ':' var )* '}' ] ')'
    edge := node '-' '[' ':' label [ props ] ']' '->' node
    """

    def __init__(self, line: str, lineno: int = 1, column_offset: int = 0) -> None:
        self.line = line
        self.lineno = lineno
        self.tokens: List[PgToken] = []
        for match in _PG_TOKEN.finditer(line):
            kind = match.lastgroup
            column = match.start() + 1 + column_offset
            if kind == 'ERROR':
                raise MappingSyntaxError(
                    f'unexpected character {match.group()!r}', lineno, column
                )
            if kind != 'WS':
                self.tokens.append(PgToken(kind, match.group(), column))
        self.position = 0
        self.end_column = len(line) + 1 + column_offset

    def error(self, message: str, token: Optional[PgToken] = None) -> MappingSyntaxError:
        if token is None:
            token = self.peek()
        column = token.column if token else self.end_column
        if token is not None and message.startswith('expected'):
            message = f'{message}, found {token.value!r}'
        return MappingSyntaxError(message, self.lineno, column)

    def peek(self) -> Optional[PgToken]:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def next(self) -> PgToken:
        token = self.peek()
        if token is None:
            raise self.error('unexpected end of pattern')
        self.position += 1
        return token

    def at(self, value: str) -> bool:
        token = self.peek()
        return token is not None and token.kind != 'NAME' and token.value == value

    def expect(self, value: str) -> PgToken:
        if not self.at(value):
            raise self.error(f"expected '{value}'")
        return self.next()

    def name(self, what: str) -> PgToken:
        token = self.peek()
        if token is None or token.kind != 'NAME':
            raise self.error(f'expected {what}')
        return self.next()

    def finish(self) -> None:
        if self.peek() is not None:
            raise self.error('unexpected trailing input')

    def node(self) -> Tuple[PgToken, PgToken, List[Tuple[PgToken, PgToken]]]:
        self.expect('(')
        var = self.name('a variable name')
        self.expect(':')
        label = self.name('a label')
        if self.at(':'):
            raise self.error('multiple labels are not supported')
        properties = self.properties() if self.at('{') else []
        self.expect(')')
        return var, label, properties

    def properties(self) -> List[Tuple[PgToken, PgToken]]:
        self.expect('{')
        properties = []
        while True:
            key = self.name('a property key')
            self.expect(':')
            token = self.peek()
            if token is not None and token.kind == 'LITERAL':
                raise self.error('literal property values are not supported')
            var = self.name('a variable name')
            properties.append((key, var))
            if not self.at(','):
                break
            self.next()
        self.expect('}')
        return properties

    def edge(self):
        src = self.node()
        if self.at('<-'):
            raise self.error('right-to-left edges are not supported')
        self.expect('-')
        self.expect('[')
        token = self.peek()
        if token is not None and token.kind == 'NAME':
            raise self.error('edge variables are not supported')
        self.expect(':')
        label = self.name('an edge label')
        properties = self.properties() if self.at('{') else []
        self.expect(']')
        if self.at('-'):
            raise self.error('undirected edges are not supported')
        self.expect('->')
        dst = self.node()
        self.finish()
        return src, label, properties, dst


def _is_edge_line(line: str) -> bool:
    return bool(re.search(r'\)\s*(?:<-|-)', line))


def parse_pg_node_pattern(line: str) -> Tuple[str, str, PropertyList]:
    parser = PgPatternParser(line)
    var, label, properties = parser.node()
    parser.finish()
    return var.value, label.value, _property_list(properties)


def parse_pg_edge_pattern(line: str):
    parser = PgPatternParser(line)
    (src_var, src_label, _), label, properties, (dst_var, dst_label, _) = parser.edge()
    return ((src_var.value, src_label.value), label.value,
            _property_list(properties), (dst_var.value, dst_label.value))


def _property_list(properties) -> PropertyList:
    return tuple((key.value, var.value) for key, var in properties)


class _Block(NamedTuple):
    lineno: int
    header: str
    lines: List[Tuple[int, str]]


class DocumentParser:
    def __init__(self, source: str) -> None:
        self.source = source
        self.prefixes = PrefixMap()
        self.blocks: List[_Block] = []
        self.node_mappings: List[NodeMappingDef] = []
        self.edge_mappings: List[Tuple[EdgeMappingDef, Dict[str, int]]] = []

    def parse(self) -> MappingDocument:
        lines = self.source.split('\n')
        for lineno, raw in enumerate(lines, 1):
            text = strip_comment(raw).rstrip()
            if not text.strip():
                continue
            if raw[0] in ' \t':
                if not self.blocks:
                    raise MappingSyntaxError(
                        'RDF pattern line outside a mapping', lineno,
                        len(raw) - len(raw.lstrip()) + 1,
                    )
                self.blocks[-1].lines.append((lineno, text))
            elif _PREFIX_KEYWORD.match(text):
                self.prefix(text, lineno)
            elif _LOOKS_LIKE_RDF.match(text):
                raise MappingSyntaxError(
                    'RDF pattern line must be indented', lineno, 1
                )
            else:
                self.blocks.append(_Block(lineno, text, []))

        for block in self.blocks:
            self.mapping(block)
        if not self.node_mappings:
            raise MappingSyntaxError(
                'a mapping document needs at least one node mapping',
                len(lines), 1,
            )
        labels = {mapping.label for mapping in self.node_mappings}
        for edge, columns in self.edge_mappings:
            for side in ('src', 'dst'):
                label = getattr(edge, f'{side}_label')
                if label not in labels:
                    raise MappingSyntaxError(
                        f"edge endpoint label '{label}' has no node mapping",
                        edge.line, columns[side],
                    )
        document = MappingDocument(
            prefixes=self.prefixes,
            node_mappings=tuple(self.node_mappings),
            edge_mappings=tuple(edge for edge, _ in self.edge_mappings),
        )
        logger.info(
            'Parsed mapping document: %s prefixes, %s node mappings, %s edge mappings',
            len(document.prefixes), len(document.node_mappings),
            len(document.edge_mappings),
        )
        return document

    def prefix(self, text: str, lineno: int) -> None:
        if self.blocks:
            raise MappingSyntaxError(
                'PREFIX declarations must precede the first mapping', lineno, 1
            )
        match = _PREFIX_LINE.match(text)
        if not match:
            raise MappingSyntaxError('malformed PREFIX declaration', lineno, 1)
        name, iri = match.group('name'), match.group('iri')
        if name in self.prefixes:
            raise MappingSyntaxError(
                f"prefix '{name}:' is declared twice", lineno, match.start('name') + 1
            )
        if not is_absolute_iri(iri):
            raise MappingSyntaxError(
                f'prefix IRI must be absolute: <{iri}>', lineno, match.start('iri')
            )
        self.prefixes.declare(name, iri)

    def mapping(self, block: _Block) -> None:
        if not block.lines:
            raise MappingSyntaxError(
                'mapping has no indented RDF pattern', block.lineno, 1
            )
        pattern, text = self.rdf_pattern(block)
        variables = set(pattern.variables())
        parser = PgPatternParser(block.header, block.lineno)
        if _is_edge_line(block.header):
            src, label, properties, dst = parser.edge()
            self.check_properties(properties, variables, block.lineno)
            for var in (src[0], dst[0]):
                self.check_variable(var, variables, block.lineno)
            if src[0].value == dst[0].value:
                raise MappingSyntaxError(
                    'edge endpoints must use different variables',
                    block.lineno, dst[0].column,
                )
            edge = EdgeMappingDef(
                src_var=src[0].value, src_label=src[1].value,
                edge_label=label.value,
                dst_var=dst[0].value, dst_label=dst[1].value,
                properties=_property_list(properties),
                rdf_pattern_text=text, pattern=pattern, line=block.lineno,
            )
            self.edge_mappings.append(
                (edge, {'src': src[1].column, 'dst': dst[1].column})
            )
            return

        var, label, properties = parser.node()
        parser.finish()
        self.check_variable(var, variables, block.lineno)
        self.check_properties(properties, variables, block.lineno)
        if any(m.label == label.value for m in self.node_mappings):
            raise MappingSyntaxError(
                f"label '{label.value}' already has a node mapping",
                block.lineno, label.column,
            )
        self.node_mappings.append(NodeMappingDef(
            node_var=var.value, label=label.value,
            properties=_property_list(properties),
            rdf_pattern_text=text, pattern=pattern, line=block.lineno,
        ))

    def rdf_pattern(self, block: _Block) -> Tuple[GraphPattern, str]:
        first, last = block.lines[0][0], block.lines[-1][0]
        by_line = dict(block.lines)
        # Comment-only lines inside the block become blank so positions hold.
        spaced = '\n'.join(by_line.get(n, '') for n in range(first, last + 1))
        pattern = parse_rdf_pattern(spaced, self.prefixes, first_line=first)
        text = textwrap.dedent('\n'.join(line for _, line in block.lines))
        return pattern, text

    def check_variable(self, var: PgToken, variables: set, lineno: int) -> None:
        if var.value not in variables:
            raise MappingSyntaxError(
                f"variable '{var.value}' does not occur in the RDF pattern",
                lineno, var.column,
            )

    def check_properties(self, properties, variables: set, lineno: int) -> None:
        seen = set()
        for key, var in properties:
            if key.value in seen:
                raise MappingSyntaxError(
                    f"property key '{key.value}' is used twice",
                    lineno, key.column,
                )
            seen.add(key.value)
            self.check_variable(var, variables, lineno)



def parse_document(source: str) -> MappingDocument:
    return DocumentParser(source).parse()


def load_document(path: Path) -> MappingDocument:
    logger.info('Reading mapping document %s', path)
    return parse_document(Path(path).read_text(encoding='utf-8'))
