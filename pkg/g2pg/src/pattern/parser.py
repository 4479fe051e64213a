from itertools import count
from typing import List, Mapping, Optional

from core.exceptions import MappingSyntaxError, UnknownPrefix
from models.pattern import (INTERNAL_PREFIX, Compare, Filter, FilterExpr,
                            GraphPattern, LangEquals, OptionalPattern,
                            PatternElement, PatternTerm, TriplePattern,
                            Variable)
from models.rdf import IRI, RDF_TYPE, Literal
from rdf.syntax import TermParser, Token, TokenStream, is_keyword, tokenize

UNSUPPORTED_KEYWORDS = {
    'UNION', 'MINUS', 'BIND', 'VALUES', 'GRAPH', 'SERVICE', 'SELECT',
    'CONSTRUCT', 'ASK', 'DESCRIBE', 'WHERE', 'EXISTS', 'NOT',
}
UNSUPPORTED_PATH_OPS = {'|', '^', '*', '+', '?', '!', '('}


class PatternParser(TermParser):
    """Recursive-descent parser for the SPARQL subset G2GML patterns use.

    group   := ( triples | OPTIONAL '{' group '}' | FILTER '(' expr ')' | '.' )*
    triples := subject verb objects ( ';' [ verb objects ] )*
    verb    := 'a' | ?var | iri ( '/' iri )*
    """
    error_cls = MappingSyntaxError

    def __init__(self, stream: TokenStream, prefixes: Mapping[str, str]) -> None:
        super().__init__(stream, prefixes)
        self._fresh = count()

    def unknown_prefix(self, prefix: str, token: Token) -> UnknownPrefix:
        return UnknownPrefix(prefix, token.line, token.column)

    def relative_iri(self, token: Token) -> MappingSyntaxError:
        return MappingSyntaxError(
            f'IRI must be absolute: {token.value}', token.line, token.column
        )

    def parse(self) -> GraphPattern:
        pattern = self.group(closing=None)
        if not self.stream.at_end:
            raise self.stream.error('unexpected token')
        return pattern

    def group(self, closing: Optional[str]) -> GraphPattern:
        elements: List[PatternElement] = []
        while True:
            token = self.stream.peek()
            if token is None:
                if closing is not None:
                    raise self.stream.error(f"expected '{closing}'")
                break
            if token.kind == 'OP' and token.value == closing:
                break
            if token.kind == 'OP' and token.value == '.':
                self.stream.next()
            elif is_keyword(token, 'OPTIONAL'):
                self.stream.next()
                self.stream.expect('OP', '{')
                elements.append(OptionalPattern(self.group(closing='}')))
                self.stream.expect('OP', '}')
            elif is_keyword(token, 'FILTER'):
                self.stream.next()
                elements.append(Filter(self.filter_expression()))
            elif is_keyword(token, *UNSUPPORTED_KEYWORDS):
                raise self.unsupported(token, token.value.upper())
            elif token.kind == 'OP' and token.value == '{':
                raise self.unsupported(token, 'nested group')
            else:
                elements.extend(self.triples_block())
        return GraphPattern(tuple(elements))

    def triples_block(self) -> List[TriplePattern]:
        triples: List[TriplePattern] = []
        subject = self.subject()
        while True:
            verb = self.verb()
            while True:
                triples.extend(self.make_triples(subject, verb, self.object()))
                if not self.stream.accept('OP', ','):
                    break
            if not self.stream.accept('OP', ';'):
                break
            while self.stream.accept('OP', ';'):
                pass
            if self.stream.at('OP', '.') or self.stream.at('OP', '}') or self.stream.at_end:
                break
        if not (self.stream.at_end or self.stream.at('OP', '.') or self.stream.at('OP', '}')
                or is_keyword(self.stream.peek(), 'OPTIONAL', 'FILTER')):
            raise self.stream.error("expected '.'")
        return triples

    def subject(self) -> PatternTerm:
        token = self.stream.next()
        if token.kind == 'VAR':
            return Variable(token.value[1:])
        if self.is_iri_start(token):
            return self.read_iri(token)
        self.reject_term(token)
        raise self.stream.error('expected a subject', token)

    def verb(self):
        token = self.stream.next()
        if token.kind == 'VAR':
            return Variable(token.value[1:])
        if token.kind == 'NAME' and token.value == 'a':
            return IRI(RDF_TYPE)
        if self.is_iri_start(token):
            steps = [self.read_iri(token)]
            while self.stream.accept('OP', '/'):
                step = self.stream.next()
                if not self.is_iri_start(step):
                    if step.kind == 'NAME' and step.value == 'a':
                        steps.append(IRI(RDF_TYPE))
                        continue
                    raise self.unsupported_path(step)
                steps.append(self.read_iri(step))
            following = self.stream.peek()
            if following is not None and following.kind == 'OP' \
                    and following.value in UNSUPPORTED_PATH_OPS:
                raise self.unsupported_path(following)
            return steps[0] if len(steps) == 1 else tuple(steps)
        if token.kind == 'OP' and token.value in UNSUPPORTED_PATH_OPS:
            raise self.unsupported_path(token)
        raise self.stream.error('expected a predicate', token)

    def object(self) -> PatternTerm:
        token = self.stream.next()
        if token.kind == 'VAR':
            return Variable(token.value[1:])
        if self.is_iri_start(token):
            return self.read_iri(token)
        if self.is_literal_start(token):
            return self.read_literal(token)
        self.reject_term(token)
        raise self.stream.error('expected an object', token)

    def reject_term(self, token: Token) -> None:
        if token.kind == 'BNODE':
            raise self.unsupported(token, 'blank node in pattern')
        if token.kind == 'OP' and token.value == '[':
            raise self.unsupported(token, 'blank node property list')
        if token.kind == 'OP' and token.value == '(':
            raise self.unsupported(token, 'collection')
        if is_keyword(token, *UNSUPPORTED_KEYWORDS):
            raise self.unsupported(token, token.value.upper())

    def unsupported_path(self, token: Token):
        return self.unsupported(token, f'property path operator {token.value}')

    def make_triples(self, subject, verb, obj) -> List[TriplePattern]:
        if not isinstance(verb, tuple):
            return [TriplePattern(subject, verb, obj)]
        # p1 / p2 / ... / pk becomes a chain through fresh internal variables.
        links = [subject]
        links.extend(
            Variable(f'{INTERNAL_PREFIX}path{next(self._fresh)}')
            for _ in range(len(verb) - 1)
        )
        links.append(obj)
        return [
            TriplePattern(links[i], step, links[i + 1], path=verb)
            for i, step in enumerate(verb)
        ]

    def filter_expression(self) -> FilterExpr:
        token = self.stream.peek()
        if token is not None and token.kind == 'NAME':
            raise self.unsupported(token, f'FILTER {token.value}')
        self.stream.expect('OP', '(')
        if self.stream.at('OP', '('):
            expr = self.filter_expression()
        else:
            expr = self.comparison()
        self.stream.expect('OP', ')')
        return expr

    def comparison(self) -> FilterExpr:
        left = self.operand()
        op_token = self.stream.next()
        if op_token.kind != 'OP' or op_token.value not in ('=', '!='):
            if op_token.kind == 'OP' and op_token.value in ('<', '>', '<=', '>=', '&&', '||'):
                raise self.unsupported(op_token, f'operator {op_token.value}')
            raise self.stream.error("expected '=' or '!='", op_token)
        right = self.operand()
        if self.stream.at('OP', '&&') or self.stream.at('OP', '||'):
            token = self.stream.next()
            raise self.unsupported(token, f'operator {token.value}')
        lang_sides = [side for side in (left, right) if isinstance(side, _LangCall)]
        if not lang_sides:
            return Compare(left, op_token.value, right)
        other = right if isinstance(left, _LangCall) else left
        if len(lang_sides) == 2 or not isinstance(other, Literal) or other.language:
            raise self.unsupported(op_token, 'lang() compared to a non-string operand')
        if op_token.value != '=':
            raise self.unsupported(op_token, 'lang() with !=')
        return LangEquals(lang_sides[0].variable, other.lexical)

    def operand(self):
        token = self.stream.next()
        if token.kind == 'VAR':
            return Variable(token.value[1:])
        if is_keyword(token, 'LANG'):
            self.stream.expect('OP', '(')
            variable = self.stream.expect('VAR')
            self.stream.expect('OP', ')')
            return _LangCall(Variable(variable.value[1:]))
        if self.is_iri_start(token):
            return self.read_iri(token)
        if self.is_literal_start(token):
            return self.read_literal(token)
        if token.kind == 'NAME':
            raise self.unsupported(token, f'function {token.value}')
        if token.kind == 'OP' and token.value == '!':
            raise self.unsupported(token, 'operator !')
        raise self.stream.error('expected a variable, IRI or literal', token)


class _LangCall:
    def __init__(self, variable: Variable) -> None:
        self.variable = variable


def parse_rdf_pattern(text: str,
                      prefixes: Mapping[str, str],
                      first_line: int = 1,
                      ) -> GraphPattern:
    tokens = tokenize(text, first_line=first_line, error=MappingSyntaxError)
    lines = text.split('\n')
    end = (first_line + len(lines) - 1, len(lines[-1]) + 1)
    stream = TokenStream(tokens, MappingSyntaxError, end=end)
    return PatternParser(stream, prefixes).parse()

