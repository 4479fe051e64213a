from logging import getLogger

from rdflib import Graph
from rdflib.exceptions import ParserError
from rdflib.plugins.parsers.notation3 import BadSyntax

from core.exceptions import RdfParseError, UnsupportedFeature
from models.rdf import is_absolute_iri
from rdf.graph import RdfGraph
from rdf.syntax import (Token, check_escapes, is_keyword, token_body, tokenize,
                        unescape)
from rdf.terms import triple_from_rdflib

logger = getLogger(__name__)

STRUCTURES = {'[': 'blank node property list', '(': 'collection'}


def _unsupported(token: Token) -> str | None:
    if (token.kind == 'DIRECTIVE' and token.value == '@base') or is_keyword(token, 'BASE'):
        return 'base IRI'
    if token.kind == 'OP' and token.value in STRUCTURES:
        return STRUCTURES[token.value]
    if token.kind == 'IRIREF' and not is_absolute_iri(
            unescape(token_body(token), RdfParseError, token)):
        return f'relative IRI {token.value}'
    return None


def check_subset(source: str) -> None:
    """Reject Turtle outside directives, prefixed names, ``a``, ``;`` and ``,``."""
    tokens = tokenize(source, error=RdfParseError)
    check_escapes(tokens, RdfParseError)
    for token in tokens:
        feature = _unsupported(token)
        if feature is not None:
            raise UnsupportedFeature(feature, token.line, token.column)


def load_turtle_subset(source: str) -> RdfGraph:
    check_subset(source)
    parsed = Graph()
    try:
        parsed.parse(data=source, format='turtle')
    except BadSyntax as exc:
        reason = getattr(exc, '_why', None) or 'bad syntax'
        raise RdfParseError(f'invalid Turtle: {reason}', exc.lines + 1) from None
    except (ParserError, ValueError) as exc:
        raise RdfParseError(f'invalid Turtle: {exc}') from None
    try:
        graph = RdfGraph(triple_from_rdflib(nodes) for nodes in parsed)
    except ValueError as exc:
        raise RdfParseError(f'invalid Turtle: {exc}') from None
    logger.debug('Loaded %s Turtle triples', len(graph))
    return graph
