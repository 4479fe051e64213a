import re
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

RDF = 'http://www.w3.org/1999/02/22-rdf-syntax-ns#'
XSD = 'http://www.w3.org/2001/XMLSchema#'

RDF_TYPE = RDF + 'type'
RDF_LANG_STRING = RDF + 'langString'
XSD_STRING = XSD + 'string'
XSD_BOOLEAN = XSD + 'boolean'
XSD_INTEGER = XSD + 'integer'
XSD_DECIMAL = XSD + 'decimal'
XSD_DOUBLE = XSD + 'double'

_ABSOLUTE_IRI = re.compile(r'^[A-Za-z][A-Za-z0-9+.\-]*:[^\s<>"{}|^`\\]*$')


def is_absolute_iri(value: str) -> bool:
    return bool(_ABSOLUTE_IRI.match(value))


@dataclass(frozen=True)
class IRI:
    value: str

    def __post_init__(self) -> None:
        if not is_absolute_iri(self.value):
            raise ValueError(f'not an absolute IRI: {self.value!r}')

    def __str__(self) -> str:
        return f'<{self.value}>'


@dataclass(frozen=True)
class Literal:
    """An RDF literal.

    Plain literals carry ``xsd:string``; language-tagged literals carry
    ``rdf:langString`` and a lower-cased language tag.
    """
    lexical: str
    datatype: str = XSD_STRING
    language: Optional[str] = None

    def __post_init__(self) -> None:
        if self.language is not None:
            if self.datatype != RDF_LANG_STRING:
                raise ValueError('language tag requires rdf:langString')
            object.__setattr__(self, 'language', self.language.lower())
        elif self.datatype == RDF_LANG_STRING:
            raise ValueError('rdf:langString requires a language tag')
        if not is_absolute_iri(self.datatype):
            raise ValueError(f'not an absolute IRI: {self.datatype!r}')

    @classmethod
    def tagged(cls, lexical: str, language: str) -> 'Literal':
        return cls(lexical, RDF_LANG_STRING, language)

    def __str__(self) -> str:
        text = '"' + escape_string(self.lexical) + '"'
        if self.language is not None:
            return f'{text}@{self.language}'
        if self.datatype != XSD_STRING:
            return f'{text}^^<{self.datatype}>'
        return text


@dataclass(frozen=True)
class BlankNode:
    id: str

    def __str__(self) -> str:
        return f'_:{self.id}'


RdfTerm = Union[IRI, Literal, BlankNode]


class Triple(NamedTuple):
    subject: RdfTerm
    predicate: RdfTerm
    object: RdfTerm

    def __str__(self) -> str:
        return f'{self.subject} {self.predicate} {self.object} .'


def validate_triple(triple: Triple) -> Triple:
    if isinstance(triple.subject, Literal):
        raise ValueError('a literal cannot be a triple subject')
    if not isinstance(triple.predicate, IRI):
        raise ValueError('a triple predicate must be an IRI')
    return triple


_ESCAPES = {'\\': '\\\\', '"': '\\"', '\n': '\\n', '\r': '\\r', '\t': '\\t'}


def escape_string(value: str) -> str:
    return ''.join(_ESCAPES.get(char, char) for char in value)


_TERM_RANKS = {BlankNode: 1, IRI: 2, Literal: 3}


def term_sort_key(term: Optional[RdfTerm]) -> tuple:
    """Total order over terms: unbound < blank node < IRI < literal."""
    if term is None:
        return (0,)
    if isinstance(term, Literal):
        return (3, term.lexical, term.datatype, term.language or '')
    if isinstance(term, IRI):
        return (2, term.value)
    return (_TERM_RANKS[type(term)], term.id)
