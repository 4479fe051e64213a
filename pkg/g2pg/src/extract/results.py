"""SPARQL 1.1 Query Results JSON, read into and written from BindingTables."""
from logging import getLogger
from typing import Any, Dict, Sequence

import orjson
from pydantic import ValidationError

from core.exceptions import MalformedResults
from extract.schema import ResultsDocument, ResultTerm
from models.bindings import BindingTable
from models.rdf import IRI, XSD_STRING, BlankNode, Literal, RdfTerm

logger = getLogger(__name__)

RESULTS_MEDIA_TYPE = 'application/sparql-results+json'


def _path(location: Sequence[Any]) -> str:
    path = ''
    for part in location:
        if part == '__root__':
            continue
        path += f'[{part}]' if isinstance(part, int) else f'.{part}'
    return path.lstrip('.') or '$'


def _term(term: ResultTerm) -> RdfTerm:
    if term.type == 'uri':
        return IRI(term.value)
    if term.type == 'bnode':
        return BlankNode(term.value)
    if term.lang:
        return Literal.tagged(term.value, term.lang)
    return Literal(term.value, term.datatype or XSD_STRING)


def parse_results(payload: bytes) -> BindingTable:
    try:
        raw = orjson.loads(payload)
    except orjson.JSONDecodeError as exc:
        raise MalformedResults('$', f'not JSON: {exc}') from None
    try:
        document = ResultsDocument.parse_obj(raw)
    except ValidationError as exc:
        error = exc.errors()[0]
        raise MalformedResults(_path(error['loc']), error['msg']) from None

    columns = document.head.vars
    try:
        table = BindingTable(columns)
    except ValueError as exc:
        raise MalformedResults('head.vars', str(exc)) from None

    for index, binding in enumerate(document.results.bindings):
        row: Dict[str, RdfTerm] = {}
        for name, term in binding.items():
            path = f'results.bindings[{index}].{name}'
            if name not in table.columns:
                raise MalformedResults(path, 'variable missing from head.vars')
            try:
                row[name] = _term(term)
            except ValueError as exc:
                raise MalformedResults(path, str(exc)) from None
        table.add(row)
    logger.debug('Parsed results document: %s rows', len(table))
    return table


def _term_json(term: RdfTerm) -> Dict[str, str]:
    if isinstance(term, IRI):
        return {'type': 'uri', 'value': term.value}
    if isinstance(term, BlankNode):
        return {'type': 'bnode', 'value': term.id}
    result = {'type': 'literal', 'value': term.lexical}
    if term.language is not None:
        result['xml:lang'] = term.language
    elif term.datatype != XSD_STRING:
        result['datatype'] = term.datatype
    return result


def dump_results(table: BindingTable) -> bytes:
    return orjson.dumps({
        'head': {'vars': list(table.columns)},
        'results': {'bindings': [
            {
                name: _term_json(term)
                for name, term in zip(table.columns, row)
                if term is not None
            }
            for row in table.sorted_rows()
        ]},
    })
