from typing import Iterable, List

import orjson

from models.pg import PgValue, Properties, PropertyGraph, ValueKind, sorted_values

BARE_KINDS = (ValueKind.INTEGER, ValueKind.DECIMAL, ValueKind.BOOLEAN)


def quote(text: str) -> str:
    return orjson.dumps(text).decode()


def format_value(value: PgValue) -> str:
    if value.kind in BARE_KINDS:
        return value.lexical
    return quote(value.lexical)


def format_properties(properties: Properties) -> List[str]:
    return [
        f'{key}:{format_value(value)}'
        for key in sorted(properties)
        for value in sorted_values(properties[key])
    ]


def _line(tokens: Iterable[str]) -> str:
    return ' '.join(tokens) + '\n'


def emit_pg_text(graph: PropertyGraph) -> str:
    lines = [
        _line([quote(node.id)]
              + [f':{label}' for label in sorted(node.labels)]
              + format_properties(node.properties))
        for node in graph.sorted_nodes()
    ]
    lines.extend(
        _line([quote(edge.src_id), '->', quote(edge.dst_id), f':{edge.label}']
              + format_properties(edge.properties))
        for edge in graph.sorted_edges()
    )
    return ''.join(lines)
