"""PG-JSON, the lossless archival format.

Text, boolean and 64-bit integer values are plain JSON scalars. Decimal,
datetime and out-of-range integer values are written as
``{"type": ..., "value": lexical}`` so that reading the file back gives
the same graph.
"""
from decimal import Decimal
from typing import Any, Dict, List, Tuple

import orjson
from pydantic import ValidationError

from load.schema import JsonValue, PgJsonDocument, TaggedValue
from models.pg import PgValue, Properties, PropertyGraph, ValueKind, sorted_values

INT64_MIN, INT64_MAX = -2 ** 63, 2 ** 63 - 1


def _value_json(value: PgValue) -> Any:
    if value.kind is ValueKind.INTEGER and INT64_MIN <= value.value <= INT64_MAX:
        return value.value
    if value.kind in (ValueKind.TEXT, ValueKind.BOOLEAN):
        return value.value
    return {'type': value.kind.value, 'value': value.lexical}


def _properties_json(properties: Properties) -> Dict[str, List[Any]]:
    return {
        key: [_value_json(value) for value in sorted_values(properties[key])]
        for key in sorted(properties)
    }


def emit_pg_json(graph: PropertyGraph) -> str:
    document = {
        'nodes': [
            {
                'id': node.id,
                'labels': sorted(node.labels),
                'properties': _properties_json(node.properties),
            }
            for node in graph.sorted_nodes()
        ],
        'edges': [
            {
                'from': edge.src_id,
                'to': edge.dst_id,
                'label': edge.label,
                'properties': _properties_json(edge.properties),
            }
            for edge in graph.sorted_edges()
        ],
    }
    return orjson.dumps(document).decode()


def _value(raw: JsonValue) -> PgValue:
    if isinstance(raw, TaggedValue):
        if raw.type == 'integer':
            return PgValue.integer(int(raw.value))
        if raw.type == 'decimal':
            return PgValue.decimal(Decimal(raw.value))
        return PgValue.datetime(raw.value)
    if isinstance(raw, bool):
        return PgValue.boolean(raw)
    if isinstance(raw, int):
        return PgValue.integer(raw)
    return PgValue.text(raw)


def _pairs(properties: Dict[str, List[JsonValue]]) -> List[Tuple[str, PgValue]]:
    return [(key, _value(raw)) for key, values in properties.items() for raw in values]


def load_pg_json(text: str) -> PropertyGraph:
    try:
        document = PgJsonDocument.parse_obj(orjson.loads(text))
    except (orjson.JSONDecodeError, ValidationError) as exc:
        raise ValueError(f'not a PG-JSON document: {exc}') from None
    graph = PropertyGraph()
    for node in document.nodes:
        graph.upsert_node(node.id, node.labels, _pairs(node.properties))
    for edge in document.edges:
        graph.upsert_edge(edge.from_, edge.label, edge.to, _pairs(edge.properties))
    return graph
