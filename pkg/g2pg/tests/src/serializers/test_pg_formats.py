from decimal import Decimal

import orjson
import pytest

from load.pg_json import emit_pg_json, load_pg_json
from load.pg_text import emit_pg_text
from models.pg import PgValue, PropertyGraph
from settings import settings
from transform.base import run_mapping

EX = 'http://ex.org/'


@pytest.fixture
def musician_pg(musician_document, musician_graph):
    graph, _ = run_mapping(musician_document, musician_graph)
    return graph


@pytest.fixture
def typed_graph():
    graph = PropertyGraph()
    graph.upsert_node(EX + 'a', ['B', 'A'], [
        ('flag', PgValue.boolean(True)),
        ('big', PgValue.integer(2 ** 70)),
        ('n', PgValue.integer(1)),
        ('n', PgValue.text('1')),
        ('ratio', PgValue.decimal(Decimal('0.25'))),
        ('when', PgValue.datetime('2020-01-01T00:00:00Z')),
        ('quote', PgValue.text('say "hi"\n')),
    ])
    graph.upsert_node(EX + 'b', ['A'])
    graph.upsert_edge(EX + 'a', 'r', EX + 'b', [('w', PgValue.decimal(Decimal('-1.5')))])
    return graph


def test_pg_text_matches_the_golden_file(musician_pg):
    golden = (settings.golden_dir / 'musicians.pg').read_text(encoding='utf-8')

    assert emit_pg_text(musician_pg) == golden


def test_pg_json_matches_the_golden_file(musician_pg):
    golden = (settings.golden_dir / 'musicians.json').read_text(encoding='utf-8')

    assert emit_pg_json(musician_pg) == golden


def test_pg_text_quotes_strings_and_leaves_numbers_and_booleans_bare(typed_graph):
    lines = emit_pg_text(typed_graph).split('\n')

    assert lines[0] == (
        '"http://ex.org/a" :A :B big:1180591620717411303424 flag:true '
        'n:"1" n:1 quote:"say \\"hi\\"\\n" ratio:0.25 '
        'when:"2020-01-01T00:00:00Z"'
    )
    assert lines[1] == '"http://ex.org/b" :A'
    assert lines[2] == '"http://ex.org/a" -> "http://ex.org/b" :r w:-1.5'
    assert lines[3] == ''


def test_pg_json_tags_values_that_json_cannot_hold_exactly(typed_graph):
    document = orjson.loads(emit_pg_json(typed_graph))

    properties = document['nodes'][0]['properties']
    assert properties['big'] == [{'type': 'integer', 'value': '1180591620717411303424'}]
    assert properties['n'] == ['1', 1]
    assert properties['flag'] == [True]
    assert properties['ratio'] == [{'type': 'decimal', 'value': '0.25'}]
    assert properties['when'] == [{'type': 'datetime', 'value': '2020-01-01T00:00:00Z'}]
    assert document['nodes'][0]['labels'] == ['A', 'B']
    assert document['edges'][0]['from'] == EX + 'a'


def test_pg_json_reads_back_into_the_same_graph(typed_graph, musician_pg):
    assert load_pg_json(emit_pg_json(typed_graph)) == typed_graph
    assert load_pg_json(emit_pg_json(musician_pg)) == musician_pg


@pytest.mark.parametrize(
    ['text'],
    [
        ('[]',),
        ('{"nodes": []}',),
        ('{"nodes": [{"id": 1, "labels": []}], "edges": []}',),
        ('{"nodes": [], "edges": [{"from": "a", "to": "b", "label": "r"}]}',),
        ('{"nodes": [{"id": "a", "labels": [], '
         '"properties": {"k": [{"type": "float", "value": "1"}]}}], "edges": []}',),
        ('not json',),
    ],
)
def test_invalid_pg_json_is_rejected(text):
    with pytest.raises(ValueError):
        load_pg_json(text)


def test_empty_graph_renders_empty_documents():
    graph = PropertyGraph()

    assert emit_pg_text(graph) == ''
    assert emit_pg_json(graph) == '{"nodes":[],"edges":[]}'


def test_output_does_not_depend_on_insertion_order(typed_graph):
    reordered = PropertyGraph()
    reordered.upsert_node(EX + 'b', ['A'])
    for key, values in reversed(list(typed_graph.nodes[EX + 'a'].properties.items())):
        reordered.upsert_node(EX + 'a', ['A', 'B'], [(key, v) for v in values])
    reordered.upsert_edge(EX + 'a', 'r', EX + 'b', [('w', PgValue.decimal(Decimal('-1.5')))])

    assert emit_pg_text(reordered) == emit_pg_text(typed_graph)
    assert emit_pg_json(reordered) == emit_pg_json(typed_graph)
