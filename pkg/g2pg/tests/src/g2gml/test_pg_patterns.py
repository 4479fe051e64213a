import pytest

from core.exceptions import MappingSyntaxError, UnknownPrefix
from g2gml.parser import parse_pg_edge_pattern, parse_pg_node_pattern
from models.mapping import PrefixMap, expand_prefixed_name


def test_node_pattern_with_properties_returns_them_in_order():
    assert parse_pg_node_pattern(
        '(mus:Musician {vis_label:nam, born:dat, hometown:twn})'
    ) == (
        'mus', 'Musician',
        (('vis_label', 'nam'), ('born', 'dat'), ('hometown', 'twn')),
    )


def test_node_pattern_without_properties_has_empty_property_list():
    assert parse_pg_node_pattern('( x : Thing )') == ('x', 'Thing', ())


@pytest.mark.parametrize(
    ['line', 'column'],
    [
        ('(x Thing)', 4),
        ('x:Thing)', 1),
        ('(x:Thing', 9),
        ('(x:)', 4),
        ('(x:T {a:b,})', 11),
        ('(x:A:B)', 5),
    ],
)
def test_malformed_node_pattern_results_in_syntax_error_at_column(line, column):
    with pytest.raises(MappingSyntaxError) as error:
        parse_pg_node_pattern(line)

    assert error.value.column == column


def test_edge_pattern_returns_endpoints_label_and_properties():
    assert parse_pg_edge_pattern(
        '(mus1:Musician)-[:same_group {label:nam, length:len}]->(mus2:Musician)'
    ) == (
        ('mus1', 'Musician'), 'same_group',
        (('label', 'nam'), ('length', 'len')), ('mus2', 'Musician'),
    )


def test_edge_pattern_without_properties():
    assert parse_pg_edge_pattern('(a:X)-[:r]->(b:Y)') == (('a', 'X'), 'r', (), ('b', 'Y'))


@pytest.mark.parametrize(
    ['line', 'fragment'],
    [
        ('(a:X)-[:r]-(b:Y)', 'undirected'),
        ('(a:X)<-[:r]-(b:Y)', 'right-to-left'),
        ('(a:X)-[e:r]->(b:Y)', 'edge variables'),
        ('(a:X)-[:r {w:"1"}]->(b:Y)', 'literal property'),
        ('(a:X)-[:r]->(b:Y) trailing', 'trailing'),
    ],
)
def test_unsupported_edge_forms_result_in_syntax_error(line, fragment):
    with pytest.raises(MappingSyntaxError) as error:
        parse_pg_edge_pattern(line)

    assert fragment in str(error.value)


@pytest.mark.parametrize(
    ['name', 'prefixes', 'expected'],
    [
        ('rdfs:label', {'rdfs': 'http://www.w3.org/2000/01/rdf-schema#'},
         'http://www.w3.org/2000/01/rdf-schema#label'),
        (':x', {'': 'http://e/'}, 'http://e/x'),
    ],
)
def test_prefixed_name_expands_to_namespace_plus_local_part(name, prefixes, expected):
    assert expand_prefixed_name(name, PrefixMap(prefixes)) == expected


def test_unknown_prefix_raises(musician_document):
    with pytest.raises(UnknownPrefix):
        expand_prefixed_name('zz:x', musician_document.prefixes)
