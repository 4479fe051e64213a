import pytest

from models.rdf import (IRI, RDF_LANG_STRING, XSD_INTEGER, XSD_STRING,
                        BlankNode, Literal, Triple, term_sort_key)
from rdf.graph import RdfGraph

EX = 'http://ex.org/'


def test_plain_literal_defaults_to_xsd_string():
    assert Literal('x').datatype == XSD_STRING
    assert Literal('x').language is None


def test_language_tag_is_lower_cased_and_implies_lang_string():
    literal = Literal.tagged('x', 'EN-GB')

    assert literal.language == 'en-gb'
    assert literal.datatype == RDF_LANG_STRING
    assert literal == Literal.tagged('x', 'en-gb')


@pytest.mark.parametrize(
    ['build'],
    [
        (lambda: IRI('relative/path'),),
        (lambda: IRI('http://ex.org/a b'),),
        (lambda: Literal('x', XSD_INTEGER, 'en'),),
        (lambda: Literal('x', RDF_LANG_STRING),),
        (lambda: Literal('x', 'integer'),),
    ],
)
def test_invalid_terms_cannot_be_built(build):
    with pytest.raises(ValueError):
        build()


def test_graph_rejects_literal_subjects_and_non_iri_predicates():
    graph = RdfGraph()

    with pytest.raises(ValueError):
        graph.add(Triple(Literal('x'), IRI(EX + 'p'), IRI(EX + 'o')))
    with pytest.raises(ValueError):
        graph.add(Triple(IRI(EX + 's'), BlankNode('b'), IRI(EX + 'o')))
    assert len(graph) == 0


def test_graph_is_a_set_and_match_treats_none_as_wildcard():
    s, p, q = IRI(EX + 's'), IRI(EX + 'p'), IRI(EX + 'q')
    graph = RdfGraph([
        Triple(s, p, Literal('1')),
        Triple(s, p, Literal('1')),
        Triple(s, q, BlankNode('b')),
    ])

    assert len(graph) == 2
    assert set(graph.match(s=s)) == set(graph)
    assert list(graph.match(p=q)) == [Triple(s, q, BlankNode('b'))]
    assert list(graph.match(s=s, p=p, o=Literal('2'))) == []
    assert list(graph.match(o=IRI(EX + 'missing'))) == []


def test_term_order_puts_unbound_before_blank_nodes_iris_and_literals():
    terms = [Literal('a'), IRI(EX + 'a'), None, BlankNode('z')]

    assert sorted(terms, key=term_sort_key) == [
        None, BlankNode('z'), IRI(EX + 'a'), Literal('a'),
    ]


def test_terms_print_in_n_triples_syntax():
    assert str(IRI(EX + 'a')) == '<http://ex.org/a>'
    assert str(Literal('say "hi"\n')) == '"say \\"hi\\"\\n"'
    assert str(Literal.tagged('x', 'ja')) == '"x"@ja'
    assert str(Literal('1', XSD_INTEGER)) == \
        '"1"^^<http://www.w3.org/2001/XMLSchema#integer>'
    assert str(BlankNode('b0')) == '_:b0'
