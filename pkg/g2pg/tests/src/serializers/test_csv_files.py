import pytest

from load.base import GraphWriter, render_target
from load.csv_files import emit_neo4j_csv, emit_neptune_csv, emit_pgx_flat
from load.schema import EmissionTarget, OutputFormat
from models.pg import PgValue, PropertyGraph
from settings import settings
from transform.base import run_mapping

EX = 'http://ex.org/'

GOLDEN_DIRS = {
    OutputFormat.NEO4J_CSV: 'musicians_neo4j',
    OutputFormat.PGX_FLAT: 'musicians_pgx',
    OutputFormat.NEPTUNE_CSV: 'musicians_neptune',
}


@pytest.fixture
def musician_pg(musician_document, musician_graph):
    graph, _ = run_mapping(musician_document, musician_graph)
    return graph


@pytest.fixture
def tricky_graph():
    graph = PropertyGraph()
    graph.upsert_node(EX + 'a', ['A', 'B'], [
        ('name', PgValue.text('Smith, J.')),
        ('name', PgValue.text('x;y')),
        ('mixed', PgValue.integer(3)),
        ('mixed', PgValue.text('three')),
    ])
    graph.upsert_node(EX + 'b', ['A'])
    graph.upsert_edge(EX + 'a', 'r', EX + 'b', [
        ('w', PgValue.integer(1)), ('w', PgValue.integer(2)),
    ])
    graph.upsert_edge(EX + 'b', 'r', EX + 'a')
    return graph


@pytest.mark.parametrize(['format'], [(f,) for f in GOLDEN_DIRS])
def test_csv_layouts_match_the_golden_files(musician_pg, format):
    target = EmissionTarget(format=format, output_path=settings.golden_dir / GOLDEN_DIRS[format])

    for path, content in render_target(musician_pg, target):
        assert content == path.read_text(encoding='utf-8'), path.name


def test_neo4j_quotes_commas_and_doubles_semicolons(tricky_graph):
    nodes, edges = emit_neo4j_csv(tricky_graph)

    assert nodes.split('\n') == [
        ':ID,:LABEL,mixed,name',
        'http://ex.org/a,A;B,three;3,"Smith, J.;x;;y"',
        'http://ex.org/b,A,,',
        '',
    ]
    assert edges.split('\n') == [
        ':START_ID,:END_ID,:TYPE,w',
        'http://ex.org/a,http://ex.org/b,r,1;2',
        'http://ex.org/b,http://ex.org/a,r,',
        '',
    ]


def test_pgx_writes_one_row_per_value_and_one_for_bare_elements(tricky_graph):
    vertices, edges = emit_pgx_flat(tricky_graph)

    assert vertices.split('\n') == [
        'http://ex.org/a,A;B,mixed,string,three',
        'http://ex.org/a,A;B,mixed,integer,3',
        'http://ex.org/a,A;B,name,string,"Smith, J."',
        'http://ex.org/a,A;B,name,string,x;y',
        'http://ex.org/b,A,,,',
        '',
    ]
    assert edges.split('\n') == [
        '1,http://ex.org/a,http://ex.org/b,r,w,integer,1',
        '1,http://ex.org/a,http://ex.org/b,r,w,integer,2',
        '2,http://ex.org/b,http://ex.org/a,r,,,',
        '',
    ]


def test_neptune_types_columns_and_falls_back_to_string(tricky_graph):
    nodes, edges = emit_neptune_csv(tricky_graph)

    assert nodes.split('\n')[:2] == [
        '~id,~label,mixed:String[],name:String[]',
        'http://ex.org/a,A;B,three;3,"Smith, J.;x\\;y"',
    ]
    assert edges.split('\n') == [
        '~id,~from,~to,~label,w:String',
        'e1,http://ex.org/a,http://ex.org/b,r,1;2',
        'e2,http://ex.org/b,http://ex.org/a,r,',
        '',
    ]


def test_empty_graph_gives_header_only_or_empty_files():
    graph = PropertyGraph()

    assert emit_neo4j_csv(graph) == (':ID,:LABEL\n', ':START_ID,:END_ID,:TYPE\n')
    assert emit_pgx_flat(graph) == ('', '')
    assert emit_neptune_csv(graph) == ('~id,~label\n', '~id,~from,~to,~label\n')


def test_every_format_carries_the_same_elements(musician_pg):
    neo4j_nodes, neo4j_edges = emit_neo4j_csv(musician_pg)
    neptune_nodes, neptune_edges = emit_neptune_csv(musician_pg)
    vertices, pgx_edges = emit_pgx_flat(musician_pg)

    assert len(neo4j_nodes.splitlines()) - 1 == len(musician_pg.nodes)
    assert len(neptune_edges.splitlines()) - 1 == len(musician_pg.edges)
    assert len(neo4j_edges.splitlines()) == len(neptune_edges.splitlines())
    assert len(neptune_nodes.splitlines()) == len(neo4j_nodes.splitlines())
    assert {line.split(',')[0] for line in vertices.splitlines()} == set(musician_pg.nodes)
    assert {line.split(',')[0] for line in pgx_edges.splitlines()} == {'1', '2'}


def test_writer_creates_every_target(tmp_path, musician_pg):
    targets = [
        EmissionTarget.default(format, tmp_path / 'out', 'run') for format in OutputFormat
    ]

    with GraphWriter(targets) as writer:
        written = writer.write(musician_pg)

    assert sorted(p.relative_to(tmp_path / 'out').as_posix() for p in written) == [
        'run.json', 'run.pg',
        'run_neo4j/edges.csv', 'run_neo4j/nodes.csv',
        'run_neptune/edges.csv', 'run_neptune/nodes.csv',
        'run_pgx/edges.csv', 'run_pgx/vertices.csv',
    ]
    assert all(path.is_file() for path in written)


def test_writer_leaves_nothing_behind_when_one_target_fails(tmp_path, musician_pg):
    (tmp_path / 'blocked').write_text('not a directory', encoding='utf-8')
    targets = [
        EmissionTarget(format=OutputFormat.PG_TEXT, output_path=tmp_path / 'run.pg'),
        EmissionTarget(format=OutputFormat.NEO4J_CSV, output_path=tmp_path / 'blocked'),
    ]

    with pytest.raises(OSError):
        with GraphWriter(targets) as writer:
            writer.write(musician_pg)

    assert sorted(p.name for p in tmp_path.iterdir()) == ['blocked']
