import pytest
from hypothesis import given, settings, strategies as st

from blockprim import cli, corpus, digraph
from blockprim.errors import ParseError


TRIANGLE = "vertices 3\nundirected\nedge 0 1\nedge 0 2\nedge 1 2\n"
DT3 = "vertices 3\nedge 0 1\nedge 1 2\nedge 2 0\n"
SQUARE = "vertices 4\nundirected\nedge 0 1\nedge 1 2\nedge 2 3\nedge 0 3\n"


def test_parse_triangle():
    g = cli.parse_block_file(TRIANGLE)
    assert g.vertex_count == 3
    assert g.is_symmetric()
    assert len(g.edges) == 6


def test_parse_directed():
    g = cli.parse_block_file(DT3)
    assert g.edges == ((0, 1), (1, 2), (2, 0))


def test_parse_comments_and_blanks():
    text = "# header\n\nvertices 2\n\n# middle\nedge 0 1\n"
    g = cli.parse_block_file(text)
    assert g.edges == ((0, 1),)


@pytest.mark.parametrize("text,line", [
    ("edge 0 1\n", 1),                        # vertices must come first
    ("vertices 3\nvertices 3\n", 2),          # and only once
    ("vertices 3\nedge 0 9\n", 2),            # endpoint out of range
    ("vertices 3\nedge 0 0\n", 2),            # loop
    ("vertices 3\nedge  0 1\n", 2),           # double space
    ("vertices 3\nbogus 1 2\n", 2),           # unknown directive
    ("vertices 3\nedge 0 1\nundirected\n", 3),  # undirected after edges
    ("vertices x\n", 1),                      # not a number
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        cli.parse_block_file(text)
    assert err.value.line == line


def test_parse_missing_vertices():
    with pytest.raises(ParseError) as err:
        cli.parse_block_file("# nothing here\n")
    assert err.value.line == 0


@pytest.mark.parametrize("name", [n for n, _ in corpus.standard_blocks()])
def test_round_trip_corpus(name):
    g = corpus.block_by_name(name)
    assert cli.parse_block_file(cli.serialize_block(g)) == g


small_digraphs = st.integers(2, 6).flatmap(
    lambda n: st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
            lambda e: e[0] != e[1]
        ),
        min_size=1, max_size=10, unique=True,
    ).map(lambda arcs: digraph.make(n, arcs))
)


@settings(max_examples=60, deadline=None)
@given(small_digraphs)
def test_round_trip_random(g):
    assert cli.parse_block_file(cli.serialize_block(g)) == g


# ---------------------------------------------------------------- commands

def write(tmp_path, text):
    p = tmp_path / "block.txt"
    p.write_text(text)
    return str(p)


def test_cmd_analyze(tmp_path, capsys):
    rc = cli.main(["analyze", write(tmp_path, TRIANGLE)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "aut-order: 6" in out
    assert "primitive: yes" in out


def test_cmd_decide(tmp_path, capsys):
    rc = cli.main(["decide", write(tmp_path, DT3)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "verdict: NotPrimitive" in out
    assert "block-regular" in out


def test_cmd_decide_primitive(tmp_path, capsys):
    rc = cli.main(["decide", write(tmp_path, TRIANGLE)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "verdict: Primitive" in out
    assert "reasons: -" in out


def test_cmd_ball(tmp_path, capsys):
    rc = cli.main(["ball", write(tmp_path, TRIANGLE), "--radius", "2"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "ball-vertices: 21" in out


def test_cmd_ball_dot(tmp_path, capsys):
    dot = tmp_path / "ball.dot"
    rc = cli.main(["ball", write(tmp_path, TRIANGLE), "--radius", "1",
                   "--dot", str(dot)])
    assert rc == 0
    text = dot.read_text()
    assert text.startswith("digraph ball {")
    assert "dashed" in text  # boundary marking


def test_cmd_witness_orbital(tmp_path, capsys):
    rc = cli.main(["witness", "orbital", write(tmp_path, SQUARE),
                   "--radius", "2"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "witness: yes" in out
    assert "separated: yes" in out


def test_cmd_witness_orbit_check(tmp_path, capsys):
    rc = cli.main(["witness", "orbit-check", write(tmp_path, DT3),
                   "--radius", "3", "--max-len", "3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "clean: yes" in out
    assert "alpha-hits: 0" in out


def test_cmd_witness_propagate(tmp_path, capsys):
    rc = cli.main(["witness", "propagate", write(tmp_path, TRIANGLE),
                   "--radius", "3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "collapsed: yes" in out


def test_parse_error_exit_code(tmp_path, capsys):
    rc = cli.main(["decide", write(tmp_path, "vertices 3\nedge 0 9\n")])
    err = capsys.readouterr().err
    assert rc == 2
    assert "line 2" in err


def test_missing_file_exit_code(tmp_path, capsys):
    rc = cli.main(["decide", str(tmp_path / "absent.txt")])
    assert rc == 1


def test_domain_error_exit_code(tmp_path, capsys):
    # propagation on an imprimitive block is a refused precondition
    rc = cli.main(["witness", "propagate", write(tmp_path, SQUARE)])
    err = capsys.readouterr().err
    assert rc == 1
    assert err.strip()
