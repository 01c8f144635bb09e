import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nodalgraph.errors import Disconnected, GraphFileError, NonPositiveWeight
from nodalgraph.fileio import builtin_names, parse_graph, read_graph, to_json_text, to_text, write_graph
from nodalgraph.generators import KINDS, generate_graph

from conftest import star_graph, tree7_graph


def test_text_format():
    g = parse_graph("# comment\n\nn 3\ne 0 1 1.5\ne 1 2 2\nv 2 -0.25\n")
    assert g.n == 3 and g.edges == ((0, 1, 1.5), (1, 2, 2.0)) and g.potential == (0.0, 0.0, -0.25)


def test_json_format():
    g = parse_graph('{"n": 2, "edges": [[0, 1, 3]], "potential": [1, 2]}')
    assert g.edges == ((0, 1, 3.0),) and g.potential == (1.0, 2.0)
    assert parse_graph('{"n": 2, "edges": [[0, 1, 1]]}').potential == (0.0, 0.0)


@pytest.mark.parametrize(
    "text",
    [
        "n 2\ne 0 1 1\nx 1\n",
        "n 2\nn 2\ne 0 1 1\n",
        "e 0 1 1\n",
        "n 2\ne 0 1\n",
        "n 2\ne 0 1 abc\n",
        "n 2\ne 0 1 inf\n",
        "n 2\ne 0 1 1\nv 0 1\nv 0 2\n",
        "n 2\ne 0 1 1\nv 5 1\n",
        "n two\n",
        '{"n": 2, "edges": [[0, 1, 1]], "extra": 1}',
        '{"n": 2, "edges": [[0, 1]]}',
        '{"n": 2}',
        '{"n": 2.5, "edges": []}',
        '{"n": 2, "edges": [[0, 1, "1"]]}',
        '{"n": 2, "edges": [[0, 1, 1]], "potential": [true, 0]}',
        '{"n": 2, "edges": [[0, 1, 1]',
        "[1, 2]",
    ],
)
def test_file_errors(text):
    with pytest.raises(GraphFileError):
        parse_graph(text, "json" if text.lstrip()[:1] in "{[" else "text")


def test_validation_errors_propagate():
    with pytest.raises(Disconnected):
        parse_graph("n 3\ne 0 1 1\n")
    with pytest.raises(NonPositiveWeight):
        parse_graph('{"n": 2, "edges": [[0, 1, 0]]}')


def test_missing_file(tmp_path):
    with pytest.raises(GraphFileError):
        read_graph(tmp_path / "nope.txt")
    with pytest.raises(GraphFileError):
        read_graph("builtin:nope")


def test_builtins():
    assert {"p2", "path6", "star5", "tree7", "cycle4", "weighted5"} <= set(builtin_names())
    assert read_graph("builtin:tree7") == tree7_graph()
    assert read_graph("builtin:star5") == star_graph(5)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(2, 12), k=st.sampled_from(KINDS))
def test_round_trip_both_formats(seed, n, k):
    if k == "cycle" and n < 3:
        n = 3
    g = generate_graph(k, n, "random", "random", seed)
    assert parse_graph(to_text(g), "text") == g
    assert parse_graph(to_json_text(g), "json") == g
    assert parse_graph(to_json_text(g)) == g and parse_graph(to_text(g)) == g


def test_write_graph(tmp_path):
    g = generate_graph("erdos_renyi", 9, "random", "random", 5)
    for name in ("g.json", "g.txt"):
        write_graph(g, tmp_path / name)
        assert read_graph(tmp_path / name) == g
