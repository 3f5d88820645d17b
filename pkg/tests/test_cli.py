"""End-to-end command line tests driving cli.main with real files."""

import json

import pytest

from sesquimat.cli import main, matrix_json, read_graph, read_matrix
from sesquimat.field import field_make
from sesquimat.graphs import DirectedGraph
from sesquimat.matrix import LabeledMatrix

MATRIX_GF4 = """\
# running example over GF(4)
field 2 2 1 1 1
sigma 1 1
labels x y z
0 1 a
1 0 0
a2 0 1
"""

PATH3 = """\
fgraph
field 2 1
vertices a b c
edge a b 1
edge b a 1
edge b c 1
edge c b 1
"""

DIGRAPH3 = """\
digraph 3
arc 1 2
arc 2 3
arc 3 1
"""


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, content in (
        ("m.txt", MATRIX_GF4),
        ("p3.txt", PATH3),
        ("d3.txt", DIGRAPH3),
    ):
        target = tmp_path / name
        target.write_text(content)
        paths[name] = str(target)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_read_matrix_sorts_labels(files):
    m, sigma = read_matrix(files["m.txt"])
    assert m.labels == ("x", "y", "z")
    assert sigma is not None and sigma.j == 1 and sigma.s == 1
    assert m.entry("x", "z") == 2


def test_read_graph_variants(files):
    d = read_graph(files["d3.txt"])
    assert isinstance(d, DirectedGraph)
    assert d.arcs == frozenset({(1, 2), (2, 3), (3, 1)})
    g = read_graph(files["p3.txt"])
    assert g.vertices == ("a", "b", "c")
    assert g.edges[("a", "b")] == 1


def test_sesqui_list(capsys):
    code, out, _ = run(capsys, "sesqui", "list", "--field", "2", "2")
    assert code == 0
    assert "4 sesqui-morphism(s)" in out
    assert "j=1 s=a " in out
    code, out, _ = run(capsys, "sesqui", "list", "--field", "7", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data["sesqui_morphisms"]) == 2


def test_rank_width_command(capsys, files):
    code, out, _ = run(capsys, "rank-width", "--digraph", files["d3.txt"])
    assert code == 0
    assert "rank-width: 1" in out
    code, out, _ = run(capsys, "rank-width", "--fgraph", files["p3.txt"], "--json")
    assert code == 0
    data = json.loads(out)
    assert data["rank_width"] == 1
    assert data["layout"].count("(") == data["layout"].count(")") >= 1


def test_cut_rank_and_schur(capsys, files):
    code, out, _ = run(capsys, "cut-rank", "--matrix", files["m.txt"], "--set", "x")
    assert (code, out.strip()) == (0, "1")
    code, out, _ = run(capsys, "schur", "--matrix", files["m.txt"], "--set", "x,y")
    assert code == 0
    assert out.splitlines()[1:] == ["labels z", "1"]


def test_ppt_and_tucker(capsys, files):
    code, out, _ = run(capsys, "ppt", "--matrix", files["m.txt"], "--set", "x,y")
    assert code == 0
    assert out.splitlines()[2:] == ["0 1 0", "1 0 a", "0 a2 1"]
    code, out, _ = run(
        capsys, "tucker-check", "--matrix", files["m.txt"], "--x", "x,y", "--z", "y,z"
    )
    assert code == 0 and "holds" in out


def test_json_matrix_roundtrip(capsys, files, tmp_path):
    code, out, _ = run(capsys, "ppt", "--matrix", files["m.txt"], "--set", "x,y", "--json")
    assert code == 0
    data = json.loads(out)["ppt"]
    f = field_make(data["field"]["p"], data["field"]["k"], data["field"]["modulus"])
    m = LabeledMatrix(
        f,
        data["labels"],
        [[f.parse_element(t) for t in row] for row in data["rows"]],
    )
    # re-serializing the parsed matrix gives back the same payload
    assert matrix_json(m) == data
    # and pivoting again returns the original input matrix
    back = tmp_path / "back.txt"
    back.write_text(
        "field 2 2 1 1 1\nlabels "
        + " ".join(data["labels"])
        + "\n"
        + "\n".join(" ".join(row) for row in data["rows"])
        + "\n"
    )
    code, out, _ = run(capsys, "ppt", "--matrix", str(back), "--set", "x,y", "--json")
    original, _ = read_matrix(files["m.txt"])
    assert json.loads(out)["ppt"] == matrix_json(original)


def test_chaingroup_commands(capsys, files):
    code, out, _ = run(capsys, "chaingroup", "build", "--matrix", files["m.txt"])
    assert code == 0
    assert "dim: 3" in out
    code, out, _ = run(capsys, "chaingroup", "eulerian", "--matrix", files["m.txt"])
    assert code == 0
    assert all(":(" in tok for tok in out.split())
    code, out, _ = run(
        capsys, "chaingroup", "lambda", "--matrix", files["m.txt"], "--set", "x,z"
    )
    assert (code, out.strip()) == (0, "1")
    code, out, _ = run(
        capsys,
        "chaingroup",
        "minor",
        "--matrix",
        files["m.txt"],
        "--gamma",
        "1,0",
        "--set",
        "z",
    )
    assert code == 0
    assert "ground: x y" in out and "dim: 2" in out


def test_pivot_commands(capsys, files):
    code, out, _ = run(capsys, "pivot", "--fgraph", files["p3.txt"], "--x", "a,b")
    assert code == 0
    assert "edge a c 1" in out
    # empty pivot set with no scalings is the identity
    code, out, _ = run(capsys, "loop-pivot", "--fgraph", files["p3.txt"])
    assert code == 0
    assert "edge a b 1" in out and "edge b c 1" in out


def test_pivot_class_and_minor_check(capsys, files, tmp_path):
    code, out, _ = run(capsys, "pivot-class", "--digraph", files["d3.txt"], "--json")
    assert code == 0
    data = json.loads(out)
    assert data["size"] == 4 and data["truncated"] is False
    h = tmp_path / "h.txt"
    h.write_text("digraph 2\narc 1 2\n")
    code, out, _ = run(
        capsys, "pivot-minor-check", "--h", str(h), "--g", files["d3.txt"]
    )
    assert code == 0
    assert "witness found" in out


def test_delta_matroid_and_sea(capsys, files):
    code, out, _ = run(
        capsys, "delta-matroid", "--matrix", files["m.txt"], "--branch-width"
    )
    assert code == 0
    assert "feasible sets: 5" in out and "branch-width bound: 1" in out
    code, out, _ = run(capsys, "sea-check", "--matrix", files["m.txt"])
    assert code == 0
    assert "holds" in out


def test_verify_subset_and_reproducibility(capsys):
    args = ("verify", "--checks", "rankwidth-regressions", "--seed", "7")
    code, out1, _ = run(capsys, *args)
    assert code == 0
    assert "seed: 7" in out1 and "PASS" in out1
    code, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_exit_codes(capsys, files, tmp_path):
    # singular pivot block is a domain error
    code, _, err = run(capsys, "schur", "--matrix", files["m.txt"], "--set", "x")
    assert code == 1
    assert "SingularPivotBlock" in err
    # missing file is a usage error
    code, _, err = run(capsys, "cut-rank", "--matrix", str(tmp_path / "no.txt"), "--set", "x")
    assert code == 2
    # malformed matrix file is a usage error
    bad = tmp_path / "bad.txt"
    bad.write_text("labels x y\n0 1\n1 0\n")
    code, _, err = run(capsys, "ppt", "--matrix", str(bad), "--set", "x")
    assert code == 2
    assert "field" in err
    # unknown verify check name
    code, _, err = run(capsys, "verify", "--checks", "bogus")
    assert code == 2
