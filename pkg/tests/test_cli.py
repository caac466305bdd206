import json

import pytest

from core.canon import is_isomorphic
from core.families import directed_cycle
from core.formats import from_digraph6, to_digraph6, to_edgelist
from main import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def c3_file(tmp_path):
    path = tmp_path / "c3.txt"
    path.write_text(to_edgelist(directed_cycle(3)))
    return path


def test_gen_then_props_reports_excess(capsys, tmp_path):
    code, out = _run(capsys, "gen", "Dk(k=4,n=1)", "--quiet")
    assert code == EXIT_OK
    path = tmp_path / "dk.d6"
    path.write_text(out)
    code, out = _run(capsys, "props", str(path), "--k", "4", "--json", "--quiet")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["excess"] == 2
    assert report["n"] == 7
    assert report["potential"] is not None


def test_props_text(capsys, c3_file):
    code, out = _run(capsys, "props", str(c3_file), "--k", "2", "--quiet")
    assert code == EXIT_OK
    assert "excess=0" in out
    assert "Cycle" in out


def test_chi(capsys, c3_file):
    code, out = _run(capsys, "chi", str(c3_file), "--quiet")
    assert code == EXIT_OK
    assert "chi=2" in out


def test_critical_json(capsys, c3_file):
    code, out = _run(capsys, "critical", str(c3_file), "--k", "2", "--json", "--quiet")
    assert code == EXIT_OK
    assert json.loads(out)["is_dicritical"] is True


def test_canon_ignores_labels(capsys, tmp_path):
    G = directed_cycle(3)
    (tmp_path / "a.d6").write_text(to_digraph6(G) + "\n")
    (tmp_path / "b.d6").write_text(to_digraph6(G.relabel([2, 0, 1])) + "\n")
    _, a = _run(capsys, "canon", str(tmp_path / "a.d6"), "--quiet")
    _, b = _run(capsys, "canon", str(tmp_path / "b.d6"), "--quiet")
    assert a == b and a.startswith("03")


def test_enumerate(capsys):
    code, out = _run(capsys, "enumerate", "--n", "3", "--quiet")
    assert code == EXIT_OK
    assert len(out.split()) == 16
    code, out = _run(capsys, "enumerate", "--k", "2", "--n", "4", "--dicritical", "--quiet")
    [code6] = out.split()
    assert is_isomorphic(from_digraph6(code6), directed_cycle(4))


def test_table_json(capsys):
    code, out = _run(capsys, "table", "--k", "2", "--nmax", "4", "--json", "--quiet")
    assert code == EXIT_OK
    entries = json.loads(out)["entries"]
    assert [e["arcs"] for e in entries] == [2, 3, 4]


def test_verify_json_schema(capsys):
    code, out = _run(capsys, "verify", "shift_trace", "--json", "--quiet")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["theorem"] == "shift_trace"
    assert report["violations"] == []
    assert {"params", "instances_checked", "seed", "elapsed_ms"} <= set(report)


def test_verify_list(capsys):
    code, out = _run(capsys, "verify", "list", "--quiet")
    assert code == EXIT_OK
    assert "dirac_bound" in out


@pytest.mark.slow
def test_verify_dirac_bound_exit_code(capsys):
    code, _ = _run(capsys, "verify", "dirac_bound", "--k", "4", "--nmax", "5", "--quiet")
    assert code == EXIT_OK


def test_usage_and_format_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("&A" + chr(126) * 3)
    assert _run(capsys, "chi", str(bad), "--quiet")[0] == EXIT_USAGE
    assert _run(capsys, "verify", "fermat", "--quiet")[0] == EXIT_USAGE
    assert _run(capsys, "critical", str(bad), "--quiet")[0] == EXIT_USAGE
    assert _run(capsys, "gen", "Nope(3)", "--quiet")[0] == EXIT_USAGE
    assert _run(capsys, "chi", str(tmp_path / "missing.txt"), "--quiet")[0] == EXIT_USAGE
    assert EXIT_VIOLATION == 1
