from __future__ import annotations

import subprocess
import sys

import pytest

from sfk import graphs
from sfk.cli import main
from sfk.core import verify_flow
from sfk.formats import CatalogEntry, parse_certificate, read_signed_graph, serialize_catalog, serialize_signed_graph


@pytest.fixture
def write(tmp_path):
    def _write(name, g):
        path = tmp_path / name
        path.write_text(serialize_signed_graph(g), encoding="utf-8")
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_tsv(capsys, write):
    code, out, _ = run(capsys, "info", write("p.sg", graphs.petersen([0, 7])))
    assert code == 0
    rows = dict(line.split("\t", 1) for line in out.strip().splitlines())
    assert rows["n"] == "10" and rows["negative_edges"] == "2"
    assert rows["three_edge_colorable"] == "no" and rows["critical_snark"] == "yes"
    assert rows["oddness"] == "2" and rows["bipartite"] == "no" and rows["bridges"] == "-"


def test_admissible_codes(capsys, write):
    assert run(capsys, "admissible", write("a.sg", graphs.k33([0, 4])))[0] == 0
    code, out, _ = run(capsys, "admissible", write("b.sg", graphs.k4([0])))
    assert code == 10 and out.startswith("not admissible")


def test_parse_error_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.sg"
    bad.write_text("2 2\n0 1 +\n", encoding="utf-8")
    code, _, err = run(capsys, "admissible", str(bad))
    assert code == 2 and "line 2" in err


def test_unknown_flag_exit_two(capsys, write):
    with pytest.raises(SystemExit) as info:
        main(["admissible", write("a.sg", graphs.k4()), "--bogus"])
    assert info.value.code == 2


def test_flow_number(capsys, write):
    code, out, _ = run(capsys, "flow-number", write("c6.sg", graphs.doubled_c6()))
    assert (code, out.strip()) == (0, "6")
    code, out, _ = run(capsys, "flow-number", write("k33.sg", graphs.k33([0, 4])))
    assert (code, out.strip()) == (0, "4")


def test_flow_number_indeterminate_and_inadmissible(capsys, write):
    code, out, _ = run(capsys, "flow-number", write("p.sg", graphs.petersen()), "--max-k", "4")
    assert (code, out.strip()) == (11, "INDETERMINATE")
    assert run(capsys, "flow-number", write("k.sg", graphs.k4([0])))[0] == 10


def test_construct_then_verify(capsys, write, tmp_path):
    g = write("k33.sg", graphs.k33([0, 4]))
    cert = str(tmp_path / "k33.flow")
    code, out, _ = run(capsys, "construct", g, "--method", "bipartite4", "-o", cert)
    assert code == 0 and "negative values 2,2" in out
    assert run(capsys, "verify", g, cert)[0] == 0


def test_construct_to_stdout(capsys, write):
    g = graphs.petersen([0, 7])
    code, out, _ = run(capsys, "construct", write("p.sg", g), "--method", "seven")
    assert code == 0
    cert = parse_certificate(out)
    assert cert.method == "seven" and verify_flow(g, cert.flow)


def test_construct_precondition(capsys, write):
    code, _, err = run(capsys, "construct", write("k33.sg", graphs.k33([0, 4])), "--method", "bridge6")
    assert code == 12 and "preconditions" in err


def test_verify_rejects_tampered(capsys, write, tmp_path):
    g = write("k33.sg", graphs.k33([0, 4]))
    cert = tmp_path / "c.flow"
    run(capsys, "construct", g, "--method", "bipartite4", "-o", str(cert))
    lines = cert.read_text().splitlines()
    e, du, dv, x = lines[-1].split()
    lines[-1] = f"{e} {du} {dv} {int(x) % 3 + 1}"
    cert.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", g, str(cert))
    assert code == 14 and out.startswith("invalid")


def test_reduce_writes_pieces(capsys, tmp_path):
    g = graphs.two_cut_join(graphs.k4([0, 5]), graphs.k4(), 2, 1)
    path = tmp_path / "j.sg"
    path.write_text(serialize_signed_graph(g))
    prefix = str(tmp_path / "out")
    code, _, _ = run(capsys, "reduce", str(path), "--cut", f"{g.m - 2},{g.m - 1}", "-o", prefix)
    assert code == 0
    g1, g2 = read_signed_graph(prefix + ".g1.sg"), read_signed_graph(prefix + ".g2.sg")
    assert g1.m + g2.m == g.m
    rows = (tmp_path / "out.map.tsv").read_text().splitlines()
    assert rows[0] == "piece\tkind\tnew_id\toriginal_id"
    assert sum(r.startswith("g1\tedge") for r in rows) == g1.m
    assert run(capsys, "reduce", str(path), "--cut", "0,1")[0] == 12


def test_batch_report_in_catalog_order(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SFK_THREADS", "2")
    cat = tmp_path / "c.sg"
    cat.write_text(serialize_catalog([CatalogEntry("k4", graphs.k4()), CatalogEntry("k33", graphs.k33())]))
    report = tmp_path / "r.tsv"
    code, out, _ = run(capsys, "batch", str(cat), "--policy", "admissible", "--report", str(report))
    assert code == 0 and "0 disagreements" in out
    rows = [r.split("\t") for r in report.read_text().splitlines()]
    assert rows[0] == ["id", "n", "m", "admissible", "bound", "exact_f", "agree"]
    names = [r[0].split(":")[0] for r in rows[1:]]
    assert names == sorted(names, key=lambda s: s != "k4")
    assert all(r[6] == "yes" for r in rows[1:])


def test_bad_thread_setting(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SFK_THREADS", "many")
    assert run(capsys, "batch", "bundled:cubic", "--report", str(tmp_path / "r.tsv"), "--n-max", "4")[0] == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "k4.sg"
    path.write_text(serialize_signed_graph(graphs.k4([0, 5])))
    proc = subprocess.run([sys.executable, "-m", "sfk.cli", "admissible", str(path)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("admissible")
