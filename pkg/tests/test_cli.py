import json
import subprocess
import sys

import pytest

from liehodge import report
from liehodge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def rows_of(doc, title_prefix):
    (b,) = [b for b in doc["blocks"] if b["title"].startswith(title_prefix)]
    return b


def test_tables_e6_json(capsys):
    doc = run_json(capsys, "tables", "e6")
    report.validate(doc)
    b = rows_of(doc, "E6 Hodge rows")
    assert len(b["rows"]) == 3
    first = dict(zip(b["columns"], b["rows"][0]))
    assert first["h"] == [6, 15, 6] and first["witnesses"] == 1


def test_tables_e6_bound_stable(capsys):
    a = rows_of(run_json(capsys, "tables", "e6"), "E6 Hodge rows")["rows"]
    b = rows_of(run_json(capsys, "tables", "e6", "--bound", "6"), "E6 Hodge rows")["rows"]
    assert a == b


def test_tables_e7_rows(capsys):
    b = rows_of(run_json(capsys, "tables", "e7", "--verify"), "E7 Hodge rows")
    hs = [r[b["columns"].index("h")] for r in b["rows"]]
    assert hs[0] == [7, 21, 21, 7]
    assert all(sum(h) == 56 and len(h) % 2 == 0 for h in hs)


def test_adjoint_grading(capsys):
    doc = run_json(capsys, "adjoint-grading", "e6", "--verify")
    assert rows_of(doc, "E6 adjoint grading")["rows"] == [[-4, 1], [-2, 20], [0, 36], [2, 20], [4, 1]]
    assert rows_of(doc, "total")["rows"] == [[78]]
    e7 = run_json(capsys, "adjoint-grading", "e7")
    assert sum(m for _, m in rows_of(e7, "E7 adjoint grading")["rows"]) == 133


def test_tensor_square_e6(capsys):
    doc = run_json(capsys, "tensor-square", "e6", "--verify")
    summ = rows_of(doc, "irreducible summands")["rows"]
    assert [r[1] for r in summ] == [650, 78, 1]
    led = rows_of(doc, "orbit ledgers")["rows"]
    by_summand = {}
    for hw, orbit, size, coeff in led:
        by_summand.setdefault(tuple(hw), []).append(coeff)
    assert by_summand[(0, 1, 0, 0, 0, 0)] == [6, 1]
    assert by_summand[(1, 0, 0, 0, 0, 1)] == [20, 5, 1]
    cc = rows_of(doc, "cycle multiplicity ledger")["rows"]
    assert [r[1] for r in cc] == [26, 6, 1] and [r[2] for r in cc] == [27, 6, 1]


def test_tensor_square_e7_alt(capsys):
    doc = run_json(capsys, "tensor-square", "e7", "--which", "alt")
    assert [r[1] for r in rows_of(doc, "irreducible summands")["rows"]] == [1539, 1]


def test_tensor_square_e6_sym_alt_sum(capsys):
    s = rows_of(run_json(capsys, "tensor-square", "e6", "--which", "sym"), "total")["rows"][0][0]
    a = rows_of(run_json(capsys, "tensor-square", "e6", "--which", "alt"), "total")["rows"][0][0]
    assert s + a == 729


def test_constraints(capsys):
    doc = run_json(capsys, "constraints", "e6")
    assert {r[0]: r[1] for r in rows_of(doc, "g_max")["rows"]} == {2: 7, 4: 6, 6: 8}
    half = run_json(capsys, "constraints", "e6", "--half", "--verify")
    feas = rows_of(half, "feasibility")
    assert [dict(zip(feas["columns"], r)) for r in feas["rows"]] == [
        {"dim_V": 27, "d": 2, "g_min": 5, "g_max": 7, "euler": 27, "h": [6, 15, 6]}
    ]


def test_surface_ledger(capsys):
    doc = run_json(capsys, "surface-ledger", "--verify")
    vals = dict(rows_of(doc, "surface ledger")["rows"])
    assert vals["c1_sq"] == 45 and vals["chi_omega1"] == -15 and vals["c2_N"] == 18
    assert vals["deg_pi"] == [6, 9, 18] and vals["deg_gamma"] == [1, 3, 9] and vals["deg_Y"] == [1, 2, 3]
    assert [r[1] for r in rows_of(doc, "fano hilbert")["rows"]] == [6, 6, 51, 141, 276]


def test_surface_ledger_synthetic(capsys):
    vals = dict(rows_of(run_json(capsys, "surface-ledger", "--chi-o", "1", "--c2", "3", "--deg-min", "1"),
                        "surface ledger")["rows"])
    assert vals["c1_sq"] == 9 and vals["chi_omega1"] == -1


def test_surface_ledger_c2_26_is_consistent(capsys):
    # 12*6 - 26 = 46 and (46 - 130)/6 = -14 is integral
    vals = dict(rows_of(run_json(capsys, "surface-ledger", "--c2", "26"), "surface ledger")["rows"])
    assert vals["chi_omega1"] == -14


def test_inconsistent_input_exit_1(capsys):
    code, out, err = run(capsys, "surface-ledger", "--c1-sq", "44")
    assert code == 1 and out == "" and "Noether" in err
    code, _, err = run(capsys, "surface-ledger", "--chi-o", "1", "--c2", "20")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [["tables", "g2"], ["tables", "e6", "--format", "xml"], ["tables", "e6", "--bound", "0"],
     ["tables", "e6", "--parity", "both"], ["bogus"], []],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_csv_format(capsys):
    code, out, _ = run(capsys, "tables", "e6", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# E6 Hodge rows")
    assert lines[1] == "ell,h,witnesses,first_witness,first_witness_simple_root_values"
    assert lines[2].startswith("2,6 15 6,1,")


def test_text_format(capsys):
    code, out, _ = run(capsys, "constraints", "e6", "--half")
    assert code == 0 and "g_max" in out and "(6,15,6)" in out


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "tensor-square", "e6", "--format", "json")
    doc = report.ReportDocument.from_dict(json.loads(out))
    assert report.render(doc, "json") == out


def test_schema_rejects_floats():
    with pytest.raises(ValueError):
        report.validate({"command": "x", "params": {}, "blocks": [
            {"title": "t", "paper_anchor": "a", "columns": ["v"], "rows": [[1.5]]}]})


@pytest.mark.parametrize("cmd", [["tables", "e6"], ["constraints", "e6", "--half"], ["adjoint-grading", "e6"]])
def test_output_independent_of_threads(cmd, capsys):
    outs = set()
    for k in ("1", "4", "8"):
        for fmt in ("json",):
            code, out, _ = run(capsys, *cmd, "--threads", k, "--format", fmt)
            assert code == 0
            outs.add(out)
    assert len(outs) == 1


def test_e7_tables_thread_determinism(capsys):
    _, a, _ = run(capsys, "tables", "e7", "--threads", "1", "--format", "csv")
    _, b, _ = run(capsys, "tables", "e7", "--threads", "8", "--format", "csv")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "liehodge", "surface-ledger", "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "surface-ledger"
