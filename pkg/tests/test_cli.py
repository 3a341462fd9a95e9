import csv
import io
import json

import pytest

from sdfkit import verify
from sdfkit.cli import main


def run_cli(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run_cli("--format", "json", "--no-timestamp", *argv)
    return code, json.loads(text)


def test_classify_z_text():
    code, text = run_cli("classify-z", "12,15")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0].startswith("n=12")
    assert "quasi_sdf=true" in lines[0]
    assert "quasi_sdf=false" in lines[1]


def test_classify_z_range_syntax():
    code, text = run_cli("classify-z", "2..6")
    assert code == 0
    assert len(text.strip().splitlines()) == 5


def test_classify_z_csv_shape():
    code, text = run_cli("--format", "csv", "classify-z", "12..16")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["n", "factorization", "quasi_sdf", "sdf_primary",
                       "quasi_primary", "witness"]
    by_n = {r[0]: r for r in rows[1:]}
    assert by_n["12"][2] == "true"
    assert by_n["12"][5] == "(7,1)"
    assert by_n["15"][2] == "false"
    assert by_n["15"][5] == "(4,1)"
    assert by_n["16"][5] == ""  # nothing to witness


def test_classify_z_json_envelope():
    code, doc = run_json("classify-z", "15")
    assert code == 0
    assert doc["tool"] == "sdfkit"
    assert doc["command"] == "classify-z 15"
    assert "timestamp" not in doc
    row = doc["payload"][0]
    assert row["n"] == 15
    assert row["factorization"] == "3*5"
    assert row["witness"] == [4, 1]


def test_timestamp_present_by_default():
    buf = io.StringIO()
    assert main(["--format", "json", "classify-z", "4"], out=buf) == 0
    doc = json.loads(buf.getvalue())
    assert "timestamp" in doc


def test_bad_n_is_usage_error(capsys):
    code, _ = run_cli("classify-z", "1")
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_csv_only_for_classify_z(capsys):
    code, _ = run_cli("--format", "csv", "ring-report", "Z12")
    assert code == 1
    assert "csv" in capsys.readouterr().err


def test_ring_report_json():
    code, doc = run_json("ring-report", "Z12")
    assert code == 0
    pl = doc["payload"]
    assert pl["ring"] == "Z12"
    assert pl["order"] == 12
    ideals = {i["generators"]: i for i in pl["ideals"]}
    assert ideals["(4)"]["sdf_absorbing"]["holds"] is False
    assert ideals["(4)"]["sdf_primary"]["holds"] is True
    assert ideals["(6)"]["sdf_absorbing"]["holds"] is True
    assert pl["condition_star"]["satisfied"] is False


def test_ring_report_bound_exit(monkeypatch, capsys):
    monkeypatch.setenv("SDFKIT_MAX_ORDER", "8")
    code, _ = run_cli("ring-report", "Z12")
    assert code == 2
    assert "bound exceeded" in capsys.readouterr().err


def test_ring_report_parse_error(capsys):
    code, _ = run_cli("ring-report", "Zx9")
    assert code == 1


def test_verify_single_json_is_stable():
    args = ("--catalog-max-order", "24", "verify", "remark")
    code1, doc1 = run_json(*args)
    code2, doc2 = run_json(*args)
    assert code1 == code2 == 0
    assert doc1 == doc2
    assert doc1["payload"][0]["theorem"] == "remark_rr"
    assert doc1["payload"][0]["status"] == "verified"
    assert "elapsed" not in doc1["payload"][0]


def test_verify_all_bytes_identical_across_jobs():
    base = ("--format", "json", "--no-timestamp",
            "--catalog-max-order", "20", "verify", "all")
    _, a = run_cli(*base)
    _, b = run_cli(*base, "--jobs", "2")
    # --jobs is presentation, not content: identical bytes required
    assert a == b


def test_verify_alias_resolution():
    code, doc = run_json("--catalog-max-order", "16", "verify",
                         "product", "quotient", "saturation")
    assert code == 0
    names = [r["theorem"] for r in doc["payload"]]
    assert names == ["product_theorem", "quotient_corollary",
                     "saturation_lemma"]


def test_verify_unknown_theorem(capsys):
    code, _ = run_cli("verify", "fermat")
    assert code == 1
    assert "unknown theorem" in capsys.readouterr().err


def test_verify_refutation_exit_code(monkeypatch):
    def fake_run(theorems=None, params=None, jobs=1):
        rep = verify.VerifyReport("remark_rr", note="x")
        rep.instance()
        from sdfkit import make_zn
        rep.fail(make_zn(2), "synthetic failure")
        return [rep]

    monkeypatch.setattr(verify, "run", fake_run)
    code, text = run_cli("verify", "all")
    assert code == 3
    assert "refuted" in text


def test_search_text_and_exit():
    code, text = run_cli("search", "quasi_sdf & !sdf_primary",
                         "--ring", "Z144")
    assert code == 0
    assert "(12)" in text
    assert "6 matches" in text


def test_search_json_payload():
    code, doc = run_json("search", "prime", "--ring", "Z6")
    assert code == 0
    assert doc["payload"]["count"] == 2
    gens = {m["ideal"] for m in doc["payload"]["matches"]}
    assert gens == {"(2)", "(3)"}


def test_search_operators_unicode_and_words():
    for expr in ("quasi_sdf ∧ ¬sdf_primary", "quasi_sdf and not sdf_primary",
                 "quasi_sdf && !sdf_primary"):
        code, doc = run_json("search", expr, "--ring", "Z12")
        assert code == 0
        assert doc["payload"]["count"] == 1


def test_search_parse_errors(capsys):
    for expr in ("quasi_sdf &", "(prime", "unknown_flag", "prime p r i m e"):
        code, _ = run_cli("search", expr)
        assert code == 1, expr
    capsys.readouterr()


def test_fpoly_classify_json():
    code, doc = run_json("fpoly", "classify", "-p", "3", "-f", "x^2")
    assert code == 0
    assert doc["payload"]["quasi_sdf"] is True
    assert doc["payload"]["factors"] == [["x", 2]]


def test_fpoly_not_prime(capsys):
    code, _ = run_cli("fpoly", "classify", "-p", "4", "-f", "x^2")
    assert code == 1
    capsys.readouterr()


def test_fpoly_sweep_exit():
    code, doc = run_json("fpoly", "sweep", "-p", "3", "-d", "2",
                         "--sample-degree", "2")
    assert code == 0
    assert len(doc["payload"]["rows"]) == 12
    assert doc["payload"]["contradictions"] == 0


def test_usage_error_no_command(capsys):
    assert main([], out=io.StringIO()) == 1
    capsys.readouterr()


def test_version_and_tool_in_every_envelope():
    for args in (("classify-z", "4"), ("ring-report", "Z4"),
                 ("search", "prime", "--ring", "Z4")):
        _, doc = run_json(*args)
        assert doc["tool"] == "sdfkit"
        assert doc["version"]
