import io
import json
import subprocess
import sys

import pytest

from wchow.cli import main
from wchow.presentation import emit, present, read_json, to_document, verify_closed_forms
from wchow import reference as ref
from wchow.ring import gl2_ring


@pytest.mark.parametrize("N", [1, 2, 3])
def test_present_counts(N):
    p = present(N)
    assert len(p) == (N + 1) * (N + 2) // 2
    assert sorted(p.degrees()) == sorted([8 * N + 1] + [9 * k + m for k in range(1, N + 1) for m in range(k + 1)])
    for q, d in zip(p.polynomials(), p.degrees()):
        assert not q or (q.is_homogeneous() and q.degree() == d)


def test_present_rejects_bad_n():
    from wchow.errors import WchowError

    with pytest.raises(WchowError):
        present(0)


def test_text_output_n1():
    text = emit(present(1))
    assert "-17280*c1^9" in text
    assert "characteristic other than 2 and 3" in text
    assert text.count("degree") >= 3


def test_positive_signs():
    text = emit(present(1), normalize_signs=True)
    assert "-17280*c1^9" not in text
    assert "17280*c1^9" in text


def test_json_round_trip():
    p = present(2)
    text = emit(p, "json")
    back = read_json(text)
    assert back["N"] == 2
    assert [q for *_, q in back["relations"]] == p.polynomials()
    doc = json.loads(text)
    assert doc["ring"]["torsion_relations"] == ["2*c3"]
    assert doc["metadata"]["delta1_c3_determined"] is True
    assert {"family", "k", "m", "degree", "polynomial", "terms"} <= set(doc["relations"][1])


def test_emission_is_deterministic():
    assert emit(present(3), "json") == emit(present(3), "json")
    assert emit(present(1), "text") == emit(present(1), "text")


def test_simplified_presentation():
    p = present(1, simplify=True)
    assert p.reduced_relations is not None
    doc = to_document(p)
    assert len(doc["reduced"]) == len(p.reduced_relations)
    assert "reduced (" in emit(p)


def test_sink_receives_text():
    buf = io.StringIO()
    out = emit(present(1), sink=buf)
    assert buf.getvalue() == out


def test_verify_n1_passes():
    report = verify_closed_forms(1)
    assert report.passed
    assert len(report.items) == 4


def test_cli_present_json(tmp_path, capsys):
    out = tmp_path / "p.json"
    assert main(["present", "--n", "1", "--format", "json", "--out", str(out)]) == 0
    assert read_json(out.read_text())["N"] == 1


def test_cli_relation_and_delta1(capsys):
    assert main(["relation", "--n", "1", "--k", "1", "--m", "0"]) == 0
    assert "degree 9" in capsys.readouterr().out
    assert main(["delta1", "--n", "2", "--crosscheck", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["crosscheck_agrees"] and doc["degree"] == 17


def test_cli_errors_exit_2(capsys):
    assert main(["relation", "--n", "1", "--k", "2", "--m", "0"]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["delta1", "--n", "1", "--crosscheck"]) == 2


def test_cli_member(tmp_path, capsys):
    r6 = ref.reference("r6")
    c1 = gl2_ring().var("c1")
    from wchow.ring import format_polynomial

    ideal = tmp_path / "ideal.txt"
    ideal.write_text("# generators\n" + format_polynomial(r6) + "\n")
    yes = tmp_path / "yes.txt"
    yes.write_text(format_polynomial(c1 * r6) + "\n")
    no = tmp_path / "no.txt"
    no.write_text("c1^7\n")
    bad = tmp_path / "bad.txt"
    bad.write_text("c1^^2\n")
    cert = tmp_path / "cert.txt"
    assert main(["member", "--ring", "gl2", "--target", str(yes), "--ideal", str(ideal), "--certificate", str(cert)]) == 0
    assert cert.read_text().strip() == "c1"
    assert main(["member", "--ring", "gl2", "--target", str(no), "--ideal", str(ideal)]) == 1
    assert main(["member", "--ring", "gl2", "--target", str(bad), "--ideal", str(ideal)]) == 2
    assert main(["member", "--ring", "gl2", "--target", str(tmp_path / "missing"), "--ideal", str(ideal)]) == 2


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "wchow", "verify", "--n", "1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.count("PASS") == 4
