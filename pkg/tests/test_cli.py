import json

import pytest

from unirow import certificates
from unirow.cli import main

SPHERE = "Q[x,y,z]/(x^2 + y^2 + z^2 - 1)"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_complete_three_two_json(capsys):
    code, out, _ = run(capsys, "complete", "--ring", "Z", "--row", "3,2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["row"] == ["3", "2"] and data["matrix"]["entries"][0] == ["3", "2"]
    cert = certificates.certificate_from_json(data)
    assert cert.verify()


def test_winding_example(capsys):
    code, out, _ = run(capsys, "winding", "--row", "x,y", "--samples", "360", "--format", "json")
    assert code == 0 and json.loads(out)["winding"] == 1


def test_verify_circle(capsys):
    code, out, _ = run(capsys, "verify", "--ring", "Q[x,y]/(x^2+y^2-1)", "--row", "x,y",
                       "--witness", "x,y")
    assert code == 0 and out.startswith("OK")


@pytest.mark.parametrize("argv, code, err", [
    (("verify", "--ring", "Q[x,y]", "--row", "x,y", "--witness", "x,y"), 1,
     "not_unimodular_with_witness"),
    (("complete", "--ring", "Z", "--row", "4,6"), 1, "not_unimodular"),
    (("complete", "--ring", "Q[x,y]", "--row", "x,y"), 1, "no_strategy"),
    (("winding", "--row", "x,y", "--samples", "3"), 1, "undersampled"),
    (("homotopy", "--row", "x,y", "--target-row", "-x,-y"), 1, "vanishing"),
    (("verify", "--ring", "Q[x,y]/(0)", "--row", "x", "--witness", "x"), 2, "syntax"),
    (("verify", "--ring", "Z", "--row", "2x", "--witness", "1"), 2, "syntax"),
])
def test_error_codes(capsys, argv, code, err):
    got, out, _ = run(capsys, *argv, "--format", "json")
    assert got == code
    assert json.loads(out)["error"] == err


def test_usage_error_exit_two(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "complete", "--format", "xml")[0] == 2


@pytest.mark.parametrize("argv", [
    ("complete", "--ring", "Z", "--row", "3,2"),
    ("complete", "--ring", "Q[x]", "--row", "x^2+1,x"),
    ("complete", "--ring", "Q[x,y]/(x^2+y^2-1)", "--row", "x,y,x^2+y^2", "--prefix-witness", "x,y"),
    ("complete", "--ring", "Q", "--row", "-1,5,7", "--inverse", "-1"),
    ("isotopy", "--ring", SPHERE, "--row", "x,y,z", "--witness", "x,y,z",
     "--target-witness", "x+y,y-x,z"),
    ("swan", "--ring", SPHERE, "--row", "x,y,z", "--witness", "x,y,z"),
])
def test_certificates_round_trip_through_verify_cert(capsys, tmp_path, argv):
    path = tmp_path / "cert.json"
    assert run(capsys, *argv, "--format", "json", "--out", str(path))[0] == 0
    first = path.read_text()
    assert run(capsys, *argv, "--format", "json", "--out", str(path))[0] == 0
    assert path.read_text() == first
    code, out, _ = run(capsys, "verify-cert", str(path))
    assert code == 0 and out.startswith("OK")


def test_verify_cert_rejects_tampering(capsys, tmp_path):
    path = tmp_path / "cert.json"
    run(capsys, "complete", "--ring", "Z", "--row", "3,2", "--format", "json", "--out", str(path))
    data = json.loads(path.read_text())
    data["matrix"]["entries"][1] = ["1", "2"]
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "verify-cert", str(path))
    assert code == 1 and "bad_certificate" in err


def test_negative_leading_values(capsys):
    code, out, _ = run(capsys, "isotopy", "--ring", "Z", "--row", "1,2,3", "--witness", "1,0,0",
                       "--target-witness", "-1,1,0", "--format", "json")
    assert code == 0 and json.loads(out)["target_witness"] == ["-1", "1", "0"]


def test_lift(capsys):
    code, out, _ = run(capsys, "lift", "--ring", "Z", "--mod", "5", "--row", "2,3",
                       "--witness", "-1,1", "--ops", "1,2,1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["row"] == ["2", "5"] and data["reduced_row"] == ["2", "0"]
    assert data["matches_quotient_action"]


def test_matrix_verbs(capsys):
    code, out, _ = run(capsys, "skew", "--ring", SPHERE, "--row", "x,y,z", "--witness", "x,y,z",
                       "--format", "json")
    assert code == 0 and json.loads(out)["determinant"] == "1"
    code, out, _ = run(capsys, "conjugate", "--ring", SPHERE, "--row", "x,y,z",
                       "--witness", "x,y,z", "--ops", "1,2,z", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["equals_transported_form"] and data["skew_symmetric"]
    code, out, _ = run(capsys, "quaternion", "--ring", "Q[a,b,c]", "--row", "0,a,b,c",
                       "--format", "json")
    data = json.loads(out)
    assert data["skew_symmetric"]
    assert data["determinant"] == "a^4 + 2*a^2*b^2 + 2*a^2*c^2 + b^4 + 2*b^2*c^2 + c^4"


def test_evaluate_and_homotopy(capsys, tmp_path):
    csv_path = tmp_path / "trace.csv"
    code, out, _ = run(capsys, "evaluate", "--row", "x,y", "--samples", "8",
                       "--csv", str(csv_path), "--format", "json")
    assert code == 0 and abs(json.loads(out)["min_norm"] - 1) < 1e-12
    assert csv_path.read_text().startswith("x,y,value1,value2,norm")
    code, out, _ = run(capsys, "homotopy", "--row", "x,y", "--ops", "1,2,3; 2,1,-1",
                       "--format", "json")
    assert code == 0 and json.loads(out)["ok"]


def test_text_output(capsys):
    code, out, _ = run(capsys, "complete", "--ring", "Z", "--row", "3,2")
    assert code == 0 and "det = 1" in out
