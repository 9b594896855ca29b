import json
import subprocess
import sys

import numpy as np
import pytest

from hecke_braid import hecke as H
from hecke_braid.cli import main
from hecke_braid.gf import find_element_of_order, make_field

F8_SPEC = "p=2,k=3,mod=AUTO"
F49_SPEC = "p=7,k=2,mod=AUTO"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def shape_record(report, lam):
    return next(s for s in report["shapes"] if s["lambda"] == lam)


def test_verify_n3_linear(capsys):
    code, rep = run_json(capsys, "verify", "--n", "3", "--field", F8_SPEC, "--alpha-order", "7", "--enumerate-cap", "1000")
    assert code == 0 and rep["verdict"] == "Pass" and rep["schema"] == 1
    rec = shape_record(rep, "2,1")
    assert rec["info"]["prediction"]["label"] == "SL_2(8)"
    assert rec["info"]["closure"]["order"] == 504 and rec["checks"]["order_certified"] is True
    assert rep["parameters"]["case"] == "linear"


def test_verify_refuses_excluded_order(capsys):
    code, rep = run_json(capsys, "verify", "--n", "4", "--field", F8_SPEC, "--alpha-order", "5")
    assert code == 1 and rep["verdict"] == "Refused" and "excluded" in rep["reason"]
    code, rep = run_json(capsys, "verify", "--n", "7", "--field", F8_SPEC, "--alpha-order", "7")
    assert code == 1 and "exceed" in rep["reason"]


def test_verify_n3_unitary(capsys):
    code, rep = run_json(capsys, "verify", "--n", "3", "--field", F49_SPEC, "--alpha-order", "8")
    assert code == 0 and rep["verdict"] == "Pass"
    assert rep["parameters"]["case"] == "unitary"
    rec = shape_record(rep, "2,1")
    assert rec["info"]["prediction"]["label"] == "SU_2(49)" and rec["info"]["closure"]["order"] == 336


def test_verify_n4_skips_large_closure_without_heavy(capsys):
    code, rep = run_json(capsys, "verify", "--n", "4", "--field", F8_SPEC, "--alpha-order", "7")
    assert code == 0 and rep["verdict"] == "Pass"
    assert shape_record(rep, "3,1")["info"]["closure"]["status"] == "Skipped"
    assert shape_record(rep, "2,2")["info"]["closure"]["order"] == 504


def test_verify_is_deterministic():
    argv = [sys.executable, "-m", "hecke_braid.cli", "verify", "--n", "4", "--field", "p=3,k=2,mod=AUTO", "--alpha-order", "8"]
    a = subprocess.run(argv, capture_output=True, check=False)
    b = subprocess.run(argv, capture_output=True, check=False)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout


def test_rep_csv(capsys):
    code, out, _ = run(capsys, "rep", "--n", "4", "--lambda", "2,2", "--r", "1", "--field", F8_SPEC, "--alpha-order", "7")
    assert code == 0
    ctx = make_field(2, 3)
    meta, mat = H.parse_matrix_csv(ctx, out)
    assert meta["lambda"] == "2,2" and meta["r"] == "1"
    rep = H.HeckeRep(ctx, (2, 2), find_element_of_order(ctx, 7))
    assert np.array_equal(mat, rep.gen(1))


def test_forms(capsys):
    code, rec = run_json(capsys, "forms", "--lambda", "2,2", "--field", F49_SPEC, "--alpha-order", "8")
    assert code == 0
    assert rec["bilinear"]["dim"] == 1 and rec["bilinear"]["symmetry"] == ["alternating"]
    assert rec["hermitian"]["dim"] == 1 and rec["pairing"]["equivariant"] is True
    code, rec = run_json(capsys, "forms", "--lambda", "3,1", "--field", F8_SPEC, "--alpha-order", "7")
    assert code == 0 and rec["bilinear"]["dim"] == 0 and "hermitian" not in rec


def test_classify(capsys):
    code, rec = run_json(capsys, "classify", "--n", "4", "--field", F8_SPEC, "--alpha-order", "7")
    assert code == 0
    labels = {r["lambda"]: r["label"] for r in rec["records"]}
    assert labels == {"3,1": "SL_3(8)", "2,2": "SP_2(8)"}


def test_enumerate(capsys):
    args = ["enumerate", "--lambda", "2,1", "--field", F8_SPEC, "--alpha-order", "7"]
    code, rec = run_json(capsys, *args, "--cap", "100")
    assert code == 2 and rec["verdict"] == "Inconclusive"
    code, rec = run_json(capsys, *args)
    assert code == 0 and rec["verdict"] == "Match" and rec["closure"]["order"] == 504


def test_descend(capsys):
    code, rec = run_json(capsys, "descend", "--n", "4", "--lambda", "2,2", "--field", F49_SPEC, "--alpha-order", "8")
    assert code == 0 and rec["verdict"] == "Pass" and rec["symmetry"] == "alternating" and rec["subfield"] == 7
    ctx = make_field(7, 2)
    for text in list(rec["generators"].values()) + [rec["form"]]:
        _, m = H.parse_matrix_csv(ctx, text)
        assert np.all(m < 7)  # the prime field sits at the integers 0..6


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["verify", "--n", "2", "--alpha-order", "7"], "--n"),
        (["verify", "--n", "4"], "--alpha-order"),
        (["rep", "--lambda", "2,2", "--r", "9", "--alpha-order", "7"], "--r"),
        (["rep", "--lambda", "2,x", "--r", "1", "--alpha-order", "7"], "--lambda"),
        (["rep", "--n", "5", "--lambda", "2,2", "--r", "1", "--alpha-order", "7"], "--lambda"),
        (["forms", "--lambda", "2,2", "--alpha-order", "9"], "--alpha-order"),
        (["forms", "--lambda", "2,2", "--field", "p=4,k=1,mod=AUTO", "--alpha-order", "3"], "--field"),
        (["descend", "--lambda", "2,2", "--alpha-order", "7"], "--field"),
        (["classify", "--alpha-order", "7"], "--lambda"),
    ],
)
def test_usage_errors(capsys, argv, flag):
    code, out, err = run(capsys, *argv)
    assert code == 1 and flag in err and out == ""


def test_argparse_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--bogus"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1
