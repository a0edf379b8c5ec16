import io
import json
import subprocess
import sys

import pytest

from sepvar import cli
from sepvar.hilbert import RationalSeries


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_resolve_json():
    code, out, _ = run("resolve", "--n", "2", "--k", "3", "--sigma", "1,1")
    assert code == 0
    js = json.loads(out)
    assert js["schema"] == "sepvar/1"
    assert [[(t["weight"], t["shift"]) for t in s] for s in js["stages"]] == [
        [(["-1", "-2", "-2"], 0)],
        [(["-2", "-2", "-3"], 1)],
    ]


def test_resolve_semistable_and_half_integers():
    code, out, _ = run("resolve", "--n", "5", "--k", "3", "--sigma", "1")
    js = json.loads(out)
    assert code == 0 and js["r"] == 0 and len(js["stages"]) == 1
    assert js["lambda"] == ["-5/2", "-5/2", "-7/2"]


def test_bad_sigma_exits_2_and_names_the_condition():
    code, _, err = run("resolve", "--n", "2", "--k", "3", "--sigma", "2,1")
    assert code == 2
    assert "first two columns" in err
    code, _, err = run("hilbert", "--n", "2", "--k", "3", "--sigma", "1,2")
    assert code == 2 and "decreasing" in err
    code, _, err = run("resolve", "--n", "0", "--k", "3")
    assert code == 2


def test_hilbert():
    code, out, _ = run("hilbert", "--n", "2", "--k", "3", "--sigma", "1,1")
    js = json.loads(out)
    assert js["kernel"]["rendered"] == "3q(1+q)/(1-q)^5"
    assert js["kernel_coefficients"][:3] == [0, 3, 18]
    code, out, _ = run("hilbert", "--n", "2", "--k", "3", "--sigma", "1,1", "--format", "text")
    assert out.splitlines()[0] == "kernel: 3q(1+q)/(1-q)^5"


def test_generator_verify():
    code, out, _ = run("generator", "--n", "2", "--k", "2", "--sigma", "2", "--verify")
    js = json.loads(out)
    assert code == 0
    assert js["verification"]["all_pass"] is True
    assert js["generator"]["text"] in (
        "-R11*x22^2 + 2*R12*x12*x22 - R22*x12^2",
        "R11*x22^2 - 2*R12*x12*x22 + R22*x12^2",
    )


@pytest.mark.parametrize("cmd", ["resolve", "hilbert", "generator", "oracle"])
def test_trivial_sigma_is_handled(cmd):
    code, out, _ = run(cmd, "--n", "2", "--k", "3", "--sigma", "")
    assert code == 0
    js = json.loads(out)
    if cmd == "hilbert":
        assert js["kernel"]["numerator"] == []
    if cmd == "generator":
        assert js["generator"] is None
    if cmd == "oracle":
        assert all(r["dim_ker_sigma"] == 0 for r in js["rows"])


def test_sigma0_listing():
    code, out, _ = run("sigma0", "--n", "2", "--k", "3", "--max-boxes", "2")
    js = json.loads(out)
    by = {d["sigma"]: d for d in js["diagrams"]}
    assert by["1"]["level"] == 2 and by["1,1"]["gamma_min"] == "e1+e3"


def test_crosscheck_passes():
    code, out, _ = run("crosscheck", "--n", "2", "--k", "3", "--max-boxes", "4", "--max-degree", "3")
    assert code == 0
    assert json.loads(out)["all_pass"] is True


def test_crosscheck_mismatch_exits_3(monkeypatch):
    monkeypatch.setattr(cli, "hs_kernel", lambda s, n, k: RationalSeries((0, 1), 1))
    code, _, err = run("crosscheck", "--n", "2", "--k", "2", "--max-boxes", "1", "--max-degree", "2")
    assert code == 3
    assert "expected [0, 1, 1], got [0, 0, 0]" in err


def test_output_is_deterministic():
    argv = ("crosscheck", "--n", "2", "--k", "2", "--max-boxes", "3", "--max-degree", "2")
    assert run(*argv)[1] == run(*argv)[1]
    assert run(*argv, "--jobs", "2")[1] == run(*argv)[1]


@pytest.mark.parametrize("fmt", ["text", "latex", "csv"])
@pytest.mark.parametrize(
    "argv",
    [
        ("resolve", "--n", "2", "--k", "3", "--sigma", "3"),
        ("hilbert", "--n", "2", "--k", "3", "--sigma", "2"),
        ("generator", "--n", "2", "--k", "2", "--sigma", "2"),
        ("sigma0", "--n", "3", "--k", "3"),
        ("oracle", "--n", "2", "--k", "2", "--max-degree", "2"),
    ],
)
def test_other_formats(argv, fmt):
    code, out, _ = run(*argv, "--format", fmt)
    assert code == 0 and out.strip()


def test_csv_oracle_table():
    _, out, _ = run("oracle", "--n", "2", "--k", "2", "--sigma", "2", "--max-degree", "2", "--format", "csv")
    assert out.splitlines() == [
        "degree,dim_P,dim_H,dim_I,dim_ker_total,dim_ker_sigma",
        "0,1,1,1,0,0",
        "1,4,4,3,0,1",
        "2,10,7,6,0,3",
    ]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sepvar", "hilbert", "--n", "2", "--k", "3", "--sigma", "1", "--format", "text"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("kernel: 3q^2/(1-q)^5")
