from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from monoclinic.cli import main
from monoclinic.report import cell_text, load_schema

FAST = [
    ["variants"],
    ["variants", "--material", "NiTi"],
    ["compat"],
    ["distances"],
    ["symmetry"],
    ["symmetry", "--check", "r0"],
    ["functionals"],
    ["facets"],
    ["facets", "--params", "0.0243,-0.0437,0.05,0.05"],
    ["t3", "list"],
    ["t3", "lambdas", "--material", "CuZr"],
    ["t3", "nodes"],
]


def invoke(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("args", FAST, ids=" ".join)
def test_json_validates_and_csv_round_trips(args, capsys):
    code, js, _ = invoke(args + ["--format", "json"], capsys)
    assert code == 0
    obj = json.loads(js)
    jsonschema.validate(obj, load_schema())
    assert obj["command"].split()[0] == args[0]
    code, text, _ = invoke(args + ["--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == obj["columns"]
    assert rows[1:] == [[cell_text(r[c]) for c in obj["columns"]] for r in obj["rows"]]


@pytest.mark.parametrize("args", FAST[:4] + FAST[7:8], ids=" ".join)
def test_output_is_deterministic(args, capsys):
    for fmt in ("text", "json", "csv"):
        first = invoke(args + ["--format", fmt], capsys)[1]
        assert invoke(args + ["--format", fmt], capsys)[1] == first


def test_compat_text_row(capsys):
    _, out, _ = invoke(["compat"], capsys)
    line = next(x for x in out.splitlines() if x.startswith("1 "))
    assert line.split()[1:] == ["2", "3", "4", "5", "7", "9", "11", "8", "12", "6", "10"]


def test_facets_counts_by_regime(capsys):
    for params, n in (("0.0243,-0.0437,0.058,0.0427", 25), ("0.0243,-0.0437,0.05,0.05", 7),
                      ("0.0243,-0.0437,0.04,0.06", 33)):
        _, out, _ = invoke(["facets", "--params", params, "--format", "json"], capsys)
        assert len(json.loads(out)["rows"]) == n


def test_width_controls_digits(capsys):
    _, a, _ = invoke(["t3", "lambdas", "--width", "1/1000", "--format", "json"], capsys)
    _, b, _ = invoke(["t3", "lambdas", "--width", "1e-12", "--format", "json"], capsys)
    va = json.loads(a)["rows"][0]
    vb = json.loads(b)["rows"][0]
    assert va["lambda"] == "0.317"
    assert len(vb["lambda"].split(".")[1]) == 12


def test_out_file(tmp_path, capsys):
    target = tmp_path / "v.csv"
    assert main(["variants", "--format", "csv", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text().startswith("variant,e11")


@pytest.mark.parametrize(
    "args,code,fragment",
    [
        (["variants", "--material", "Brass"], 2, "Brass"),
        (["variants", "--params", "1,2,3"], 2, "four values"),
        (["variants", "--params", "a,b,c,d"], 2, "cannot parse"),
        (["variants", "--material", "NiTi", "--params", "0,0,0,0"], 2, "either"),
        (["t3", "witness", "--samples", "0"], 2, "samples"),
        (["t3", "list", "--width", "-1"], 2, "width"),
        (["facets", "--params", "0.05,0.05,0.03,0.01"], 1, "3-dimensional"),
        (["facets", "--params", "1/10,1/40,1/10,1/20"], 1, "lamination and convex hulls agree"),
    ],
)
def test_error_exit_codes(args, code, fragment, capsys):
    got, out, err = invoke(args, capsys)
    assert got == code
    assert fragment in err and out == ""


@pytest.mark.parametrize("params", ["1/10,1/40,1/10,1/20", "0.05,0.05,0.03,0.01"])
def test_verify_degenerate_and_flat(params, capsys):
    code, out, _ = invoke(["verify", "--params", params], capsys)
    assert code == 0
    assert out.strip().endswith("OK: 0 failure(s)")
    assert "SKIPPED" in out


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "monoclinic.cli", "t3", "list"], capture_output=True, text=True)
    assert out.returncode == 0 and "1 6 12" in out.stdout
