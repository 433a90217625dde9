#!/usr/bin/env python3
"""End-to-end checks of the command line tool: exit codes, output format,
byte-stable repeats."""

import math
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]
failures = 0


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, cond):
    global failures
    print(f"{'ok' if cond else 'FAIL'} {name}")
    if not cond:
        failures += 1


def grab(out, key):
    for line in out.splitlines():
        if line.startswith(key + " "):
            return line.split(" ", 1)[1]
    return None


r = run("bound", "--coeffs", "0.7071067811865476,0.7071067811865476")
check("bound orthogonal pair", r.returncode == 0 and abs(float(grab(r.stdout, "bound")) - 1.0) < 1e-12)

r = run("bound", "--theta", str(math.pi / 8))
check("bound two-state pi/8",
      r.returncode == 0 and abs(float(grab(r.stdout, "bound")) - 0.29289321881345254) < 1e-12)

r = run("bound", "--coherent", "--n", "2", "--alpha-sq", "0.5")
check("bound coherent N=2",
      r.returncode == 0 and abs(float(grab(r.stdout, "bound")) - (1 - math.exp(-1))) < 1e-12)

r = run("bound", "--coeffs", "1.0,0.0")
check("degenerate coefficients exit 2", r.returncode == 2 and "non-zero" in r.stderr)

r = run("povm", "--coherent", "--n", "3", "--alpha-sq", "1")
check("povm residuals", r.returncode == 0
      and float(grab(r.stdout, "completeness_residual")) <= 1e-9
      and float(grab(r.stdout, "zero_error_residual")) <= 1e-9)

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "sweep.csv"
    r = run("coherent-sweep", "--n", "2", "--min", "0", "--max", "5", "--points", "11",
            "--out", str(out))
    lines = out.read_text().splitlines()
    header_ok = lines[0] == "alpha_sq,c2_0,c2_1,bound,argmin"
    row_ok = True
    for line in lines[1:]:
        cells = line.split(",")
        x, bound = float(cells[0]), float(cells[3])
        if abs(bound - (1 - math.exp(-2 * x))) > 1e-12:
            row_ok = False
    check("sweep CSV", r.returncode == 0 and header_ok and len(lines) == 12 and row_ok)

    r2 = run("coherent-sweep", "--n", "2", "--min", "0", "--max", "5", "--points", "11",
             "--out", str(out))
    check("sweep byte-stable", out.read_text() == "\n".join(lines) + "\n" and r2.returncode == 0)

r = run("coherent-sweep", "--out", "/nonexistent-dir/x.csv", "--points", "2")
check("unwritable path exit 3", r.returncode == 3)

r = run("crossings", "--n", "2", "--max", "10")
check("no crossings for N=2", r.returncode == 0 and "no crossings" in r.stdout)

r = run("crossings", "--n", "10", "--max", "10")
check("crossings for N=10", r.returncode == 0 and r.stdout.count("crossing") >= 3)

a = run("simulate", "--theta", str(math.pi / 8), "--trials", "100000", "--seed", "7")
b = run("simulate", "--theta", str(math.pi / 8), "--trials", "100000", "--seed", "7")
check("simulate zero wrong", a.returncode == 0 and grab(a.stdout, "wrong_conclusive") == "0")
check("simulate success near bound",
      abs(float(grab(a.stdout, "empirical_success")) - 0.29289321881345254) < 0.01)
check("simulate deterministic", a.stdout == b.stdout)

r = run("simulate", "--coherent", "--n", "10", "--alpha-sq", "4", "--trials", "100000",
        "--seed", "7")
check("simulate coherent within 5 sigma", r.returncode == 0
      and float(grab(r.stdout, "success_sigma")) < 5.0)

r = run("convexity", "--cases", "200", "--seed", "1")
check("convexity probe", r.returncode == 0 and float(grab(r.stdout, "worst_slack")) >= -1e-10)

r = run("idp", "--overlap", "0.7071067811865476")
check("idp", r.returncode == 0 and abs(float(grab(r.stdout, "idp")) - 0.29289321881345254) < 1e-12)

sys.exit(1 if failures else 0)
