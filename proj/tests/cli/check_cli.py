"""Runs the tpoly CLI, checks exit codes and determinism, and validates JSON output against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
FIXTURES = pathlib.Path(sys.argv[3])
failures = []


def run(args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def expect(cond, message):
    if not cond:
        failures.append(message)


def validate(kind, args):
    first = run(args)
    second = run(args)
    expect(first.returncode == 0, f"{args}: exit {first.returncode}: {first.stderr.strip()}")
    expect(first.stdout == second.stdout, f"{args}: output differs between runs")
    if first.returncode != 0:
        return None
    doc = json.loads(first.stdout)
    schema = json.loads((SCHEMAS / f"{kind}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        failures.append(f"{args}: schema {kind}: {e.message}")
    return doc


doc = validate("closed-form", ["closed-form", "--pretzel", "2,2,2,2", "--format", "json"])
if doc:
    expect(len(doc["polytope"]["vertices"]) == 6, "closed-form 2,2,2,2 is a hexagon")
validate("closed-form", ["closed-form", "--tuple=3,-2,2,-3"])
validate("grid", ["grid", "--fixture", "trefoil"])
validate("grid", ["grid", "--fixture", "hopf"])
validate("grid", ["grid", "--fixture", "unknot"])
validate("alexander", ["alexander", "--pretzel", "2,2,1,3"])
validate("alexander", ["alexander", "--pd", str(FIXTURES / "pretzel_1_1_1_1.pd.json")])
doc = validate("grid", ["grid", "--grid", str(FIXTURES / "torus_sum_1_1.grid")])
if doc:
    expect(doc["hat_hull"]["vertices"] == [[0, 1, -2, 1], [0, 1, 2, 1]], "torus sum hat hull [-2,2]")
doc = validate("compare", ["compare", "--pretzel", "1,1,1,1", "--with-grid", "--format", "json"])
if doc:
    expect(doc["passed"], "compare 1,1,1,1 --with-grid passes")
    names = {c["name"]: c["status"] for c in doc["checks"]}
    expect(names.get("grid.thurston_vs_closed_form") == "PASS", "grid polytope equals closed form")
    expect(names.get("mcmullen") == "SKIP", "McMullen skipped for zero Delta")
validate("alexander", ["alexander", "--fixture", "unlink2"])
validate("norm", ["norm", "--pretzel", "2,2,1,3", "--class", "0,1", "--format", "json"])
validate("surface", ["surface", "--pretzel", "3,1,3,1"])
validate("compare", ["compare", "--pretzel", "2,2,1,3", "--format", "json"])

norm = run(["norm", "--pretzel", "2,2,1,3", "--class", "0,1"])
expect(norm.stdout.strip() == "10", f"norm 2,2,1,3 (0,1): {norm.stdout!r}")

for svg_args in (["plot", "--pretzel", "2,2,1,3"], ["surface", "--pretzel", "3,1,3,1", "--format", "svg"],
                 ["grid", "--fixture", "trefoil", "--format", "svg"]):
    a, b = run(svg_args), run(svg_args)
    expect(a.returncode == 0 and a.stdout.startswith("<svg"), f"{svg_args}: no svg")
    expect(a.stdout == b.stdout, f"{svg_args}: svg differs between runs")

for bad in (["closed-form", "--pretzel", "0,1,1,1"], ["closed-form", "--pretzel", "1,2"],
            ["closed-form", "--tuple=2,3,2,3"], ["grid", "--fixture", "nonsense"],
            ["norm", "--pretzel", "1,1,1,1", "--class", "x"], ["frobnicate"]):
    r = run(bad)
    expect(r.returncode == 2, f"{bad}: expected exit 2, got {r.returncode}")

r = run(["grid", "--fixture", "trefoil", "--max-block", "3"])
expect(r.returncode == 1 and "budget exceeded" in r.stderr, f"budget guard: {r.returncode} {r.stderr!r}")
r = run(["norm", "--fixture", "unknot", "--source", "grid", "--class", "0,1"])
expect(r.returncode == 1 and "degenerate decomposition" in r.stderr, f"computation guard: {r.returncode}")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
