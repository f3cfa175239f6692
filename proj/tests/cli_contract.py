"""Exit codes, report schema and determinism of the command-line tool."""
import json
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMA = sys.argv[1], sys.argv[2]
validator = jsonschema.Draft202012Validator(json.load(open(SCHEMA)))
failures = []


def run(*args, stdin=None):
    return subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True)


def expect(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")
    print(("ok   " if cond else "FAIL ") + name)


def reports(proc):
    out = [json.loads(line) for line in proc.stdout.splitlines() if line.strip()]
    for r in out:
        errs = list(validator.iter_errors(r))
        if errs:
            failures.append(f"schema: {errs[0].message}")
    return out


p = run("check", "example", "--vertex", "1", "--decompose")
r = reports(p)
expect("check example", p.returncode == 0 and len(r) == 1, p.stderr)
expect("example alpha", r and r[0]["pdr"]["alpha"] == ["2", "3", "0"])
expect("example kappa", r and [lv["kappa"]["value"] for lv in r[0]["endpoint1"]["levels"]] == ["1", "0"])
expect("example modules", r and [m["dim"] for m in r[0]["decomposition"]["modules"]] == [3, 2, 1])
expect("example seed recorded", r and r[0]["decomposition"]["seed"] == 42 and r[0]["decomposition"]["tol"] == 1e-9)

again = run("check", "example", "--vertex", "1", "--decompose")
expect("byte-identical output", again.stdout == p.stdout)
other = run("--seed", "7", "check", "example", "--vertex", "1", "--decompose")
expect("seed forwarded", json.loads(other.stdout)["decomposition"]["seed"] == 7)

p = run("check", "--builtin", "petersen", "--all-vertices", "--decompose")
r = reports(p)
expect("petersen all vertices", p.returncode == 0 and len(r) == 10
       and all(x["verdict_agreement"] == "agree-pass" for x in r))

p = run("check", "-", "--vertex", "a", "--decompose", stdin="a b\n")
r = reports(p)
expect("K2 from stdin is vacuous", p.returncode == 0 and r and r[0]["verdict_agreement"] == "vacuous", p.stderr)

p = run("check", "-", stdin="1 2\n3\n")
expect("parse error exits 2", p.returncode == 2, p.stderr)
p = run("check", "no-such-graph")
expect("unknown source exits 2", p.returncode == 2)
p = run("check", "example", "--vertex", "9")
expect("bad vertex exits 2", p.returncode == 2)

p = run("check", "example", "--vertex", "1", "--decompose", "--block-dims", "--format", "table")
expect("table format", p.returncode == 0 and "alpha" in p.stdout and "kappa" in p.stdout)

p = run("check", "apex:example:1:complete:3", "--vertex", "w", "--decompose")
r = reports(p)
expect("apex source", p.returncode == 0 and r and [lv["rho"]["value"] for lv in r[0]["endpoint1"]["levels"]] == ["1", "1", "1"])

p = run("construct", "example", "1", "empty", "2")
vertices = {v for line in p.stdout.splitlines() for v in line.split()}
expect("construct empty 2", p.returncode == 0 and len(vertices) == 13 and "w" in vertices)
p = run("construct", "example", "1", "complete", "3", "--output", "graph6")
expect("construct complete 3", p.returncode == 0 and p.stdout.strip()[0] == chr(63 + 19))
p = run("construct", "example", "1", "path", "3")
expect("construct path rejected", p.returncode == 2 and "regular" in p.stderr)

for shape, y, z, want in [("rl", "2", "3", "1, 1"), ("", "2", "2", "1, 1"), ("rr", "2", "4", "0, 0")]:
    p = run("oracle", "example", "1", shape, y, z, "--format", "table")
    expect(f"oracle '{shape}' {y} {z}", p.returncode == 0 and p.stdout.strip() == want, p.stdout + p.stderr)
p = run("oracle", "example", "1", "frl", "2", "3")
expect("oracle general shape", p.returncode == 0 and json.loads(p.stdout)["agree"])

p = run("partition", "example", "1", "2")
cells = {(c["i"], c["j"]): c["vertices"] for c in json.loads(p.stdout)["cells"]}
expect("partition", p.returncode == 0 and cells.get((1, 1)) == ["3"] and cells.get((2, 1)) == ["4", "5"])
p = run("partition", "example", "1", "4")
expect("partition needs an edge", p.returncode == 2)

p = run("scan", "--generate", "4")
expect("scan n=4", p.returncode == 0 and json.loads(p.stdout.splitlines()[-1])["summary"]["mismatches"] == 0, p.stderr)
rook = json.loads(run("check", "rook3x3", "--vertex", "0").stdout)["graph"]["graph6"]
pet = json.loads(run("check", "petersen", "--vertex", "0").stdout)["graph"]["graph6"]
with tempfile.NamedTemporaryFile("w", suffix=".g6", delete=False) as f:
    f.write(rook + "\n" + pet + "\n")
    path = f.name
p = run("scan", path)
s = json.loads(p.stdout.splitlines()[-1])["summary"]
expect("scan corpus", p.returncode == 0 and s["agree_fail"] == 9 and s["agree_pass"] == 10, p.stdout)
p = run("--jobs", "1", "scan", "--generate", "4", "--serial")
expect("serial scan", p.returncode == 0)
p = run("scan", "--generate", "9")
expect("generate bound exits 2", p.returncode == 2)

print(f"{len(failures)} failures")
for f in failures:
    print("  " + f)
sys.exit(1 if failures else 0)
