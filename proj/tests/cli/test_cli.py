#!/usr/bin/env python3
"""End-to-end CLI checks: schema validity of every JSON report, byte-identical
reruns, exit codes and the sweep CSV layout.

usage: test_cli.py <cgqed binary> <docs/schema.json>
"""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMA = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


with open(SCHEMA) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

json_cases = [
    (0, ["selfenergy", "--p0", "0", "--px", "0", "--py", "0", "--pz", "0", "--mass", "1", "--part", "total"]),
    (0, ["selfenergy", "--p0", "0.4", "--px", "0.2", "--part", "gaunt", "--alpha", "0.0072973525693"]),
    (0, ["selfenergy", "--px", "0.3", "--part", "scalret"]),
    (0, ["vertex", "--p0", "0.3", "--px", "0.1", "--pp0", "0.2", "--ppy", "0.1", "--part", "total"]),
    (0, ["vertex", "--part", "gauntlike"]),
    (0, ["check", "ward", "--p0", "0", "--px", "0", "--py", "0", "--pz", "0", "--mass", "1"]),
    (0, ["check", "ward", "--p0", "0.5", "--px", "0.3", "--richardson"]),
    (0, ["check", "onshell"]),
    (0, ["check", "partsum", "--random", "3", "--seed", "5"]),
    (0, ["check", "integrals"]),
    (0, ["check", "integrals", "--oracle"]),
    (0, ["check", "identities"]),
    (0, ["check", "identities", "--list"]),
    (1, ["check", "identities", "--expr", "g^mu g^nu g_mu", "--equals", "-2 g^nu"]),
]

for rc_expected, args in json_cases:
    label = " ".join(args)
    rc, out, err = run(*args)
    check(rc == rc_expected, f"exit {rc_expected}: {label} (got {rc}; {err.strip()})")
    try:
        doc = json.loads(out)
    except json.JSONDecodeError as e:
        check(False, f"json parses: {label} ({e})")
        continue
    errors = sorted(validator.iter_errors(doc), key=str)
    check(not errors, f"schema: {label}" + (f" ({errors[0].message})" if errors else ""))
    rc2, out2, _ = run(*args)
    check(out == out2 and rc == rc2, f"deterministic: {label}")

# specific values
rc, out, _ = run("selfenergy", "--p0", "0", "--px", "0", "--py", "0", "--pz", "0", "--mass", "1", "--part", "total")
doc = json.loads(out)
check(doc["delta"]["basis"] == {"c_m": 1.0, "c_g0p0": 0.0, "c_gp": 0.0}, "Sigma_ren(0) Delta basis is m")
check(all(abs(v) <= 1e-8 for v in doc["finite"]["basis"].values()), "Sigma_ren(0) finite part vanishes")
rc, out, _ = run("check", "identities")
doc = json.loads(out)
check(doc["passed_count"] == 25 and doc["total"] == 25, "25/25 identities")
rc, out, _ = run("check", "integrals", "--oracle")
check(json.loads(out)["rank2_n4_adjudication"]["matches"] == "FI9", "rank-2 adjudication recorded")

# exit codes and stream separation
for code, args in [
    (2, []),
    (2, ["selfenergy", "--nope"]),
    (2, ["selfenergy", "--mass", "0"]),
    (2, ["selfenergy", "--tol", "-1"]),
    (2, ["vertex", "--part", "scalret"]),
    (2, ["check"]),
    (2, ["check", "identities", "--expr", "g^mu )"]),
    (2, ["sweep", "--config", "/nonexistent/file"]),
    (3, ["selfenergy", "--p0", "1.5"]),
    (3, ["vertex", "--p0", "1.2", "--pp0", "1.2"]),
    (3, ["check", "ward", "--p0", "2"]),
]:
    rc, out, err = run(*args)
    check(rc == code, f"exit {code}: {' '.join(args) or '(no args)'} (got {rc})")
    if code == 3:
        check(out == "" and err != "", f"out-of-domain message on stderr only: {' '.join(args)}")

# csv
rc, out, _ = run("selfenergy", "--p0", "0.2", "--px", "0.1", "--format", "csv")
rows = list(csv.reader(io.StringIO(out)))
check(rc == 0 and len(rows) == 2 and len(rows[0]) == len(rows[1]) == 16, "selfenergy csv: header + one row, 16 columns")
check(rows[0][:8] == ["command", "part", "units", "mass", "p0", "px", "py", "pz"], "csv leading columns")
rc, out, _ = run("vertex", "--p0", "0.2", "--pp0", "0.1", "--format", "csv")
rows = list(csv.reader(io.StringIO(out)))
check(rc == 0 and len(rows[0]) == len(rows[1]) == 46, "vertex csv: 46 columns")

# sweep
with tempfile.TemporaryDirectory() as d:
    cfg = os.path.join(d, "sweep.cfg")
    with open(cfg, "w") as f:
        f.write("# self-energy along p0\ncommand = selfenergy\npart = total\nmass = 1\np0 = 0, 0.25, 0.5\npx = 0.1, 0.2\n")
    rc, out, _ = run("sweep", "--config", cfg)
    rows = list(csv.DictReader(io.StringIO(out)))
    check(rc == 0 and len(rows) == 6 and all(r["status"] == "ok" for r in rows), "sweep: 6 ok rows")
    check([(r["p0"], r["px"]) for r in rows[:2]] == [("0", "0.10000000000000001"), ("0", "0.20000000000000001")],
          "sweep: last axis varies fastest, %.17g floats")
    rc2, out2, _ = run("sweep", "--config", cfg)
    check(out == out2, "sweep deterministic")

    with open(cfg, "w") as f:
        f.write("p0 = 0.2, 1.5\n")
    rc, out, err = run("sweep", "--config", cfg)
    statuses = [r["status"] for r in csv.DictReader(io.StringIO(out))]
    check(rc == 3 and statuses == ["ok", "out_of_domain"], "sweep: out-of-domain row flagged, exit 3")

    with open(cfg, "w") as f:
        f.write("p0 = 0.2\nwhat = 1\n")
    rc, out, err = run("sweep", "--config", cfg)
    check(rc == 2 and "line 2" in err, "sweep: unknown key rejected with line number")

    outpath = os.path.join(d, "o.json")
    rc, out, _ = run("selfenergy", "--p0", "0.1", "--output", outpath)
    with open(outpath) as f:
        check(rc == 0 and out == "" and not list(validator.iter_errors(json.load(f))), "--output writes the report")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
