#!/usr/bin/env python3
"""Black-box checks of the tamesym command line: exit codes, JSON schema, determinism.

usage: cli_contract.py <tamesym binary> <source dir>
"""
import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

import jsonschema

CLI = sys.argv[1]
SRC = pathlib.Path(sys.argv[2])
SCHEMA = json.loads((SRC / "docs" / "report.schema.json").read_text())
validator = jsonschema.Draft202012Validator(SCHEMA)
failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def check(name, cond, detail=""):
    print(("PASS " if cond else "FAIL ") + name + (f": {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def json_of(name, *args, code=0):
    r = run(*args, "--format", "json")
    check(f"{name} exit {code}", r.returncode == code, f"got {r.returncode}, stderr {r.stderr.strip()}")
    try:
        doc = json.loads(r.stdout)
    except json.JSONDecodeError as e:
        check(f"{name} parses", False, str(e))
        return None
    errors = sorted(validator.iter_errors(doc), key=str)
    check(f"{name} validates", not errors, errors[0].message if errors else "")
    return doc


inv = ["invariants"]
d = json_of("D1A1 k=2 char 2", *inv, "--family", "D1A1", "--params", "k=2", "--char", "2")
if d:
    m = d["invariants"]
    check("D1A1 k=2 char 2 values", (m["dim_Z"], m["dim_Zpr"], m["G0st"]) == (5, 0, [8]), str(m["G0st"]))

d = json_of("A1 m=3,n=2 char 0", *inv, "--family", "A1", "--params", "m=3,n=2", "--char", "0")
if d:
    m = d["invariants"]
    check("A1 m=3,n=2 char 0 values", (m["dim_Z"], m["dim_Zpr"], m["dim_Zst"], m["G0st"]) == (5, 1, 4, [5]))

d = json_of("Q3A1 over F_4", *inv, "--family", "Q3A1", "--params", "d=g", "--char", "2", "--field-order", "4")
if d:
    check("Q3A1 over F_4 dim Z", d["invariants"]["dim_Z"] == 6)

dsl = str(SRC / "data" / "presentations" / "a1_m3_n2.dsl")
d = json_of("presentation file", *inv, "--presentation-file", dsl)
if d:
    m = d["invariants"]
    check("presentation file is uncatalogued", m["rep_type"] is None and m["special_biserial"] is None)
    check("presentation file dim", m["dim_A"] == 5)

json_of("parse-check", "parse-check", dsl)
json_of("dihedral-1 table", "table", "--section", "dihedral-1", "--char", "3")
json_of("blocks table", "blocks", "--rep", "quaternion", "--defect", "3..3")


def cmp(a, b, extra=()):
    return ["compare", "--a-family", a[0], "--a-params", a[1], "--b-family", b[0], "--b-params", b[1], *extra]


F2 = ("--char", "2")
d = json_of("D2B c pair", *cmp(("D2B", "k=1,s=1,c=0"), ("D2B", "k=1,s=1,c=1"), F2), code=0)
if d:
    check("D2B c pair verdict", d["verdict"]["outcome"] == "Distinguished")
d = json_of("SD2B1 1,3 pair", *cmp(("SD2B1", "k=1,t=3,c=0"), ("SD2B1", "k=1,t=3,c=1"), F2), code=0)
if d:
    check("SD2B1 1,3 pair invariant", d["verdict"].get("invariant") == "kuelshammer_n1")
d = json_of("D1A2 d pair", *cmp(("D1A2", "k=2,d=0"), ("D1A2", "k=2,d=1"), F2), code=3)
if d:
    check("D1A2 d pair is open", d["verdict"]["known_open"] is True)
d = json_of("identical pair", *cmp(("D1A1", "k=2"), ("D1A1", "k=2"), F2), code=0)
if d:
    check("identical pair verdict", d["verdict"]["outcome"] == "Identical")

r = run("compare", "--a-presentation-file", dsl, "--b-presentation-file", dsl)
check("same file is identical", r.returncode == 0, f"got {r.returncode}")
# Two uncatalogued copies of one algebra tie without an open-case listing.
with tempfile.TemporaryDirectory() as tmp:
    copy = shutil.copy(dsl, pathlib.Path(tmp) / "copy.dsl")
    r = run("compare", "--a-presentation-file", dsl, "--b-presentation-file", str(copy))
    check("unlisted tie exit 4", r.returncode == 4, f"got {r.returncode}")
r = run("compare", "--a-presentation-file", dsl, "--b-family", "A1", "--b-params", "m=3,n=2", "--char", "0")
check("file against family exits 0 or 4", r.returncode in (0, 4), f"got {r.returncode}")

r = run(*inv, "--family", "D2B", "--params", "k=1,s=2,c=0", "--char", "2")
check("constraint violation exit 2", r.returncode == 2, f"got {r.returncode}")
r = run(*inv, "--family", "B1", "--char", "3")
check("char-2 family over F_3 exit 2", r.returncode == 2, f"got {r.returncode}")
r = run(*inv, "--family", "D1A1", "--params", "k=2", "--char", "4")
check("non-prime characteristic exit 2", r.returncode == 2, f"got {r.returncode}")
r = run(*cmp(("D1A1", "k=2"), ("D1A1", "k=2")), "--char", "2", "--field-order", "3")
check("bad field order exit 2", r.returncode == 2, f"got {r.returncode}")

for fmt in ("json", "md", "csv"):
    args = ["table", "--section", "dihedral-1", "--char", "2", "--format", fmt]
    x, y = run(*args), run(*args)
    check(f"deterministic {fmt}", x.returncode == 0 and x.stdout == y.stdout and x.stdout)
x = run(*inv, "--family", "SD3K", "--params", "a=2,b=2,c=1", "--char", "2", "--format", "json")
y = run(*inv, "--family", "SD3K", "--params", "a=2,b=2,c=1", "--char", "2", "--format", "json")
check("deterministic invariants", x.stdout == y.stdout and x.returncode == 0)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
