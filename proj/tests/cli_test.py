"""End-to-end checks of the gprime binary: exit codes, report schema, determinism."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

exe, fixtures, docs = sys.argv[1:4]
report_schema = json.load(open(os.path.join(docs, "report.schema.json")))
instance_schema = json.load(open(os.path.join(docs, "instance.schema.json")))
failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("GPRIME_MAX_RING", None)
    e.update(env or {})
    p = subprocess.run([exe, *args], capture_output=True, text=True, env=e)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def report(out):
    doc = json.loads(out)
    jsonschema.validate(doc, report_schema)
    return doc


def fx(name):
    return os.path.join(fixtures, name + ".json")


for name in sorted(os.listdir(fixtures)):
    jsonschema.validate(json.load(open(os.path.join(fixtures, name))), instance_schema)
check(True, "fixtures conform to the instance schema")

for cmd in ("validate", "analyze", "prime", "equivalence"):
    rc, out, _ = run(cmd, fx("block_diagonal"))
    check(rc == 0, cmd + " exits 0")
    report(out)
    rc2, out2, _ = run(cmd, fx("block_diagonal"))
    check(out == out2, cmd + " output is byte-identical across runs")

rc, out, _ = run("prime", fx("disconnected_groupoid_ring"))
doc = report(out)
check(rc == 0 and doc["primeness"]["verdict"] is False, "disconnected groupoid ring is not prime")
check(doc["primeness"]["witness"]["replayed"] is True, "its witness replays")

rc, out, _ = run("equivalence", fx("m3_pair_groupoid"))
doc = report(out)
check(rc == 0 and all(v is True for v in doc["equivalence"]["conditions"].values()), "m3: seven conditions true")

for method in ("oracle", "theorem", "all"):
    rc, out, _ = run("prime", "--method", method, fx("groupoid_ring_F2_P2"))
    check(rc == 0 and report(out)["primeness"]["verdict"] is True, "F2[P2] prime via " + method)

rc, out, _ = run("prime", "--output", "text", fx("groupoid_ring_F2_Z2"))
check(rc == 0 and "verdict: false" in out, "text output")

rc, out, _ = run("prime", "--timings", fx("groupoid_ring_F2_Z2"))
check(rc == 0 and "timings" in report(out), "timings only on request")

with tempfile.TemporaryDirectory() as d:
    bad = os.path.join(d, "bad.json")
    open(bad, "w").write('{"schema": "gprime-instance/1", "groupoid": {"objects": ["e"], "morphisms": '
                         '[{"name": "g", "src": "x", "rng": "e"}]}, "ring": {"kind": "zmod", "n": 2}, "grading": {}}')
    rc, out, err = run("validate", bad)
    check(rc == 1 and report(err)["error"]["kind"] == "SchemaError", "unknown src gives SchemaError, exit 1")

    empty = os.path.join(d, "empty.json")
    open(empty, "w").write("")
    rc, _, err = run("validate", empty)
    check(rc == 1 and report(err)["error"]["kind"] == "ParseError", "empty file gives ParseError, exit 1")

    axiom = os.path.join(d, "axiom.json")
    json.dump({"schema": "gprime-instance/1", "groupoid": {"kind": "pair", "objects": ["a", "b"]},
               "ring": {"kind": "matrix", "over": {"kind": "gf", "p": 2}, "n": 2},
               "grading": {"a": ["e(2,2)"], "b": ["e(1,2)"], "a<-b": ["e(1,1)"], "b<-a": ["e(2,1)"]}},
              open(axiom, "w"))
    rc, _, err = run("validate", axiom)
    check(rc == 1 and report(err)["error"]["kind"] == "AxiomViolation", "bad grading gives AxiomViolation, exit 1")

rc, _, err = run("validate", fx("does_not_exist"))
check(rc == 1, "missing file exits 1")

rc, _, err = run("prime", "--method", "oracle", fx("m3_pair_groupoid"), env={"GPRIME_MAX_RING": "4"})
check(rc == 2 and report(err)["error"]["kind"] == "BoundExceeded", "GPRIME_MAX_RING=4 gives BoundExceeded, exit 2")

rc, out, _ = run("prime", fx("m3_pair_groupoid"), env={"GPRIME_MAX_RING": "100"})
doc = report(out)
check(rc == 0 and doc["primeness"]["oracle"]["ran"] is False and doc["primeness"]["verdict"] is True,
      "theorem path answers when the oracle is over the bound")

rc, _, _ = run("prime", fx("m3_pair_groupoid"), env={"GPRIME_MAX_RING": "lots"})
check(rc == 1, "malformed GPRIME_MAX_RING exits 1")

rc, _, _ = run("prime", "--method", "nope", fx("m3_pair_groupoid"))
check(rc == 1, "unknown method exits 1")

rc, out, _ = run("fuzz", "--seed", "3", "--count", "12")
doc = report(out)
check(rc == 0 and doc["fuzz"]["ok"] and not doc["fuzz"]["disagreement"], "fuzz run is clean")
rc2, out2, _ = run("fuzz", "--seed", "3", "--count", "12")
check(out == out2, "fuzz output is byte-identical across runs")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
