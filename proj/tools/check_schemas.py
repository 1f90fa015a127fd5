#!/usr/bin/env python3
"""Validate the shipped problem files and the CLI's JSON output against docs/*.schema.json."""
import json
import pathlib
import subprocess
import sys

import jsonschema

root = pathlib.Path(sys.argv[1])
tool = sys.argv[2]

problem_schema = json.loads((root / "docs/problem.schema.json").read_text())
output_schema = json.loads((root / "docs/output.schema.json").read_text())
jsonschema.Draft202012Validator.check_schema(problem_schema)
jsonschema.Draft202012Validator.check_schema(output_schema)

runs = {
    "abelian1": ["validate", "index", "casimirs"],
    "abelian3": ["casimirs"],
    "heisenberg": ["casimirs"],
    "sl2": ["casimirs"],
    "worked": ["validate", "rep-invariants", "conjugate-invariants"],
    "worked-extended": ["casimirs"],
    "rotation": ["casimirs", "rep-invariants", "conjugate-invariants"],
}

failures = 0
for path in sorted((root / "data").glob("*.json")):
    try:
        jsonschema.validate(json.loads(path.read_text()), problem_schema)
    except jsonschema.ValidationError as e:
        print(f"FAIL {path.name}: {e.message}")
        failures += 1
    for command in runs.get(path.stem, []):
        proc = subprocess.run([tool, command, str(path), "--format", "json"], capture_output=True, text=True)
        if proc.returncode not in (0, 2):
            print(f"FAIL {command} {path.name}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), output_schema)
        except (jsonschema.ValidationError, json.JSONDecodeError) as e:
            print(f"FAIL {command} {path.name}: {e}")
            failures += 1
            continue
        print(f"ok   {command} {path.name}")

proc = subprocess.run([tool, "verify", str(root / "data/worked.json"), "--invariant", "x2/x3", "--format", "json"],
                      capture_output=True, text=True)
jsonschema.validate(json.loads(proc.stdout), output_schema)
sys.exit(1 if failures else 0)
