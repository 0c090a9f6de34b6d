#!/usr/bin/env python3
"""Validates `ddk verify` reports against the schema printed by `ddk schema`."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["--group", "A1", "--k", "1", "--suite", "all"],
    ["--group", "A1", "--k", "1/2", "--suite", "adjoint,skew", "--mc-samples", "20000"],
    ["--group", "A2", "--k", "1", "--rep", "irrep2d", "--suite", "all"],
    ["--group", "A3", "--k", "1/2", "--rep", "sign", "--suite", "commutativity,crosscheck,equivariance"],
]


def main() -> int:
    ddk = sys.argv[1]
    schema = json.loads(subprocess.run([ddk, "schema"], check=True, capture_output=True, text=True).stdout)
    jsonschema.Draft7Validator.check_schema(schema)
    validator = jsonschema.Draft7Validator(schema)
    failures = 0
    for args in RUNS:
        proc = subprocess.run([ddk, "verify", *args], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = list(validator.iter_errors(doc))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.json_path}: {e.message}")
        if doc["exit_code"] != proc.returncode:
            print(f"FAIL {' '.join(args)}: exit_code field {doc['exit_code']} != process exit {proc.returncode}")
            errors.append(None)
        for r in doc["reports"]:
            if r["status"] == "fail" and not r.get("witness"):
                print(f"FAIL {' '.join(args)}: failed entry without witness: {r['name']}")
                errors.append(None)
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)} ({len(doc['reports'])} reports)")

    bad = dict(json.loads(subprocess.run([ddk, "verify", "--group", "A1", "--suite", "clifford"],
                                          capture_output=True, text=True).stdout))
    bad["version"] = "0.0.0"
    if validator.is_valid(bad):
        print("FAIL schema accepted a report with the wrong version")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
