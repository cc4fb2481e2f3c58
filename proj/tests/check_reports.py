#!/usr/bin/env python3
"""Validate every --json report of the CLI against docs/report-schema.json.

usage: check_reports.py TOOL SCHEMA CORPUS_DIR INVALID_DIR
"""

import json
import pathlib
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["decide"],
    ["cycles"],
    ["companion"],
    ["mutate", "-k", "1"],
    ["oracle"],
    ["compare"],
]


def run(tool, args):
    proc = subprocess.run([tool, *args], capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout


def main():
    tool, schema_path, corpus, invalid = sys.argv[1:5]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = []
    reports = 0

    def check(label, text):
        nonlocal reports
        for line in text.splitlines() if label.startswith("batch") else [text]:
            reports += 1
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as e:
                failures.append(f"{label}: not JSON ({e})")
                continue
            for err in validator.iter_errors(doc):
                failures.append(f"{label}: {err.json_path}: {err.message}")
            yield doc

    files = sorted(pathlib.Path(corpus).glob("*.mat"))
    for f in files:
        for cmd in COMMANDS:
            code, out = run(tool, [*cmd, "--json", str(f)])
            for doc in check(f"{f.name} {cmd[0]}", out):
                if cmd[0] == "compare" and doc.get("agreement") != "AGREE":
                    failures.append(f"{f.name}: compare reported {doc.get('agreement')}")
                if code not in (0, 1):
                    failures.append(f"{f.name} {cmd[0]}: exit code {code}")

    code, out = run(tool, ["decide", "--json", *map(str, files)])
    list(check("batch decide", out))

    for f in sorted(pathlib.Path(invalid).glob("*.mat")):
        for cmd in COMMANDS:
            code, out = run(tool, [*cmd, "--json", str(f)])
            for doc in check(f"{f.name} {cmd[0]}", out):
                if code != 2:
                    failures.append(f"{f.name} {cmd[0]}: exit code {code}, expected 2")

    for msg in failures:
        print("FAIL", msg)
    print(f"{reports} reports checked, {len(failures)} problems")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
