#!/usr/bin/env python3
"""Check every bundled data file, and the JSON reports of the tmcv binary, against docs/schemas."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [("A1", 2), ("A2", 2), ("A2", 3), ("A3", 2), ("A3", 3), ("A3", 5), ("B2", 2), ("B2", 3), ("B2", 5),
         ("G2", 2), ("G2", 3), ("G2", 5), ("G2", 7), ("G2", 11)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--schemas", required=True)
    ap.add_argument("--data", required=True)
    ap.add_argument("--tmcv")
    args = ap.parse_args()

    schemas = {}
    for f in pathlib.Path(args.schemas).glob("*.schema.json"):
        s = json.loads(f.read_text())
        jsonschema.Draft202012Validator.check_schema(s)
        schemas[s["$id"]] = s

    failures = 0

    def check(doc, where):
        nonlocal failures
        sid = doc.get("schema")
        if sid not in schemas:
            print(f"{where}: unknown schema {sid!r}")
            failures += 1
            return
        errors = list(jsonschema.Draft202012Validator(schemas[sid]).iter_errors(doc))
        for e in errors[:5]:
            print(f"{where}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += bool(errors)

    files = sorted(pathlib.Path(args.data).rglob("*.json"))
    for f in files:
        check(json.loads(f.read_text()), str(f))
    print(f"{len(files)} data files checked")

    if args.tmcv:
        for kind, p in CASES:
            out = subprocess.run([args.tmcv, "report", "--type", kind, "--prime", str(p), "--format", "json",
                                  "--data-dir", args.data], capture_output=True, text=True)
            doc = json.loads(out.stdout)
            check(doc, f"report {kind} p={p}")
            # Round trip through the canonical form.
            canon = json.dumps(doc, sort_keys=True, separators=(",", ":"))
            if json.dumps(json.loads(canon), sort_keys=True, separators=(",", ":")) != canon:
                print(f"report {kind} p={p}: canonical form not stable")
                failures += 1
        print(f"{len(CASES)} reports checked")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
