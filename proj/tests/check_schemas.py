#!/usr/bin/env python3
"""Run CLI commands and validate their JSON output against schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("element", ["normalize", "--n", "2", "--type", "vv|vv", "--word", "X+(1) X+(1)"]),
    ("element", ["normalize", "--n", "3", "--type", "vv^|^vv", "--word", "X-(2) X+(1)"]),
    ("element", ["multiply", "--n", "2", "--type", "v^|v^", "--word", "E(1)", "--type2", "v^|v^", "--word2", "S+(1) S-(1)"]),
    ("element", ["hecke-to-walled", "--n", "2", "--r", "1", "--s", "1", "--word", "1"]),
    ("matrix", ["matrix", "--n", "2", "--type", "vv|vv", "--word", "X+(1)"]),
    ("matrix", ["matrix", "--n", "2", "--type", "v^|v^", "--word", "E(1)", "--via", "normal-form"]),
    ("structure-constants", ["structure-constants", "--n", "2", "--r", "1", "--s", "1"]),
    ("flip", ["flip", "--r", "1", "--s", "1", "--connector", "T1-B2,T2-B1"]),
    ("verify", ["verify", "presentation", "--r", "2", "--s", "2", "--n", "2"]),
    ("verify", ["verify", "duality", "--n", "2", "--r", "1", "--s", "1", "--q0", "5/3"]),
    ("verify", ["verify", "duality", "--n", "2", "--r", "1", "--s", "1", "--timings"]),
    ("verify", ["verify", "skein", "--n", "2", "--samples", "10"]),
    ("verify", ["verify", "hecke", "--n", "2"]),
    ("verify", ["verify", "linking", "--samples", "10"]),
    ("verify", ["verify", "all"]),
]


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    resources = []
    for p in schema_dir.glob("*.schema.json"):
        resources.append((p.name, Resource.from_contents(json.loads(p.read_text()))))
    registry = Registry().with_resources(resources)
    failures = 0
    for name, args in CASES:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        proc = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True)
        try:
            if proc.returncode != 0:
                raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
            jsonschema.Draft202012Validator(schema, registry=registry).validate(json.loads(proc.stdout))
            print(f"ok    {name:20s} {' '.join(args)}")
        except Exception as e:
            failures += 1
            print(f"FAIL  {name:20s} {' '.join(args)}\n      {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
