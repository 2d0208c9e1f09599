"""Runs the fanforge binary on small inputs and validates every JSON line
against the schemas directory."""

import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schemas[path.name] = json.loads(path.read_text())
    registry = Registry().with_resources(
        (name, Resource.from_contents(body)) for name, body in schemas.items()
    )
    return schemas, registry


def run(binary, args, stdin=""):
    done = subprocess.run([binary, *args], input=stdin, capture_output=True, text=True)
    return done.returncode, [line for line in done.stdout.splitlines() if line.strip()]


CASES = [
    # schema, arguments, stdin, expected exit codes
    ("classify.schema.json", ["classify", "D~{", "Dhc", "C~", "I?h]@eOWG"], "", {0}),
    ("classify.schema.json", ["classify", "--input", "-"], "Dhc\n!!bad\n", {3}),
    ("verify.schema.json", ["verify", "--checks", "val,parity,main,overfull", "Dhc", "D~{"], "", {0}),
    ("verify.schema.json", ["verify", "--checks", "val"], "Dhc\n!!bad\n", {3}),
    ("scan.schema.json", ["scan", "--input", "-"], "Dhc\nD~{\nFhCKG\n\n!!bad\n", {3}),
    ("scan.schema.json", ["scan", "--timing", "--checks", "fan-elementary,val"], "Dhc\n", {0}),
    ("fan.schema.json", ["fan", "Dhc", "--edge", "0-1"], "", {0}),
    ("fan.schema.json", ["fan", "Dhc", "--edge", "0-1", "--mode", "reachability", "--seed", "3"], "", {0}),
    ("fan.schema.json", ["fan", "C~", "--edge", "0-1"], "", {0}),
    ("tau.schema.json", ["tau", "Dhc", "--edge", "0-1"], "", {0}),
]


def main():
    binary = sys.argv[1]
    schema_dir = pathlib.Path(sys.argv[2])
    extra = pathlib.Path(sys.argv[3]) if len(sys.argv) > 3 else None
    schemas, registry = load_registry(schema_dir)
    for body in schemas.values():
        Draft202012Validator.check_schema(body)

    cases = list(CASES)
    if extra is not None:
        lines = extra.read_text().splitlines()
        graph, u, v = lines[0].split()
        cases.append(("tau.schema.json", ["tau", graph, "--edge", f"{u}-{v}", "--force"], "", {0, 2}))

    failures = 0
    checked = 0
    for name, args, stdin, codes in cases:
        validator = Draft202012Validator(schemas[name], registry=registry)
        code, lines = run(binary, args, stdin)
        if code not in codes:
            print(f"FAIL exit {code} for {' '.join(args)}")
            failures += 1
        if not lines:
            print(f"FAIL no output for {' '.join(args)}")
            failures += 1
        for line in lines:
            checked += 1
            for error in validator.iter_errors(json.loads(line)):
                print(f"FAIL {name} on {' '.join(args)}: {error.message} at {list(error.absolute_path)}")
                failures += 1
    print(f"{checked} line(s) validated, {failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
