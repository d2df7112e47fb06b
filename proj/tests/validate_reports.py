"""Runs the CLI on every sample problem and validates inputs and reports
against the shipped JSON schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
problem_schema = json.loads((root / "schema" / "problem.schema.json").read_text())
report_schema = json.loads((root / "schema" / "report.schema.json").read_text())

failures = 0
for path in sorted((root / "problems").glob("*.json")):
    problem = json.loads(path.read_text())
    try:
        jsonschema.validate(problem, problem_schema)
        out = subprocess.run([cli, problem["subcommand"], str(path)], check=True, capture_output=True, text=True).stdout
        report = json.loads(out)
        jsonschema.validate(report, report_schema)
        # re-emit and re-parse: exact strings survive unchanged
        assert json.loads(json.dumps(report)) == report
        print(f"ok   {path.name}")
    except Exception as exc:  # report every file
        failures += 1
        print(f"FAIL {path.name}: {exc}")
sys.exit(1 if failures else 0)
