"""Rewrite the golden JSON outputs from the current CLI.

Run ``python3 tests/golden/regen.py`` after an intended output change and
review the diff before committing it.
"""

import io
import json
from pathlib import Path

from artifact.cli.main import main

HERE = Path(__file__).parent


def run_case(case: dict) -> tuple:
    out, err = io.StringIO(), io.StringIO()
    code = main(case["args"] + ["--format", "json", "-e", case["source"]], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def load_cases() -> list:
    return json.loads((HERE / "cases.json").read_text())


if __name__ == "__main__":
    for case in load_cases():
        code, text, err = run_case(case)
        if code != 0:
            raise SystemExit(f"{case['name']}: exit {code}\n{err}")
        (HERE / f"{case['name']}.json").write_text(text)
        print(case["name"])
