#!/usr/bin/env python3
"""Regenerate the golden CLI outputs under tests/golden/.

Run after an intentional output-format change, inspect the diff, and commit
the result; the byte-equality tests in tests/test_cli.py pin these files.
"""

import io
import sys
from contextlib import redirect_stdout
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from cli_cases import ALL_CASES  # noqa: E402

from weylkit.cli import main  # noqa: E402


def run_case(argv, stdin_payload):
    buf = io.StringIO()
    old_stdin = sys.stdin
    try:
        if stdin_payload is not None:
            sys.stdin = io.StringIO(stdin_payload)
        with redirect_stdout(buf):
            code = main(argv)
    finally:
        sys.stdin = old_stdin
    return code, buf.getvalue()


def main_script():
    golden_dir = Path(__file__).resolve().parents[1] / "tests" / "golden"
    golden_dir.mkdir(parents=True, exist_ok=True)
    for name, argv, payload, expected_code in ALL_CASES:
        code, out = run_case(argv, payload)
        if code != expected_code:
            raise SystemExit(f"{name}: exit {code}, expected {expected_code}")
        path = golden_dir / f"{name}.golden"
        path.write_text(out, encoding="utf-8")
        print(f"wrote {path.name} ({len(out)} bytes, exit {code})")


if __name__ == "__main__":
    main_script()
