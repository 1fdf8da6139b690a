"""Golden CLI corpus: load the scripted invocations and run them in-process.

Run this file directly to rewrite the ``.out`` files after an intended
output change; review the diff before committing it.
"""

import os
import shlex
from contextlib import contextmanager
from pathlib import Path

from click.testing import CliRunner

from clonecraft.cli import main

HERE = Path(__file__).parent / "golden"


def load_cases():
    cases = []
    for line in (HERE / "cases.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, code, args = (part.strip() for part in line.split("|"))
        cases.append((name, int(code), shlex.split(args)))
    return cases


@contextmanager
def _cwd(path):
    old = os.getcwd()
    os.chdir(path)
    try:
        yield
    finally:
        os.chdir(old)


def invoke(args, threads=1):
    runner = CliRunner()
    with _cwd(HERE):
        result = runner.invoke(main, args, env={"CLONECRAFT_THREADS": str(threads)}, catch_exceptions=False)
    return result.exit_code, result.stdout


if __name__ == "__main__":
    for name, _, args in load_cases():
        _, out = invoke(args)
        (HERE / f"{name}.out").write_text(out)
        print(name)
