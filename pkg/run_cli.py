"""Helper script to run the rainbow CLI with a robust import path.

Run this from the repo root (or anywhere) with:
    python run_cli.py solve --family f.json

It puts the repository root on sys.path so the `rainbow` package imports
without installation, then hands the arguments to `rainbow.main`.
"""
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
if HERE not in sys.path:
    sys.path.insert(0, HERE)


def main() -> int:
    from rainbow.main import main as cli_main
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
