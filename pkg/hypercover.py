"""Command-line entry point for hypercover.

Usage: ``python hypercover.py <command> [options]``; see ``--help``.
"""
import sys

from src.cli.app import run

if __name__ == "__main__":
    sys.exit(run())
