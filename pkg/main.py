"""
Entry point for the lcm-monoid toolkit.

Responsibilities:
- Provide a simple CLI entry point (`python main.py <command> ...`)
- Hand the exit code of the selected subcommand back to the shell
"""

from __future__ import annotations

import sys

from ui.cli import main

if __name__ == "__main__":
    sys.exit(main())
