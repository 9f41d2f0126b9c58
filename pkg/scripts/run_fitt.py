#!/usr/bin/env python3
# scripts/run_fitt.py
"""Run the fitt command line from a source checkout."""

import sys

from dotenv import load_dotenv

load_dotenv()

from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
