#!/usr/bin/env python3
"""
Command-line runner for the MQSym toolkit.
"""

import sys

from backend.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
