#!/usr/bin/env python3
"""Run the full acceptance/reproduction suite and print one line per check.

Equivalent to `subdesigns repro paper-examples`; exits nonzero if any
check fails.
"""

import sys

from subdesigns.cli import main

if __name__ == "__main__":
    sys.exit(main(["repro", "paper-examples"] + sys.argv[1:]))
