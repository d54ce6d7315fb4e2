#!/usr/bin/env python3
"""Sweep the grade threshold over the price fixture and show how the
lower approximation grows while the upper approximation shrinks."""

import pathlib
import sys

from fuzzycover.cli import main

FIXTURE = pathlib.Path(__file__).parent.parent / "fixtures" / "price.json"

if __name__ == "__main__":
    sys.exit(
        main(
            [
                "sweep", str(FIXTURE),
                "--op", "grade",
                "--k", "0:6:0.5",
                "--target", "X",
            ]
        )
    )
