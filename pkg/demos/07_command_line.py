"""
The command line
================

Everything above is also available as ``eqpic`` (or ``python3 -m eqpic``).
This script drives the same entry point in-process.
"""

from eqpic.cli import run

run(["fab", "--a", "2", "--b", "3", "--n", "3"])
run(["genus", "5"])
run(["picard", "gdmn", "--d", "4", "--m", "1", "--n", "2", "--torsor", "--format", "json"])

# a sweep checks the closed form at every grid point, one JSON line per point
run(["sweep", "--family", "gdmn", "--max-d", "2", "--max-n", "3", "--char", "0", "--char", "2", "--jobs", "2"])

# invalid parameters give exit status 2 and name the broken requirement
print("exit status:", run(["fab", "--a", "3", "--b", "2", "--n", "3"]))
