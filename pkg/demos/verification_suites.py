"""
Running the verification suites
===============================

The same suites behind ``bmaps verify``, called from Python.
"""

# %%
import json

from bmaps.harness import run_suite
from bmaps.mapstats import parse_rules

rules = parse_rules("canonical,seeded:1,seeded:2,seeded:3")

# %%
for name in ("jack", "map-series", "unicellular", "marginal"):
    report = run_suite(name, 4, rules)
    print(name, "passed" if report.passed else report.failures())

# %%
# Open questions are reported, never asserted.
exp = run_suite("experimental", 3, rules[:1])
rows = [o for o in exp.observations if o["n"] == 3 and o["h"] != ["0/1"] and o["h"]]
print(json.dumps(rows[:2], indent=1))
print(sum(o["H_eta(-1) = h(-1)"] for o in exp.observations), "of", len(exp.observations), "triples agree at beta = -1")
