"""Checking arrows of the proof forest, and scheduling several searches fairly."""

from hcsearch import load_expected, load_forest, schedule_discovery, verify_forest
from hcsearch.catalog_io import attach_expected, default_expected_path, default_forest_path

forest = attach_expected(load_forest(default_forest_path()), load_expected(default_expected_path()))
print(len(forest), "arrows in the forest")

# The cheapest arrows finish in well under a second each.
cheap = [e for e in forest if e.expected_weight is not None and e.expected_weight < 6000]
report = verify_forest(cheap, jobs=2)
for r in report.results:
    print(r.line, "ok" if r.matches else "MISMATCH")
print(report.summary())

# Discovery mode: advance the lightest search first, stop anything that
# passes the ceiling.
candidates = [("I3", "I14"), ("I12", "I1"), ("I2", "I12"), ("K7", "H2p")]
for inst in schedule_discovery(candidates, weight_ceiling=10_000):
    print(inst.source, inst.target, inst.status.value, inst.state.added_count, inst.weight)
