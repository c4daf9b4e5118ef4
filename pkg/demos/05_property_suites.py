"""Running the seeded verification suites from Python.

The same suites back the ``persistd verify`` subcommand; reports are
deterministic in (suite, seed, trials, params) and any counterexample
payload replays standalone.
"""

from persistd import SUITE_NAMES, run_suite

print("available suites:", ", ".join(SUITE_NAMES))
print()

for name, params in [
    ("pseudometric", {}),
    ("cube-isometry", {"N": 4}),
    ("matching-oracle", {"grid": 5}),
    ("cauchy-incomplete", {"depth": 10}),
]:
    report = run_suite(name, seed=1, trials=25, params=params)
    print(report.render_table())
    print()

report = run_suite("binary-discrete", seed=7, trials=10)
print("JSON form of a report:")
print(report.to_json())
