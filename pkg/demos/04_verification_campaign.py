# %% [markdown]
# # A seeded verification campaign
#
# Every inequality is turned into a slack that must stay nonnegative up
# to a tolerance.  Trial i draws from its own Philox substream, so the
# report is the same whatever the chunking or worker count.

# %%
import json

from harnack.harness import TrialConfig, replay_witness, run_all, run_suite

config = TrialConfig(seed=1, trials=20_000)
report = run_all(config)
print("pass:", report.passed)
for rec in report.suites:
    print(f"{rec.suite:30s} {rec.violations:>3d} / {rec.trials:<6d} worst {rec.worst_slack:+.2e}")

# %% [markdown]
# Same seed, same bytes.

# %%
print(run_all(config).to_json() == report.to_json())

# %% [markdown]
# With the tolerance set to zero the extremal probes break the main
# theorem at rounding level.  The witness is enough to replay the
# worst row exactly.

# %%
strict = TrialConfig(seed=1, trials=1000, tolerances={"main_theorem": 0.0})
rec = run_suite("main_theorem", strict)
print(rec.violations, rec.worst_slack)
print(json.dumps(rec.witness, indent=1)[:400])
print(replay_witness("main_theorem", rec.witness) == rec.worst_slack)
