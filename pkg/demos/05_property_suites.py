"""
Running property suites
=======================

Every inequality is checked on reproducible random instances.  Each trial
draws from its own generator, so any witness can be replayed alone.
"""

from admeans.harness import InstanceSpec, replay, run_suite

spec = InstanceSpec(dim=6, min_dim=1, count=300, seed=0)
for name in ("amgmhm", "thm34", "identities", "prop45"):
    print(run_suite(name, spec).summary())

# the survey is inverted: it passes when it finds refutations
survey = run_suite("question42-survey", InstanceSpec(dim=2, count=500, seed=1), use_oracle=True)
print(survey.summary())
w = survey.witnesses[0]
trial = replay("question42-survey", InstanceSpec(dim=2, count=500, seed=1), w["index"])
print("replayed witness", w["index"], "->", trial.observed["relation"]["tag"], "| oracle:", w["oracle"])

print(run_suite("paper-examples").summary())
