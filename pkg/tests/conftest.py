import os

# Randomized suites draw from one seeded generator so failures replay.
# Override with B1_SEED=<int>.
DEFAULT_SEED = 1729

def battery_seed():
    return int(os.environ.get("B1_SEED", DEFAULT_SEED))
