import os

import yaml

CONFIG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "config.yaml")

# -------- Load Configs --------
with open(CONFIG_PATH, "r") as f:
    config = yaml.safe_load(f)

# Environment overrides
FORMAT_ENV_VAR = "CONJLOGIC_FORMAT"
LOG_LEVEL_ENV_VAR = "CONJLOGIC_LOG_LEVEL"

# Theory defaults
DEFAULT_THEORY = config['DEFAULT_THEORY']  # quantum | toy
DEFAULT_CZ = config['DEFAULT_CZ']  # standard | tilde
DEFAULT_FORMAT = config['DEFAULT_FORMAT']  # text | json
OUTPUT_FORMATS = ('text', 'json')

LOG_LEVEL = os.environ.get(LOG_LEVEL_ENV_VAR, config['LOG_LEVEL'])

# Packed representation
WORD_BITS = config['WORD_BITS']

# Exhaustive search limits
MAX_LAW_ATOMS = config['MAX_LAW_ATOMS']  # 3^8 = 6561 assignments
MAX_CLOSURE_GENERATORS = config['MAX_CLOSURE_GENERATORS']

# Bench parameters
BENCH_DEFAULT_N = config['BENCH_DEFAULT_N']
BENCH_DEFAULT_GENERATORS = config['BENCH_DEFAULT_GENERATORS']
BENCH_DEFAULT_REPETITIONS = config['BENCH_DEFAULT_REPETITIONS']
BENCH_SCRAMBLE_ROUNDS = config['BENCH_SCRAMBLE_ROUNDS']
BENCH_MAX_CLOSURE_GENERATORS = config['BENCH_MAX_CLOSURE_GENERATORS']
