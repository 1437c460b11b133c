"""Kernel-wide defaults.

Every value here can be overridden from a config file (see
``dfolkit.cli.config.manager``) or from command-line options.
"""

# Reconstruction fuel: number of inference steps one top-level check may take
DEFAULT_FUEL = 10_000

# Proof-checking mode used when neither config nor CLI names one
DEFAULT_MODE = "dfol"

# Exhaustive law suites enumerate fibers up to this many elements
DEFAULT_LAW_SIZE = 2

# Height bound for R5/R5* judgement enumeration
DEFAULT_MAX_HEIGHT = 4

# Shortlex alphabet for identifier variables
IDENTIFIER_ALPHABET = "abcdefghijklmnopqrstuvwxyz"

CONFIG_KEYS = {
    "fuel": DEFAULT_FUEL,
    "mode": DEFAULT_MODE,
    "law_size": DEFAULT_LAW_SIZE,
    "max_height": DEFAULT_MAX_HEIGHT,
    "json": False,
}
