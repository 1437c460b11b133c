"""dfolkit: a proof-checking kernel for first-order logic with dependent sorts."""

__version__ = "0.3.0"
