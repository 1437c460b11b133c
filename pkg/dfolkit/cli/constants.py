"""CLI exit codes, named in the sysexits style."""

EX_OK = 0  # Success
EX_CHECK_FAILED = 1  # The kernel rejected the input
EX_GENERAL = 1  # Unexpected failure
EX_DATAERR = 2  # Parse or IO error
EX_USAGE = 2  # Bad command line
EX_CONFIG = 2  # Unreadable or invalid config file
EX_INTERRUPTED = 130  # SIGINT
