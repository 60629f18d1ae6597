"""
Configuration Module

This module provides centralized, type-safe configuration management
for the coefficient toolkit.

Components:
-----------
- **settings.py**: Pydantic-based configuration with environment variable loading
- **constants.py**: System-wide constants and enums

Environment Variables:
---------------------
```bash
KRON_CACHE=~/.cache/kron.jsonl     # default cache file (--cache overrides)
KRON_L1_CACHE_SIZE=4096
KRON_MAX_N=40                      # character oracle cap (1..40)
KRON_VERIFY=true                   # verification-build cross-checks
KRON_VERIFY_TRUNCATION_MAX_N=16
KRON_WORKERS=4
LOG_LEVEL=INFO
LOG_FORMAT=json
```

Testing:
-------
```python
import os
from src.core.config import reload_settings

os.environ["KRON_VERIFY"] = "true"
settings = reload_settings()
assert settings.verification.KRON_VERIFY
```

Author: System Architect
Date: 2026-02-11
"""

from src.core.config.constants import (
    ACCEPTANCE_MAX_SIZE,
    ACCEPTANCE_N_MAX,
    CSV_HEADER,
    EMPTY_PARTITION_TOKEN,
    PART_SEPARATOR,
    SUITE_DEFAULT_DAGGER_N,
    SUITE_DEFAULT_MAX_SIZE,
    SUITE_DEFAULT_N_MAX,
    SUITE_DEFAULT_N_WINDOW,
    CoefficientKind,
    ExitCode,
    Stage,
)
from src.core.config.settings import get_settings, reload_settings

__all__ = [
    # Settings
    "get_settings",
    "reload_settings",
    # Enums
    "Stage",
    "CoefficientKind",
    "ExitCode",
    # Encoding
    "EMPTY_PARTITION_TOKEN",
    "PART_SEPARATOR",
    "CSV_HEADER",
    # Suite defaults
    "SUITE_DEFAULT_MAX_SIZE",
    "SUITE_DEFAULT_N_MAX",
    "SUITE_DEFAULT_N_WINDOW",
    "SUITE_DEFAULT_DAGGER_N",
    "ACCEPTANCE_MAX_SIZE",
    "ACCEPTANCE_N_MAX",
]
