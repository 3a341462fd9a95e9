"""Size bounds and environment knobs.

Everything here is exact-arithmetic bookkeeping: the bounds exist to keep
exhaustive checks tractable, not to trade precision for speed.
"""

from __future__ import annotations

import os

# Hard cap on constructed ring order; SDFKIT_MAX_ORDER overrides.
DEFAULT_ORDER_CAP = 4096
# Full axiom validation runs at construction up to this order.
DEFAULT_VALIDATE_BOUND = 512
# all_ideals / condition-star enumeration bound.
DEFAULT_IDEAL_ENUM_BOUND = 256
# Integer oracles scan residue pairs only up to these moduli.
Z_ORACLE_MODULUS_CAP = 10**6
# Polynomial factorization degree bound.
DEFAULT_POLY_DEGREE_BOUND = 12

_overrides: dict[str, int] = {}


def order_cap() -> int:
    if "order_cap" in _overrides:
        return _overrides["order_cap"]
    env = os.environ.get("SDFKIT_MAX_ORDER")
    if env:
        try:
            return max(2, int(env))
        except ValueError:
            pass
    return DEFAULT_ORDER_CAP


def validate_bound() -> int:
    return _overrides.get("validate_bound", DEFAULT_VALIDATE_BOUND)


def ideal_enum_bound() -> int:
    return _overrides.get("ideal_enum_bound", DEFAULT_IDEAL_ENUM_BOUND)


def poly_degree_bound() -> int:
    return _overrides.get("poly_degree_bound", DEFAULT_POLY_DEGREE_BOUND)


def set_bound(name: str, value: int | None) -> None:
    """Override a bound in-process (tests); None restores the default."""
    if value is None:
        _overrides.pop(name, None)
    else:
        _overrides[name] = int(value)
