"""Shared plumbing: exhaustive-mode caps and exact big-integer logarithms."""

import math
import os
from fractions import Fraction

ENV_CAP = "DELRECON_N_CAP"

# Default length caps for operations that materialize exponentially large
# objects.  All of them can be overridden at once through DELRECON_N_CAP.
SET_OP_CAP = 20      # set-valued ball operations driven from the CLI
ENUM_CAP = 24        # codebook enumeration (scans 2^n words)
COVER_CAP = 14       # clique-cover verification (2^n bitmap + expansion)
MIS_CAP = 8          # exact maximum-independent-set search


class ExhaustiveCapError(ValueError):
    """Raised when an exhaustive operation is asked to exceed its length cap."""


def effective_cap(default: int) -> int:
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_CAP} must be an integer, got {raw!r}") from exc


def check_cap(n: int, default: int, what: str) -> None:
    cap = effective_cap(default)
    if n > cap:
        raise ExhaustiveCapError(
            f"{what} limited to n <= {cap} (requested n = {n}); "
            f"set {ENV_CAP} to raise the cap"
        )


def exact_log2(x) -> float:
    """log2 of a positive integer or Fraction, via bit length plus a
    correction from the top 128 bits, so huge exact counts never round
    through a float on the way in."""
    if isinstance(x, Fraction):
        return exact_log2(x.numerator) - exact_log2(x.denominator)
    if x <= 0:
        raise ValueError("log2 of non-positive value")
    shift = max(0, x.bit_length() - 128)
    return shift + math.log2(x >> shift)
