"""Exact rational scalars used throughout the toolkit.

All region math runs on exact rationals; floats never enter any computation.
Two interchangeable backends provide the scalar type:

* ``gmpy2.mpq`` (default when installed): C-backed, roughly an order of
  magnitude faster on the vertex-enumeration hot path.
* ``fractions.Fraction``: pure-stdlib fallback.

Both keep values canonical at all times (reduced, positive denominator), and
both expose ``numerator``/``denominator``. Select a backend explicitly with
the environment variable ``DOFSEP_BACKEND`` set to ``gmpy2`` or ``fractions``
before the first import; a process uses exactly one backend.
"""

from __future__ import annotations

import os
from fractions import Fraction

_requested = os.environ.get("DOFSEP_BACKEND", "").strip().lower()

if _requested in ("", "gmpy2"):
    try:
        from gmpy2 import mpq as Rat

        BACKEND = "gmpy2"
    except ImportError:
        if _requested == "gmpy2":
            raise
        Rat = Fraction
        BACKEND = "fractions"
elif _requested in ("fractions", "fraction", "stdlib"):
    Rat = Fraction
    BACKEND = "fractions"
else:
    raise RuntimeError(
        f"DOFSEP_BACKEND={_requested!r} not recognized; use 'gmpy2' or 'fractions'"
    )

ZERO = Rat(0)
ONE = Rat(1)


def rat(value) -> "Rat":
    """Coerce ``value`` to the exact rational scalar type.

    Accepts backend rationals, ints, and strings in fraction ("5/8") or
    decimal ("0.625") form; decimal strings convert exactly. Floats are
    rejected: binary floats are not exact representations of the decimals
    they print as.
    """
    if isinstance(value, (Rat, int)) and not isinstance(value, bool):
        return Rat(value)
    if isinstance(value, Fraction):
        return Rat(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            frac = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse rational from {value!r}: {exc}") from None
        return Rat(frac.numerator, frac.denominator)
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass a string like '0.625' for exact conversion"
        )
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def rat_str(value) -> str:
    """Render a rational as ``p`` or ``p/q`` (canonical, never a float)."""
    num, den = value.numerator, value.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def rat_vector(values) -> tuple:
    """Coerce an iterable to a tuple of exact rationals."""
    return tuple(rat(v) for v in values)
