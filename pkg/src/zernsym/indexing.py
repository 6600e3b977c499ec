"""Conversions between Noll single indices, Born-Wolf pairs and ANSI indices.

The Noll convention used throughout is

    j(n, m) = n(n+1)/2 + |m| + u(m),    u(m) = 1 if m >= 0 else 0

so that within each radial degree n the admissible azimuthal frequencies are
visited in the order 0, -2, 2, -4, 4, ... (n even) or -1, 1, -3, 3, ... (n odd).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class ZernikeIndexError(ValueError):
    """Base class for invalid index arguments."""

    reason = "index"


class NegativeDegreeError(ZernikeIndexError):
    reason = "negative"


class BoundError(ZernikeIndexError):
    reason = "bound"


class ParityError(ZernikeIndexError):
    reason = "parity"


class NollRangeError(ZernikeIndexError):
    reason = "range"


@dataclass(frozen=True, order=True)
class BwIndex:
    """Born-Wolf double index ``(n, m)``; construct through :func:`validate_nm`."""

    n: int
    m: int

    def __post_init__(self):
        _check_nm(self.n, self.m)

    def __iter__(self):
        return iter((self.n, self.m))

    @property
    def m_abs(self) -> int:
        return abs(self.m)


def _check_nm(n: int, m: int) -> None:
    if n < 0:
        raise NegativeDegreeError(f"negative radial degree: n={n} must be >= 0")
    if abs(m) > n:
        raise BoundError(f"bound violated: |m|={abs(m)} exceeds n={n}")
    if (n - m) % 2:
        raise ParityError(f"parity violated: n-m={n - m} is odd")


def validate_nm(n: int, m: int) -> BwIndex:
    """Return ``BwIndex(n, m)`` or raise the error subclass naming the violation."""
    return BwIndex(int(n), int(m))


def _as_index(idx) -> BwIndex:
    if isinstance(idx, BwIndex):
        return idx
    n, m = idx
    return validate_nm(n, m)


def _check_j(j: int) -> int:
    j = int(j)
    if j < 1:
        raise NollRangeError(f"Noll index must be >= 1, got j={j}")
    return j


def unit_step(m: int) -> int:
    return 1 if m >= 0 else 0


def nm_to_j(idx) -> int:
    """Noll index of a Born-Wolf pair (accepts a BwIndex or an ``(n, m)`` tuple)."""
    n, m = _as_index(idx)
    if m >= 0:
        return n * (n + 1) // 2 + m + 1
    return n * (n + 1) // 2 - m


def radial_degree(j: int) -> int:
    """Smallest n with ``n(n+1)/2 < j <= (n+1)(n+2)/2``.

    Evaluated with an integer square root; the closed form
    ``ceil((-3 + sqrt(8j+1)) / 2)`` misrounds in floating point near
    triangular numbers once j is large.
    """
    j = _check_j(j)
    n = max((math.isqrt(8 * j + 1) - 3) // 2, 0)
    while (n + 1) * (n + 2) // 2 < j:
        n += 1
    while n > 0 and n * (n + 1) // 2 >= j:
        n -= 1
    return n


def sequence_position(j: int) -> int:
    """Position r (1-based) of m inside the admissible sequence for degree n."""
    n = radial_degree(j)
    return j - n * (n + 1) // 2


def position_to_m(n: int, r: int) -> int:
    if not 1 <= r <= n + 1:
        raise NollRangeError(f"position r={r} outside 1..{n + 1} for n={n}")
    if n % 2 == 0:
        return -r if r % 2 == 0 else r - 1
    return r - 1 if r % 2 == 0 else -r


def j_to_nm(j: int) -> BwIndex:
    n = radial_degree(j)
    r = j - n * (n + 1) // 2
    return BwIndex(n, position_to_m(n, r))


def nm_to_k(idx) -> int:
    """Number of radial terms minus one, ``(n - |m|) / 2``."""
    n, m = _as_index(idx)
    return (n - abs(m)) // 2


def nm_to_ansi(idx) -> int:
    n, m = _as_index(idx)
    return (n * (n + 2) + m) // 2


def ansi_to_nm(j_ansi: int) -> BwIndex:
    j_ansi = int(j_ansi)
    if j_ansi < 0:
        raise NollRangeError(f"ANSI index must be >= 0, got {j_ansi}")
    # rows of the ANSI triangle start at n(n+1)/2
    n = (math.isqrt(8 * j_ansi + 1) - 1) // 2
    m = 2 * j_ansi - n * (n + 2)
    return BwIndex(n, m)


def legacy_j_to_nm(j: int) -> tuple[int, int]:
    """Textbook ``j -> (n, m)`` formulas, kept as a differential test oracle.

    Not canonical: the sign of m follows a different convention from
    :func:`j_to_nm`; only n and |m| are guaranteed to agree.
    """
    j = _check_j(j)
    n = math.floor(math.sqrt(2 * j - 1) + 0.5) - 1
    if n % 2 == 0:
        m = 2 * ((2 * j + 1 - n * (n + 1)) // 4)
    else:
        m = 2 * ((2 * (j + 1) - n * (n + 1)) // 4) - 1
    return n, m


def legacy_j_to_nm_printed(j: int) -> tuple[int, int]:
    """Variant with ``2j + 1`` in the odd-n branch as well.

    This reading returns |m| = 1 for j = 9 (n = 3), which cannot be right; it
    is kept only so the discrepancy stays visible in the test suite.
    """
    j = _check_j(j)
    n = math.floor(math.sqrt(2 * j - 1) + 0.5) - 1
    q = (2 * j + 1 - n * (n + 1)) // 4
    return n, (2 * q if n % 2 == 0 else 2 * q - 1)
