"""
Catalan's triangle C(n, k), 0 <= k <= n, in exact integers.

Two independent routes are provided: the additive rule (each entry is the one
to its left plus the one above) and the factorial closed form
(n+k)! (n-k+1) / (k! (n+1)!).

>>> catalan_triangle(5)[-1]
[1, 4, 9, 14, 14]
>>> catalan(7, 4), catalan(7, 4, method="closed")
(165, 165)
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .errors import InvalidArgumentError

__all__ = ["catalan", "catalan_closed", "catalan_triangle", "catalan_number", "METHODS"]

METHODS = ("recursive", "closed")


@lru_cache(maxsize=None)
def _row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    above = _row(n - 1)
    row = [above[0]]
    for k in range(1, n):
        row.append(row[k - 1] + above[k])
    row.append(row[n - 1])
    return tuple(row)


def catalan_triangle(rows: int) -> list[list[int]]:
    """The first ``rows`` rows (n = 0 .. rows-1) built by the additive rule."""
    if rows < 1:
        raise InvalidArgumentError(f"rows must be >= 1, got {rows}")
    # build bottom-up so the cache never recurses deeply
    return [list(_row(n)) for n in range(rows)]


def catalan_closed(n: int, k: int) -> int:
    num = factorial(n + k) * (n - k + 1)
    den = factorial(k) * factorial(n + 1)
    q, r = divmod(num, den)
    assert r == 0, (n, k)
    return q


def catalan(n: int, k: int, method: str = "recursive") -> int:
    if not 0 <= k <= n:
        raise InvalidArgumentError(f"need 0 <= k <= n, got n={n}, k={k}")
    if method == "recursive":
        for m in range(n + 1):
            _row(m)
        return _row(n)[k]
    if method == "closed":
        return catalan_closed(n, k)
    raise InvalidArgumentError(f"unknown method {method!r}; expected one of {METHODS}")


def catalan_number(n: int) -> int:
    """C_n = binom(2n, n) / (n + 1)."""
    return comb(2 * n, n) // (n + 1)
