"""
Exact division by a power of x.
"""

from typing import TypeVar

from ..models.multi_series import MultiSeries
from ..models.truncated_series import TruncatedSeries


S = TypeVar("S", TruncatedSeries, MultiSeries)


def exact_divide(f: S, k: int) -> S:
    """
    Quotient g with f = x^k g; trunc(g) = trunc(f) - k.

    Raises:
        NotDivisible: a nonzero coefficient sits below x^k
    """
    if k < 0:
        raise ValueError("Division exponent must be non-negative")
    return f.exact_divide(k)
