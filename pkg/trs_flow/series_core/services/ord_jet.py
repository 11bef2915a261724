"""
Order and jet of a series.
"""

from typing import Optional, TypeVar, Union

from ...shared.errors import InsufficientPrecision
from ..models.multi_series import MultiSeries
from ..models.truncated_series import TruncatedSeries


S = TypeVar("S", TruncatedSeries, MultiSeries)


def ord_jet(f: S, k: int) -> tuple[Union[int, str], S]:
    """
    Return (ord f, j_k f).

    ord is the least degree with a nonzero coefficient, or the symbol ">K"
    when every known coefficient vanishes. For MultiSeries degrees are total
    degrees.

    Raises:
        InsufficientPrecision: k exceeds the known truncation
    """
    if k > f.trunc:
        raise InsufficientPrecision(f"Jet order {k} exceeds truncation {f.trunc}")
    order: Optional[int] = f.order()
    return (order if order is not None else f">{f.trunc}"), f.jet(k)
