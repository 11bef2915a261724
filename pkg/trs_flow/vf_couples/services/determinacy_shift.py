"""
Determinacy shift service.
"""

from typing import Union

from ..models.coord_transform import CoordTransform
from ..models.transform_chain import TransformChain


def determinacy_shift(chain: Union[TransformChain, list[CoordTransform]], s: int) -> int:
    """
    h(s) for phi = phi_1 o ... o phi_k: the jet order of xi that fixes the
    s-jet of phi^* xi. Blow-ups add one; other transformations add nothing.
    """
    if not isinstance(chain, TransformChain):
        chain = TransformChain(steps=list(chain))
    return chain.determinacy(s)
