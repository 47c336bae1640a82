from curvex.construct.algorithm1 import EmbedResult, algorithm1_embed
from curvex.construct.basket import (
    BasketPotential,
    JailbreakResult,
    basket_block,
    basket_jailbreak,
    basket_potential,
    jailbreak_pendants,
)
from curvex.construct.egyptian import egyptian_fraction
from curvex.construct.realize import (
    SMALLEST_DX_GRAPH6,
    Realization,
    negative_unit_block,
    realize_rational_index,
)

__all__ = [
    "SMALLEST_DX_GRAPH6",
    "BasketPotential",
    "EmbedResult",
    "JailbreakResult",
    "Realization",
    "algorithm1_embed",
    "basket_block",
    "basket_jailbreak",
    "basket_potential",
    "egyptian_fraction",
    "jailbreak_pendants",
    "negative_unit_block",
    "realize_rational_index",
]
