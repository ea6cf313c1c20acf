"""Fundamental groups of real line arrangement complements."""

from ._core import (
    ArrpiError,
    Presentation,
    abelianize,
    check_hom,
    complement,
    coset_index,
    image,
    infinite_order,
    lac,
    meridians,
    normalize,
    orbifold,
    simplify,
    svg,
)

__all__ = [
    "ArrpiError",
    "Presentation",
    "abelianize",
    "check_hom",
    "complement",
    "coset_index",
    "image",
    "infinite_order",
    "lac",
    "meridians",
    "normalize",
    "orbifold",
    "simplify",
    "svg",
]
