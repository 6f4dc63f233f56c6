"""Exact computations in representation rings of wreath products S_n(G)."""

from .groups import builtin, load_group_file
from .partitions import conjugate, hook, lr_coefficient, pad, size, two_row
from .wreath import RepRingElement, WreathProduct, induce, restrict, wreath_product

__all__ = [
    "builtin", "load_group_file", "conjugate", "hook", "lr_coefficient", "pad",
    "size", "two_row", "RepRingElement", "WreathProduct", "induce", "restrict",
    "wreath_product",
]
