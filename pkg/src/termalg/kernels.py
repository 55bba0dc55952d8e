"""Kernel selection: compiled extension if built, pure Python otherwise.

Both implementations share one contract (see `_kernels_py`); everything
above this module is backend-agnostic. `BACKEND` reports which one is
active. The helpers at the bottom translate between the kernels' 0-based
position masks and the public 1-based variable-index sets.
"""

try:
    from . import _kernels as _impl

    BACKEND = "compiled"
except ImportError:  # extension not built
    from . import _kernels_py as _impl

    BACKEND = "python"

essential_mask = _impl.essential_mask
restrict = _impl.restrict
cp3_counts = _impl.cp3_counts
compose = _impl.compose


def mask_of_indices(indices):
    """Bitmask for a set of 1-based variable indices."""
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def indices_of_mask(mask):
    """1-based variable indices packed in a bitmask, as a frozenset."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)
