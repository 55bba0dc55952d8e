"""Ready-made finite algebras used in the docs and the test suite."""

from .algebra import FiniteAlgebra, Operation

__all__ = [
    "bool2",
    "boolean_ring",
    "two_element_semilattice",
    "chain3",
    "mod3",
]


def bool2() -> FiniteAlgebra:
    """({0,1}; +, *, neg) with + = xor, * = and, neg = not.

    Functionally complete, so its n-ary clone holds all 2**(2**n)
    functions.
    """
    return FiniteAlgebra(
        "bool2",
        2,
        (
            Operation("+", 2, (0, 1, 1, 0)),
            Operation("*", 2, (0, 0, 0, 1)),
            Operation("neg", 1, (1, 0)),
        ),
    )


def boolean_ring() -> FiniteAlgebra:
    """({0,1}; +, *) with + = xor and * = and."""
    return FiniteAlgebra(
        "boolean-ring",
        2,
        (Operation("+", 2, (0, 1, 1, 0)), Operation("*", 2, (0, 0, 0, 1))),
    )


def two_element_semilattice() -> FiniteAlgebra:
    """({0,1}; *) with * = min."""
    return FiniteAlgebra("semilattice2", 2, (Operation("*", 2, (0, 0, 0, 1)),))


def chain3() -> FiniteAlgebra:
    """The 3-element chain 0 < 1 < 2 as a lattice (min, max)."""
    return FiniteAlgebra(
        "chain3",
        3,
        (
            Operation("min", 2, tuple(min(a, b) for a in range(3) for b in range(3))),
            Operation("max", 2, tuple(max(a, b) for a in range(3) for b in range(3))),
        ),
    )


def mod3() -> FiniteAlgebra:
    """A 3-element mixed-signature algebra: min, max, and successor mod 3."""
    return FiniteAlgebra(
        "mod3",
        3,
        (
            Operation("min", 2, tuple(min(a, b) for a in range(3) for b in range(3))),
            Operation("max", 2, tuple(max(a, b) for a in range(3) for b in range(3))),
            Operation("succ", 1, (1, 2, 0)),
        ),
    )
