"""Essential variables, identities, separable sets, and the subterm order.

All notions are relative to a finite algebra: a variable is essential in
a term when the induced operation actually depends on that input, an
identity holds when both sides induce the same table, and a set M of
essential variables is separable when some assignment of constants to
the other variables leaves exactly M essential.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Optional

from . import kernels
from .algebra import FiniteAlgebra, FunctionTable, induced_operation
from .errors import TermError
from .terms import Apply, Constant, Term, Variable, apply_evaluation, max_variable, variables

__all__ = [
    "essential_vars",
    "ess",
    "satisfies_identity",
    "ess_via_lemma35",
    "is_separable",
    "sep_sets",
    "is_subterm",
]


def essential_vars(table: FunctionTable) -> frozenset[int]:
    """The set of argument positions (1-based) the table depends on."""
    mask = kernels.essential_mask(table.values, table.carrier_size, table.arity)
    return kernels.indices_of_mask(mask)


def _context(n: Optional[int], *ts: Term) -> int:
    return max((max_variable(t) for t in ts), default=0) if n is None else n


def ess(term: Term, alg: FiniteAlgebra, n: Optional[int] = None) -> frozenset[int]:
    """Essential variables of a term or polynomial in the algebra.

    Defaults n to the largest variable index; the answer is always a
    subset of variables(term).
    """
    n = _context(n, term)
    return essential_vars(induced_operation(term, alg, n))


def satisfies_identity(alg: FiniteAlgebra, s: Term, t: Term, n: Optional[int] = None) -> bool:
    """Do both sides induce the same n-ary operation on the algebra?"""
    n = _context(n, s, t)
    return induced_operation(s, alg, n).values == induced_operation(t, alg, n).values


def _rename_variable(term: Term, src: int, dst: int) -> Term:
    if isinstance(term, Variable):
        return Variable(dst) if term.index == src else term
    if isinstance(term, Constant):
        return term
    return Apply(term.symbol, tuple(_rename_variable(c, src, dst) for c in term.children))


def ess_via_lemma35(term: Term, alg: FiniteAlgebra, n: int, i: int) -> bool:
    """Essentiality of x_i decided through identity failure.

    Renames x_i to the fresh variable x_{n+1} and reports whether the
    algebra refutes the identity between the term and its renaming.
    Agrees with membership in ess(term, alg, n).
    """
    if not 1 <= i <= n:
        raise TermError(f"variable index {i} outside 1..{n}")
    renamed = _rename_variable(term, i, n + 1)
    return not satisfies_identity(alg, term, renamed, n + 1)


def _check_subset(subset: Iterable[int], n: int) -> frozenset[int]:
    m = frozenset(int(i) for i in subset)
    for i in sorted(m):
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
    return m


def is_separable(term: Term, alg: FiniteAlgebra, n: int, subset: Iterable[int]) -> bool:
    """Is the set separable: can constants for the other variables leave
    exactly this set essential?

    The set must be a nonempty subset of ess(term, alg, n); anything else
    is a precondition violation and raises ValueError.
    """
    m = _check_subset(subset, n)
    if not m:
        raise ValueError("separability is defined for nonempty variable sets")
    essential = ess(term, alg, n)
    for i in sorted(m):
        if i not in essential:
            raise ValueError(f"x{i} is not essential in the term, so the set is not admissible")
    table = induced_operation(term, alg, n)
    k = alg.carrier_size
    target = kernels.mask_of_indices(m)
    outside = [p for p in range(n) if not (target >> p) & 1]
    for consts in product(range(k), repeat=len(outside)):
        restricted = kernels.restrict(table.values, k, n, outside, consts)
        if kernels.essential_mask(restricted, k, n) == target:
            return True
    return False


def sep_sets(term: Term, alg: FiniteAlgebra, n: Optional[int] = None) -> list[frozenset[int]]:
    """All separable sets, ordered lexicographically by sorted indices."""
    n = _context(n, term)
    table = induced_operation(term, alg, n)
    counts = kernels.cp3_counts(table.values, alg.carrier_size, n)
    found = [kernels.indices_of_mask(m) for m in range(1, 1 << n) if counts[m] >= 1]
    return sorted(found, key=lambda s: tuple(sorted(s)))


def is_subterm(t: Term, s: Term, alg: FiniteAlgebra, n: Optional[int] = None) -> bool:
    """Is t a subterm of s in the algebra's sense?

    True when some evaluation of a proper subset M of var(s), the empty
    set included, turns s into a polynomial inducing the same operation
    as t. With M empty this is plain identity, so the relation is
    reflexive.
    """
    n = _context(n, s, t)
    k = alg.carrier_size
    target = induced_operation(t, alg, n).values
    vs = sorted(variables(s))
    # proper subsets only, but the empty one must stay available when
    # s has no variables at all (reflexivity)
    for m in range(max(len(vs), 1)):
        for chosen in combinations(vs, m):
            for consts in product(range(k), repeat=m):
                image = apply_evaluation(s, dict(zip(chosen, consts)))
                if induced_operation(image, alg, n).values == target:
                    return True
    return False
