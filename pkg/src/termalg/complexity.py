"""Complexity measures for terms and algebras.

Three measures: variable occurrences (cp1), operation-symbol count (cp2),
and the semantic count cp3, which for each nonempty variable set M counts
the assignments to the remaining variables that leave exactly M essential.
Summing cp3 over every member of the n-ary clone gives the n-complexity
of an algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Optional

from . import kernels
from .algebra import FiniteAlgebra, FunctionTable, induced_operation, projection_table
from .errors import BudgetError
from .semantics import _check_subset, _context
from .terms import Apply, Constant, Term, Variable

CLONE_BUDGET = 1_000_000

__all__ = [
    "CLONE_BUDGET",
    "ComplexityReport",
    "CloneLevel",
    "AlgebraCensus",
    "cp1",
    "cp2",
    "cp3_set",
    "cp3_total",
    "cp3_of_table",
    "value_set",
    "clone_level",
    "algebra_n_complexity",
]


def cp1(term: Term) -> int:
    """Number of variable occurrences."""
    if isinstance(term, Variable):
        return 1
    if isinstance(term, Constant):
        return 0
    return sum(cp1(c) for c in term.children)


def cp2(term: Term) -> int:
    """Number of operation symbols; constants count like variables: zero."""
    if isinstance(term, (Variable, Constant)):
        return 0
    return 1 + sum(cp2(c) for c in term.children)


@dataclass(frozen=True)
class ComplexityReport:
    """cp3 counts of one function: per nonempty variable set, plus total."""

    arity: int
    per_set: Mapping[frozenset, int]
    total: int

    @classmethod
    def from_counts(cls, counts, arity: int) -> "ComplexityReport":
        per = {
            kernels.indices_of_mask(m): counts[m] for m in range(1, 1 << arity)
        }
        return cls(arity, per, sum(counts))

    def sorted_items(self):
        return sorted(self.per_set.items(), key=lambda kv: tuple(sorted(kv[0])))


def cp3_set(term: Term, alg: FiniteAlgebra, n: int, subset: Iterable[int]) -> int:
    """Evaluations of the variables outside the set that leave exactly it
    essential; the set must be nonempty."""
    m = _check_subset(subset, n)
    if not m:
        raise ValueError("cp3 is defined for nonempty variable sets")
    table = induced_operation(term, alg, n)
    k = alg.carrier_size
    target = kernels.mask_of_indices(m)
    outside = [p for p in range(n) if not (target >> p) & 1]
    count = 0
    for consts in product(range(k), repeat=len(outside)):
        restricted = kernels.restrict(table.values, k, n, outside, consts)
        if kernels.essential_mask(restricted, k, n) == target:
            count += 1
    return count


def cp3_total(term: Term, alg: FiniteAlgebra, n: Optional[int] = None) -> ComplexityReport:
    """Full cp3 report over all nonempty subsets of x1..xn."""
    n = _context(n, term)
    return cp3_of_table(induced_operation(term, alg, n))


def cp3_of_table(table: FunctionTable) -> ComplexityReport:
    """cp3 report computed directly from a tabulated function."""
    counts = kernels.cp3_counts(table.values, table.carrier_size, table.arity)
    return ComplexityReport.from_counts(counts, table.arity)


def value_set(term: Term, alg: FiniteAlgebra, n: Optional[int] = None) -> frozenset:
    """Distinct values the induced operation takes."""
    n = _context(n, term)
    return frozenset(induced_operation(term, alg, n).values)


# ---------------------------------------------------------------------------
# clone enumeration


@dataclass(frozen=True)
class CloneLevel:
    """The n-ary term operations of an algebra, with generating terms.

    `members` lists distinct tables in discovery order: the projections
    first, then breadth-first by composition depth with ties broken by
    operation order and then argument order. `witnesses[i]` is a term
    inducing `members[i]`.
    """

    arity: int
    carrier_size: int
    members: tuple
    witnesses: tuple

    @property
    def size(self) -> int:
        return len(self.members)


def clone_level(alg: FiniteAlgebra, n: int, max_size: int = CLONE_BUDGET) -> CloneLevel:
    """Close the n projections under the basic operations.

    Fixpoint rounds: each round composes every basic operation with all
    argument tuples of already-known members that touch the newest layer,
    deduplicating by table. Raises BudgetError once more than `max_size`
    distinct members appear.
    """
    k = alg.carrier_size
    size = k**n
    tables: list[tuple] = []
    witnesses: list[Term] = []
    index: dict[tuple, int] = {}

    def add(values: tuple, witness: Term) -> bool:
        if values in index:
            return False
        if len(tables) >= max_size:
            raise BudgetError(
                f"clone budget exceeded: more than {max_size} members at arity {n}"
            )
        index[values] = len(tables)
        tables.append(values)
        witnesses.append(witness)
        return True

    for i in range(1, n + 1):
        add(projection_table(i, n, k).values, Variable(i))

    frontier_start = 0
    while True:
        known = len(tables)
        new_found = False
        for op in alg.operations:
            for args in product(range(known), repeat=op.arity):
                if all(a < frontier_start for a in args):
                    continue
                values = kernels.compose(
                    op.table, op.arity, [tables[a] for a in args], k, size
                )
                witness = Apply(op.symbol, tuple(witnesses[a] for a in args))
                new_found |= add(values, witness)
        frontier_start = known
        if not new_found:
            break

    members = tuple(FunctionTable(n, k, t) for t in tables)
    return CloneLevel(n, k, members, tuple(witnesses))


@dataclass(frozen=True)
class AlgebraCensus:
    """n-complexity of an algebra with its distribution histogram."""

    algebra: str
    n: int
    clone_size: int
    total: int
    histogram: Mapping[int, int]

    def to_json(self) -> str:
        doc = {
            "algebra": self.algebra,
            "n": self.n,
            "clone_size": self.clone_size,
            "total": self.total,
            "histogram": {
                str(c): self.histogram[c] for c in sorted(self.histogram, reverse=True)
            },
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AlgebraCensus":
        doc = json.loads(text)
        hist = {int(c): int(v) for c, v in doc["histogram"].items()}
        return cls(doc["algebra"], doc["n"], doc["clone_size"], doc["total"], hist)


def algebra_n_complexity(
    alg: FiniteAlgebra, n: int, max_size: int = CLONE_BUDGET
) -> AlgebraCensus:
    """Sum cp3 over every n-ary clone member, grouping members by total."""
    clone = clone_level(alg, n, max_size)
    k = alg.carrier_size
    buckets: dict[int, int] = {}
    total = 0
    for member in clone.members:
        t = sum(kernels.cp3_counts(member.values, k, n))
        total += t
        buckets[t] = buckets.get(t, 0) + 1
    histogram = {c: buckets[c] for c in sorted(buckets, reverse=True)}
    return AlgebraCensus(alg.name, n, clone.size, total, histogram)
