"""Finite complete lattices.

Elements are dense integer ids ``0 .. n-1``; labels are display metadata only.
Binary meet/join tables are built once, and meets/joins of arbitrary subsets
are folds over them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import InvalidArgument

EXHAUSTIVE_BOUND = 10


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, witness: tuple) -> None:
        self.violations.append((law, witness))

    def __bool__(self) -> bool:
        return self.ok


def _glb(n, leq, subset):
    lower = [c for c in range(n) if all(leq[c][s] for s in subset)]
    for c in lower:
        if all(leq[d][c] for d in lower):
            return c
    return None


def _lub(n, leq, subset):
    upper = [c for c in range(n) if all(leq[s][c] for s in subset)]
    for c in upper:
        if all(leq[c][d] for d in upper):
            return c
    return None


def validate_lattice(labels: Sequence[str], leq, exhaustive_bound: int = EXHAUSTIVE_BOUND) -> ValidationReport:
    """Check that ``leq`` is a partial order in which every subset has a meet and join.

    Up to ``exhaustive_bound`` elements every subset is examined; above it the
    check is closure under binary meets/joins plus existence of top and bottom,
    which is equivalent for finite posets.
    """
    report = ValidationReport()
    n = len(labels)
    if len(set(labels)) != n:
        report.add("unique-labels", tuple(labels))
    if n == 0:
        report.add("nonempty", ())
        return report
    if len(leq) != n or any(len(row) != n for row in leq):
        report.add("table-shape", (n,))
        return report
    for a in range(n):
        if not leq[a][a]:
            report.add("reflexivity", (a,))
    for a, b in itertools.combinations(range(n), 2):
        if leq[a][b] and leq[b][a]:
            report.add("antisymmetry", (a, b))
    for a, b, c in itertools.product(range(n), repeat=3):
        if leq[a][b] and leq[b][c] and not leq[a][c]:
            report.add("transitivity", (a, b, c))
    if not report.ok:
        return report
    if n <= exhaustive_bound:
        subsets = itertools.chain.from_iterable(
            itertools.combinations(range(n), k) for k in range(n + 1))
    else:
        subsets = itertools.chain([()], itertools.combinations(range(n), 2))
    for subset in subsets:
        if _glb(n, leq, subset) is None:
            report.add("meet-missing", subset)
        if _lub(n, leq, subset) is None:
            report.add("join-missing", subset)
    return report


class CompleteLattice:
    """A validated finite complete lattice; immutable after construction."""

    def __init__(self, labels: Sequence[str], leq, *, validate: bool = True):
        labels = tuple(str(x) for x in labels)
        leq = tuple(tuple(bool(v) for v in row) for row in leq)
        if validate:
            report = validate_lattice(labels, leq)
            if not report.ok:
                law, witness = report.violations[0]
                raise InvalidArgument(f"not a complete lattice: {law} {witness}")
        self.labels = labels
        self.leq_table = leq
        n = self.size = len(labels)
        self._index = {lab: i for i, lab in enumerate(labels)}
        self.meet_table = tuple(tuple(_glb(n, leq, (a, b)) for b in range(n)) for a in range(n))
        self.join_table = tuple(tuple(_lub(n, leq, (a, b)) for b in range(n)) for a in range(n))
        self.top = _glb(n, leq, ())
        self.bottom = _lub(n, leq, ())

    def __repr__(self):
        return f"CompleteLattice({list(self.labels)})"

    def __len__(self):
        return self.size

    @property
    def elements(self) -> range:
        return range(self.size)

    def leq(self, a: int, b: int) -> bool:
        return self.leq_table[a][b]

    def label(self, a: int) -> str:
        return self.labels[a]

    def element(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise InvalidArgument(f"unknown element label {label!r}") from None

    def _check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.size:
            raise InvalidArgument(f"{a!r} is not an element of this lattice")
        return a

    def meet(self, subset: Iterable[int]) -> int:
        table = self.meet_table
        return reduce(lambda x, y: table[x][self._check(y)], subset, self.top)

    def join(self, subset: Iterable[int]) -> int:
        table = self.join_table
        return reduce(lambda x, y: table[x][self._check(y)], subset, self.bottom)

    def order_pairs(self) -> list[tuple[str, str]]:
        """Every strict order pair, as labels."""
        return [(self.labels[a], self.labels[b])
                for a in self.elements for b in self.elements
                if a != b and self.leq_table[a][b]]

    def fingerprint_data(self) -> dict:
        return {"elements": list(self.labels),
                "leq": [[int(v) for v in row] for row in self.leq_table]}


def build_chain(n: int, labels: Sequence[str] | None = None) -> CompleteLattice:
    if n < 1:
        raise InvalidArgument("a chain needs at least one element")
    if labels is None:
        labels = ["0", "1"] if n == 2 else [str(i) for i in range(n)]
    if len(labels) != n:
        raise InvalidArgument("label count does not match chain length")
    return CompleteLattice(labels, [[a <= b for b in range(n)] for a in range(n)])


def subset_label(bits: int, base_size: int) -> str:
    return "{" + ",".join(str(i) for i in range(base_size) if bits >> i & 1) + "}"


def build_powerset(base_size: int, labels: Sequence[str] | None = None) -> CompleteLattice:
    """Subsets of ``range(base_size)`` ordered by inclusion; element id = bitmask."""
    if base_size < 0:
        raise InvalidArgument("base_size must be non-negative")
    n = 1 << base_size
    if labels is None:
        labels = [subset_label(bits, base_size) for bits in range(n)]
    return CompleteLattice(labels, [[a & ~b == 0 for b in range(n)] for a in range(n)])


def build_from_order(pairs: Iterable[tuple[str, str]], elements: Sequence[str] | None = None) -> CompleteLattice:
    """Lattice from generating ``(lower, upper)`` pairs, after reflexive-transitive closure."""
    pairs = [(str(a), str(b)) for a, b in pairs]
    if elements is None:
        elements = []
        for a, b in pairs:
            for x in (a, b):
                if x not in elements:
                    elements.append(x)
    elements = [str(x) for x in elements]
    index = {lab: i for i, lab in enumerate(elements)}
    n = len(elements)
    leq = [[a == b for b in range(n)] for a in range(n)]
    for a, b in pairs:
        if a not in index or b not in index:
            raise InvalidArgument(f"order pair ({a}, {b}) mentions an unknown element")
        leq[index[a]][index[b]] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    return CompleteLattice(elements, leq)
