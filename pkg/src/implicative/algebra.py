"""Implicative algebras over finite complete lattices."""
from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidArgument, NotHeytingAlgebra
from .lattice import CompleteLattice, ValidationReport, build_powerset

EXHAUSTIVE_DISTRIBUTION_BOUND = 8


class ImplicativeAlgebra:
    """A lattice, an implication table and a separator.

    Construction does not validate; use :func:`validate_algebra`. The derived
    operations (application, products, sums, quantifiers) are all literal
    meets over the carrier, tabulated lazily.
    """

    def __init__(self, lattice: CompleteLattice, imp, separator: Iterable[int], name: str = ""):
        n = lattice.size
        imp = tuple(tuple(int(v) for v in row) for row in imp)
        if len(imp) != n or any(len(row) != n for row in imp):
            raise InvalidArgument("implication table has the wrong shape")
        if any(not 0 <= v < n for row in imp for v in row):
            raise InvalidArgument("implication table mentions a non-element")
        self.lattice = lattice
        self.imp_table = imp
        self.separator = frozenset(int(a) for a in separator)
        if any(not 0 <= a < n for a in self.separator):
            raise InvalidArgument("separator mentions a non-element")
        self.name = name
        self.size = n
        self.top = lattice.top
        self.bottom = lattice.bottom
        self._exists_cache: dict[frozenset, int] = {}

    def __repr__(self):
        return f"ImplicativeAlgebra({self.name or list(self.lattice.labels)!r})"

    # -- plumbing -----------------------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.size)

    def label(self, a: int) -> str:
        return self.lattice.labels[a]

    def element(self, label) -> int:
        if isinstance(label, int):
            return label
        return self.lattice.element(label)

    def leq(self, a: int, b: int) -> bool:
        return self.lattice.leq_table[a][b]

    def meet(self, values: Iterable[int]) -> int:
        table = self.lattice.meet_table
        acc = self.top
        for v in values:
            acc = table[acc][v]
        return acc

    def join(self, values: Iterable[int]) -> int:
        table = self.lattice.join_table
        acc = self.bottom
        for v in values:
            acc = table[acc][v]
        return acc

    def imp(self, a: int, b: int) -> int:
        return self.imp_table[a][b]

    def in_separator(self, a: int) -> bool:
        return a in self.separator

    # -- derived operations -------------------------------------------------

    @cached_property
    def app_table(self):
        A, imp, leq = self.elements, self.imp_table, self.lattice.leq_table
        return tuple(tuple(self.meet(x for x in A if leq[a][imp[b][x]]) for b in A) for a in A)

    def app(self, a: int, b: int) -> int:
        return self.app_table[a][b]

    @cached_property
    def conj_table(self):
        A, imp = self.elements, self.imp_table
        return tuple(tuple(self.meet(imp[imp[a][imp[b][x]]][x] for x in A) for b in A) for a in A)

    @cached_property
    def disj_table(self):
        A, imp = self.elements, self.imp_table
        return tuple(tuple(self.meet(imp[imp[a][x]][imp[imp[b][x]][x]] for x in A) for b in A) for a in A)

    def conj(self, a: int, b: int) -> int:
        return self.conj_table[a][b]

    def disj(self, a: int, b: int) -> int:
        return self.disj_table[a][b]

    def uforall(self, family: Iterable[int]) -> int:
        return self.meet(family)

    def uexists(self, family: Iterable[int]) -> int:
        # depends only on the set of values, so memoize on it
        key = frozenset(family)
        try:
            return self._exists_cache[key]
        except KeyError:
            pass
        imp = self.imp_table
        value = self.meet(imp[self.meet(imp[a][x] for a in key)][x] for x in self.elements)
        self._exists_cache[key] = value
        return value

    @cached_property
    def K(self) -> int:
        imp, A = self.imp_table, self.elements
        return self.meet(imp[a][imp[b][a]] for a in A for b in A)

    @cached_property
    def S(self) -> int:
        # the binder of c is read as a third meet index, as in the standard definition
        imp, A = self.imp_table, self.elements
        return self.meet(imp[imp[a][imp[b][c]]][imp[imp[a][b]][imp[a][c]]]
                         for a in A for b in A for c in A)

    @cached_property
    def peirce(self) -> int:
        imp, A = self.imp_table, self.elements
        return self.meet(imp[imp[imp[a][b]][a]][a] for a in A for b in A)

    @property
    def classical(self) -> bool:
        return self.peirce in self.separator

    def fingerprint_data(self) -> dict:
        data = self.lattice.fingerprint_data()
        data["implication"] = [[self.label(v) for v in row] for row in self.imp_table]
        data["separator"] = sorted(self.label(a) for a in self.separator)
        return data


def validate_algebra(alg: ImplicativeAlgebra) -> ValidationReport:
    report = ValidationReport()
    A = alg.elements
    leq, imp = alg.lattice.leq_table, alg.imp_table
    for a, a2, b in itertools.product(A, A, A):
        if leq[a][a2] and not leq[imp[a2][b]][imp[a][b]]:
            report.add("imp-antimonotone-left", (a, a2, b))
        if leq[a][a2] and not leq[imp[b][a]][imp[b][a2]]:
            report.add("imp-monotone-right", (b, a, a2))
    if alg.size <= EXHAUSTIVE_DISTRIBUTION_BOUND:
        subsets = itertools.chain.from_iterable(itertools.combinations(A, k) for k in range(alg.size + 1))
    else:
        # binary meets plus the empty meet suffice on a finite lattice
        subsets = itertools.chain([()], itertools.combinations(A, 2))
    subsets = list(subsets)
    for a in A:
        for subset in subsets:
            if imp[a][alg.meet(subset)] != alg.meet(imp[a][b] for b in subset):
                report.add("imp-meet-distribution", (a, subset))
    sigma = alg.separator
    for a in sigma:
        for b in A:
            if leq[a][b] and b not in sigma:
                report.add("separator-upward-closed", (a, b))
    for a in sigma:
        for b in A:
            if imp[a][b] in sigma and b not in sigma:
                report.add("separator-modus-ponens", (a, b))
    if alg.K not in sigma:
        report.add("separator-contains-K", (alg.K,))
    if alg.S not in sigma:
        report.add("separator-contains-S", (alg.S,))
    return report


def heyting_implication(lattice: CompleteLattice):
    """Derive the relative pseudo-complement table, or raise with a failing triple."""
    A = lattice.elements
    leq, meet = lattice.leq_table, lattice.meet_table
    table = [[lattice.join(x for x in A if leq[meet[x][a]][b]) for b in A] for a in A]
    for a, b, c in itertools.product(A, A, A):
        if leq[c][table[a][b]] != leq[meet[c][a]][b]:
            raise NotHeytingAlgebra(
                f"residuation fails for c={lattice.label(c)}, a={lattice.label(a)}, b={lattice.label(b)}",
                witness=(c, a, b))
    return tuple(tuple(row) for row in table)


def resolve_separator(lattice: CompleteLattice, separator) -> frozenset:
    if separator == "top":
        return frozenset([lattice.top])
    if separator == "all":
        return frozenset(lattice.elements)
    return frozenset(x if isinstance(x, int) else lattice.element(x) for x in separator)


def heyting_algebra(lattice: CompleteLattice, separator="top", name: str = "") -> ImplicativeAlgebra:
    return ImplicativeAlgebra(lattice, heyting_implication(lattice),
                              resolve_separator(lattice, separator), name=name)


def powerset_of_magma(carrier: Sequence[str], op, name: str = "") -> ImplicativeAlgebra:
    """Realizability-style candidate on the subsets of a finite magma.

    ``op[r][a]`` is the index of ``r . a``. Subset ``X => Y`` is the set of ``r``
    sending every member of ``X`` into ``Y``; the separator is the nonempty
    subsets. The result is not validated: finite magmas are rarely combinatory.
    """
    carrier = [str(c) for c in carrier]
    m = len(carrier)
    if m == 0:
        raise InvalidArgument("carrier must be nonempty")
    if len(op) != m or any(len(row) != m for row in op):
        raise InvalidArgument("operation table must be total on the carrier")
    labels = ["{" + ",".join(carrier[i] for i in range(m) if bits >> i & 1) + "}" for bits in range(1 << m)]
    lattice = build_powerset(m, labels)
    n = lattice.size

    def arrow(X, Y):
        out = 0
        for r in range(m):
            if all(Y >> op[r][a] & 1 for a in range(m) if X >> a & 1):
                out |= 1 << r
        return out

    imp = [[arrow(X, Y) for Y in range(n)] for X in range(n)]
    return ImplicativeAlgebra(lattice, imp, range(1, n), name=name)


__all__ = [
    "ImplicativeAlgebra", "validate_algebra", "heyting_implication", "heyting_algebra",
    "powerset_of_magma", "resolve_separator",
]
