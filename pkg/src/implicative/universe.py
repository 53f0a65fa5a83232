"""The rank-truncated hierarchy ``W_N`` over a finite implicative algebra.

A W-element is a partial function from earlier W-elements to the algebra.
Elements are hash-consed into integer handles: handle ``i`` has graph
``graphs[i]``, a tuple of ``(member_handle, value)`` pairs sorted by handle.
The strata are prefixes of the handle space: ``W_k`` is ``range(stratum_size(k))``.
Witness constructors may intern elements above ``W_N`` ("extension" handles);
those take part in valuations but never in quantifier ranges.
"""
from __future__ import annotations

import itertools
import os
from typing import Callable, Iterable

from .algebra import ImplicativeAlgebra
from .errors import InvalidArgument, RankOverflow, ResourceLimit
from .terms import church, encode

DEFAULT_BUDGET = int(os.environ.get("IMPLICATIVE_BUDGET", "20000"))

WElement = int


class Universe:
    def __init__(self, algebra: ImplicativeAlgebra, depth: int, budget: int = DEFAULT_BUDGET):
        if depth < 1:
            raise InvalidArgument("truncation depth must be at least 1")
        self.algebra = algebra
        self.depth = depth
        self.budget = budget
        self.graphs: list[tuple] = []
        self.ranks: list[int] = []
        self._index: dict[tuple, int] = {}
        self._maps: list[dict] = []
        self._mem: dict = {}
        self._eq: dict = {}
        self._sub: dict = {}
        self._sizes = []
        self._build()

    # -- construction --------------------------------------------------------

    def _build(self):
        self.intern(())
        self._sizes.append(1)
        n = self.algebra.size
        for k in range(2, self.depth + 1):
            prev = self._sizes[-1]
            count = (n + 1) ** prev
            if count > self.budget:
                raise ResourceLimit(
                    f"stratum W_{k} would hold {count} elements (budget {self.budget})")
            for choice in itertools.product(range(-1, n), repeat=prev):
                self.intern(tuple((u, v) for u, v in enumerate(choice) if v >= 0))
            self._sizes.append(len(self.graphs))

    def intern(self, graph: Iterable[tuple[int, int]]) -> WElement:
        """Handle of the partial function ``graph``, creating it if needed."""
        items = dict(graph)
        key = tuple(sorted(items.items()))
        hit = self._index.get(key)
        if hit is not None:
            return hit
        n = self.algebra.size
        for u, v in key:
            if not 0 <= u < len(self.graphs):
                raise InvalidArgument(f"unknown W-element handle {u}")
            if not 0 <= v < n:
                raise InvalidArgument(f"{v} is not an algebra element")
        rank = 1 + max((self.ranks[u] for u, _ in key), default=0)
        handle = len(self.graphs)
        self.graphs.append(key)
        self.ranks.append(rank)
        self._maps.append(dict(key))
        self._index[key] = handle
        return handle

    def _checked(self, graph, cap):
        cap = self.depth if cap is None else cap
        items = dict(graph)
        rank = 1 + max((self.ranks[u] for u in items), default=0)
        if rank > cap:
            raise RankOverflow(rank, cap)
        return self.intern(items.items())

    # -- structure -------------------------------------------------------------

    def stratum_size(self, k: int) -> int:
        if not 1 <= k <= self.depth:
            raise InvalidArgument(f"stratum {k} outside 1..{self.depth}")
        return self._sizes[k - 1]

    def stratum(self, k: int) -> range:
        return range(self.stratum_size(k))

    @property
    def stratum_sizes(self) -> list[int]:
        return list(self._sizes)

    @property
    def elements(self) -> range:
        """The quantifier range: every handle of ``W_N``."""
        return range(self._sizes[-1])

    def __len__(self):
        return self._sizes[-1]

    def rank(self, a: WElement) -> int:
        return self.ranks[a]

    def graph(self, a: WElement) -> tuple:
        return self.graphs[a]

    def domain(self, a: WElement) -> list[int]:
        return [u for u, _ in self.graphs[a]]

    def value(self, a: WElement, u: WElement) -> int:
        return self._maps[a][u]

    def in_truncation(self, a: WElement) -> bool:
        return a < self._sizes[-1]

    def describe(self, a: WElement) -> str:
        label = self.algebra.label
        return "{" + ", ".join(f"w{u}:{label(v)}" for u, v in self.graphs[a]) + "}"

    def parse_handle(self, text: str) -> WElement:
        text = text.strip()
        if text.startswith("w"):
            text = text[1:]
        try:
            handle = int(text)
        except ValueError:
            raise InvalidArgument(f"not a W-element handle: {text!r}") from None
        if not 0 <= handle < len(self.graphs):
            raise InvalidArgument(f"no W-element w{handle}")
        return handle

    # -- valuations ------------------------------------------------------------

    def mem_value(self, a: WElement, b: WElement) -> int:
        """``a ∈_W b``: exists over the domain of b of ``b(t) × (t =_W a)``."""
        key = (a, b)
        hit = self._mem.get(key)
        if hit is None:
            alg = self.algebra
            conj = alg.conj_table
            hit = alg.uexists([conj[v][self.eq_value(t, a)] for t, v in self.graphs[b]])
            self._mem[key] = hit
        return hit

    def subseteq_value(self, a: WElement, b: WElement) -> int:
        key = (a, b)
        hit = self._sub.get(key)
        if hit is None:
            alg = self.algebra
            imp = alg.imp_table
            hit = alg.uforall([imp[v][self.mem_value(t, b)] for t, v in self.graphs[a]])
            self._sub[key] = hit
        return hit

    def eq_value(self, a: WElement, b: WElement) -> int:
        key = (a, b)
        hit = self._eq.get(key)
        if hit is None:
            hit = self.algebra.conj_table[self.subseteq_value(a, b)][self.subseteq_value(b, a)]
            self._eq[key] = hit
        return hit

    def clear_caches(self) -> None:
        self._mem.clear()
        self._eq.clear()
        self._sub.clear()

    # -- witnesses ---------------------------------------------------------------

    def empty(self) -> WElement:
        return self.intern(())

    def pair(self, a: WElement, b: WElement, cap: int | None = None) -> WElement:
        top = self.algebra.top
        return self._checked({a: top, b: top}, cap)

    def union(self, a: WElement, cap: int | None = None) -> WElement:
        top = self.algebra.top
        return self._checked({w: top for u in self.domain(a) for w in self.domain(u)}, cap)

    def power(self, a: WElement, cap: int | None = None) -> WElement:
        """Constant-top function on every total map from the domain of ``a`` into A."""
        dom = self.domain(a)
        n = self.algebra.size
        if n ** len(dom) > self.budget:
            raise ResourceLimit(f"power witness needs {n ** len(dom)} members (budget {self.budget})")
        cap = self.depth if cap is None else cap
        if self.ranks[a] + 1 > cap:
            raise RankOverflow(self.ranks[a] + 1, cap)
        members = [self.intern(zip(dom, values))
                   for values in itertools.product(self.algebra.elements, repeat=len(dom))]
        return self._checked({m: self.algebra.top for m in members}, cap)

    def relabel(self, a: WElement, g: WElement, cap: int | None = None) -> WElement:
        """Domain ``dom a ∪ dom g``, value ``(u ∈ a) × (u ∈ g)``."""
        conj = self.algebra.conj_table
        dom = sorted(set(self.domain(a)) | set(self.domain(g)))
        return self._checked({u: conj[self.mem_value(u, a)][self.mem_value(u, g)] for u in dom}, cap)

    def relabel_within(self, a: WElement, g: WElement, cap: int | None = None) -> WElement:
        """Domain ``dom a`` only, value ``(u ∈ a) × (u ∈ g)``; a total map on ``dom a``."""
        conj = self.algebra.conj_table
        return self._checked({u: conj[self.mem_value(u, a)][self.mem_value(u, g)]
                              for u in self.domain(a)}, cap)

    def separation(self, a: WElement, phi: Callable[[WElement], int], cap: int | None = None) -> WElement:
        """Same domain as ``a``, value ``a(u) × phi(u)``."""
        conj = self.algebra.conj_table
        return self._checked({u: conj[v][phi(u)] for u, v in self.graphs[a]}, cap)

    def numeral_value(self, m: int) -> int:
        return encode(church(m), self.algebra)

    def numeral(self, n: int, cap: int | None = None) -> WElement:
        """``n̂``: domain ``{m̂ | m < n}``, value at ``m̂`` the encoded numeral ``m``."""
        if n < 0:
            raise InvalidArgument("numerals are non-negative")
        cap = n + 1 if cap is None else cap
        if n + 1 > cap:
            raise RankOverflow(n + 1, cap)
        return self._checked({self.numeral(m, cap): self.numeral_value(m) for m in range(n)}, cap)

    def omega_approx(self, bound: int, cap: int | None = None) -> WElement:
        """Finite cut of ω̂ with domain ``{n̂ | n < bound}``."""
        cap = bound + 1 if cap is None else cap
        return self._checked({self.numeral(m, cap): self.numeral_value(m) for m in range(bound)}, cap)

    def collection(self, stratum: int, cap: int | None = None) -> WElement:
        """Constant-top function whose domain is the whole stratum ``W_stratum``."""
        top = self.algebra.top
        return self._checked({u: top for u in self.stratum(stratum)}, cap)


def build_universe(algebra: ImplicativeAlgebra, depth: int, budget: int = DEFAULT_BUDGET) -> Universe:
    return Universe(algebra, depth, budget)
