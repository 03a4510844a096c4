"""Pointwise pseudocomplement computations and the partial/total operation tables they fill.

Four local notions are computed, all as the greatest element of a defining set:

  sp(x, y)  = max {u : [y,u] n [y,x] = {y}}          (y <= x required)
  rp(x, y)  = max {u : (u] n (x] subset of (y]}
  wrp(x, y) = max {u : (u] n (x] = (y]}
  clp(x, y) = max {u : L([x) n [y)) n (u] = (y]}

The defining sets differ only in their membership predicate, so one evaluator
serves all four.  When the set has several maximal elements there is no
maximum and the complement does not exist; star_table reports that antichain
as a witness instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInSection
from .poset import Poset, bits


class PartialTable:
    """A binary operation defined on exactly the pairs (x, y) with y <= x.

    cells[x][y] holds the value's index for sectioned pairs and None elsewhere;
    the constructor enforces that shape.  With sectional=True it additionally
    checks that every section [p) is closed under the operation.
    """

    __slots__ = ("owner", "cells", "sectional")

    def __init__(self, owner: Poset, cells, sectional: bool = False):
        self.owner = owner
        self.cells = tuple(tuple(row) for row in cells)
        self.sectional = sectional
        n = owner.n
        if len(self.cells) != n or any(len(r) != n for r in self.cells):
            raise ValueError(f"table must be {n}x{n}")
        for x in range(n):
            for y in range(n):
                v = self.cells[x][y]
                if owner.leq_ix(y, x):
                    if v is None:
                        raise ValueError(
                            f"missing value at sectioned pair ({owner.elements[x]}, {owner.elements[y]})")
                    if not 0 <= v < n:
                        raise ValueError(f"value out of range at ({x}, {y})")
                elif v is not None:
                    raise ValueError(
                        f"value outside the domain y <= x at ({owner.elements[x]}, {owner.elements[y]})")
        if sectional:
            for x in range(n):
                for y in range(n):
                    if owner.leq_ix(y, x):
                        for p in bits(owner.downs[y]):
                            if not owner.leq_ix(p, self.cells[x][y]):
                                raise ValueError(
                                    "table declared sectional but value at "
                                    f"({owner.elements[x]}, {owner.elements[y]}) leaves [{owner.elements[p]})")

    @classmethod
    def from_ids(cls, owner: Poset, rows, sectional: bool = False) -> "PartialTable":
        """rows: per-element list of value identifiers in declaration order, None for undefined."""
        cells = [[None if v is None else owner.index(v) for v in row] for row in rows]
        return cls(owner, cells, sectional)

    def defined(self, x: str, y: str) -> bool:
        return self.cells[self.owner.index(x)][self.owner.index(y)] is not None

    def value(self, x: str, y: str) -> str:
        v = self.cells[self.owner.index(x)][self.owner.index(y)]
        if v is None:
            raise NotInSection(f"({x}, {y}) is outside the domain y <= x")
        return self.owner.elements[v]

    def domain(self):
        """Defined pairs (x, y) in row-major declaration order."""
        els = self.owner.elements
        for x in range(self.owner.n):
            for y in range(self.owner.n):
                if self.cells[x][y] is not None:
                    yield els[x], els[y]

    def __eq__(self, other):
        return (
            isinstance(other, PartialTable)
            and self.owner == other.owner
            and self.cells == other.cells
        )

    def __hash__(self):
        return hash((self.owner, self.cells))

    def __repr__(self):
        return f"PartialTable(over {self.owner.name!r})"


class TotalTable:
    """A binary operation defined on all pairs, cells[x][y] holding value indices."""

    __slots__ = ("owner", "cells")

    def __init__(self, owner: Poset, cells):
        self.owner = owner
        self.cells = tuple(tuple(row) for row in cells)
        n = owner.n
        if len(self.cells) != n or any(len(r) != n for r in self.cells):
            raise ValueError(f"table must be {n}x{n}")
        for row in self.cells:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise ValueError("total table must map every pair to an element")

    @classmethod
    def from_ids(cls, owner: Poset, rows) -> "TotalTable":
        return cls(owner, [[owner.index(v) for v in row] for row in rows])

    def value(self, x: str, y: str) -> str:
        return self.owner.elements[self.cells[self.owner.index(x)][self.owner.index(y)]]

    def __eq__(self, other):
        return (
            isinstance(other, TotalTable)
            and self.owner == other.owner
            and self.cells == other.cells
        )

    def __hash__(self):
        return hash((self.owner, self.cells))

    def __repr__(self):
        return f"TotalTable(over {self.owner.name!r})"


@dataclass(frozen=True)
class MissingWitness:
    """A sectioned pair whose defining set has no greatest element."""

    x: str
    y: str
    candidates: tuple[str, ...]


# -- the shared defining-set evaluator ----------------------------------------


def _defining_mask(p: Poset, member) -> int:
    m = 0
    for u in range(p.n):
        if member(u):
            m |= 1 << u
    return m


def _max_or_none(p: Poset, mask: int) -> int | None:
    return p.greatest_of(mask)


def _sp_mask(p: Poset, xi: int, yi: int) -> int:
    by = 1 << yi
    return _defining_mask(p, lambda u: p.ups[yi] & p.downs[u] & p.downs[xi] == by)


def sp_value_ix(p: Poset, xi: int, yi: int) -> int | None:
    """Index form of sp_complement; assumes yi <= xi."""
    return _max_or_none(p, _sp_mask(p, xi, yi))


def sp_complement(p: Poset, x: str, y: str) -> str | None:
    """Pseudocomplement of x in the section [y); y <= x required."""
    xi, yi = p.index(x), p.index(y)
    if not p.leq_ix(yi, xi):
        raise NotInSection(f"({x}, {y}) requires {y} <= {x}")
    v = sp_value_ix(p, xi, yi)
    return None if v is None else p.elements[v]

def rp_complement(p: Poset, x: str, y: str) -> str | None:
    """Relative pseudocomplement: greatest u with (u] n (x] inside (y]."""
    xi, yi = p.index(x), p.index(y)
    m = _defining_mask(p, lambda u: p.downs[u] & p.downs[xi] & ~p.downs[yi] == 0)
    v = _max_or_none(p, m)
    return None if v is None else p.elements[v]


def wrp_complement(p: Poset, x: str, y: str) -> str | None:
    """Weak relative pseudocomplement: greatest u with (u] n (x] = (y]."""
    xi, yi = p.index(x), p.index(y)
    m = _defining_mask(p, lambda u: p.downs[u] & p.downs[xi] == p.downs[yi])
    v = _max_or_none(p, m)
    return None if v is None else p.elements[v]


def clp_complement(p: Poset, x: str, y: str) -> str | None:
    """Greatest u with L([x) n [y)) n (u] = (y]."""
    xi, yi = p.index(x), p.index(y)
    f = p.frink_mask(xi, yi)
    m = _defining_mask(p, lambda u: f & p.downs[u] == p.downs[yi])
    v = _max_or_none(p, m)
    return None if v is None else p.elements[v]


def section_top(p: Poset, x: str) -> str | None:
    """Greatest element of [x) when it exists."""
    t = p.section_top_ix(p.index(x))
    return None if t is None else p.elements[t]


def star_table(p: Poset):
    """The full sectional pseudocomplementation table, or the first pair where it fails.

    Returns a PartialTable when every sectioned pair has a pseudocomplement;
    otherwise a MissingWitness naming the pair and the antichain of maximal
    candidates of its defining set.
    """
    n = p.n
    cells = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if not p.leq_ix(y, x):
                continue
            m = _sp_mask(p, x, y)
            v = p.greatest_of(m)
            if v is None:
                anti = tuple(p.elements[u] for u in bits(p.maximal_of(m)))
                return MissingWitness(p.elements[x], p.elements[y], anti)
            cells[x][y] = v
    return PartialTable(p, cells)


def is_sp(p: Poset) -> bool:
    return isinstance(star_table(p), PartialTable)


def restrict(t: TotalTable) -> PartialTable:
    """Restriction of a total operation to the pairs y <= x."""
    p = t.owner
    cells = [
        [t.cells[x][y] if p.leq_ix(y, x) else None for y in range(p.n)]
        for x in range(p.n)
    ]
    return PartialTable(p, cells)


# -- property suite for star tables --------------------------------------------


@dataclass(frozen=True)
class ItemResult:
    item: str
    status: str  # "pass" | "fail" | "skipped"
    witness: tuple[str, ...] | None = None


@dataclass(frozen=True)
class PropertyReport:
    suite: str
    items: tuple[ItemResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.items)

    def failed_items(self) -> tuple[ItemResult, ...]:
        return tuple(r for r in self.items if r.status == "fail")


def verify_sp_properties(p: Poset, s: PartialTable) -> PropertyReport:
    """Check the elementary laws of sectional pseudocomplementation on a star table.

    Every law is swept universally; an instance only counts when all values it
    mentions are defined.  The first failing witness per item is reported, in
    lexicographic declaration order of the quantified tuple.
    """
    n = p.n
    els = p.elements
    c = s.cells

    def dom(x, y):
        return p.leq_ix(y, x)

    def a():
        for x in range(n):
            for y in range(n):
                if dom(x, y) and not p.leq_ix(y, c[x][y]):
                    return els[x], els[y]

    def b():
        for x in range(n):
            for y in range(n):
                if dom(x, y) and not p.disjoint_over_ix(c[x][y], x, y):
                    return els[x], els[y]

    def c_mono():
        for x in range(n):
            for y in range(n):
                if not p.leq_ix(x, y):
                    continue
                for z in range(n):
                    if dom(y, z) and dom(x, z) and not p.leq_ix(c[y][z], c[x][z]):
                        return els[x], els[y], els[z]

    def d_swap():
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if dom(y, z) and dom(x, z) and p.leq_ix(x, c[y][z]) and not p.leq_ix(y, c[x][z]):
                        return els[x], els[y], els[z]

    def e():
        for x in range(n):
            for y in range(n):
                if dom(x, y):
                    v = c[x][y]
                    if dom(v, y) and not p.leq_ix(x, c[v][y]):
                        return els[x], els[y]

    def f():
        for x in range(n):
            for y in range(n):
                if dom(x, y):
                    v = c[x][y]
                    if dom(v, y) and not p.leq_ix(y, c[v][y]):
                        return els[x], els[y]

    def g():
        for x in range(n):
            for y in range(n):
                if p.leq_ix(y, x) and not p.leq_ix(x, c[y][y]):
                    return els[x], els[y]

    def h():
        for x in range(n):
            for y in range(n):
                if p.leq_ix(y, x):
                    t = c[y][y]
                    if dom(t, x) and c[t][x] != x:
                        return els[x], els[y]

    def i_triple():
        for x in range(n):
            for y in range(n):
                if dom(x, y):
                    v = c[x][y]
                    if dom(v, y):
                        w = c[v][y]
                        if dom(w, y) and c[w][y] != v:
                            return els[x], els[y]

    def j():
        for x in range(n):
            for y in range(n):
                if dom(x, y) and p.leq_ix(x, c[x][y]) and not p.leq_ix(x, y):
                    return els[x], els[y]

    def k():
        for x in range(n):
            for y in range(n):
                if p.leq_ix(y, x) and c[x][x] != c[y][y]:
                    return els[x], els[y]

    def l():
        for x in range(n):
            for y in range(n):
                if dom(x, y) and c[x][y] == c[y][y] and x != y:
                    return els[x], els[y]

    def m():
        for x in range(n):
            for y in range(n):
                mlb = p.maximal_of(p.downs[x] & p.downs[y])
                for z in bits(mlb):
                    if dom(y, z) and not p.leq_ix(x, c[y][z]):
                        return els[x], els[y], els[z]

    checks = [
        ("a", a), ("b", b), ("c", c_mono), ("d", d_swap), ("e", e), ("f", f),
        ("g", g), ("h", h), ("i", i_triple), ("j", j), ("k", k), ("l", l), ("m", m),
    ]
    items = []
    for ident, fn in checks:
        w = fn()
        items.append(ItemResult(ident, "pass" if w is None else "fail", w))
    return PropertyReport("sp-prop", tuple(items))
