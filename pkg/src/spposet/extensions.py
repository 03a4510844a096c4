"""Total extension rules for a sectional pseudocomplementation table.

Every constructor either returns a TotalTable or an ExtensionResult whose
undefined pairs carry the antichain that blocked the required maximum or
minimum; rules never raise just because a cell has no value.  Rules that admit
two independent formulations (the natural min/max forms, the meet-rule and its
greatest-element form, the dual rule and the Frink-selection min rule) always
compute both and treat disagreement as an implementation bug.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InternalDisagreement,
    MextSchDisagreement,
    NotMeetSemilattice,
    NotSectionallyBounded,
    SelectionAxiomViolation,
)
from .poset import ElementSet, Poset, bits
from .pseudo import PartialTable, TotalTable


@dataclass(frozen=True)
class UndefinedPair:
    """A cell an extension rule could not fill, with the blocking candidates."""

    x: str
    y: str
    candidates: tuple[str, ...]
    reason: str  # "no-greatest-value" | "no-least-value" | "no-common-upper-bound" | ...


@dataclass(frozen=True)
class ExtensionResult:
    table: TotalTable | None
    undefined: tuple[UndefinedPair, ...]

    @property
    def is_total(self) -> bool:
        return self.table is not None

    def __post_init__(self):
        if (self.table is None) == (len(self.undefined) == 0):
            raise ValueError("exactly one of table / undefined pairs must be present")


def _section_tops(p: Poset) -> list[int]:
    tops = []
    for i in range(p.n):
        t = p.section_top_ix(i)
        if t is None:
            two = list(bits(p.maximal_of(p.ups[i])))[:2]
            raise NotSectionallyBounded(
                f"section [{p.elements[i]}) of {p.name!r} has maximal elements "
                f"{p.elements[two[0]]} and {p.elements[two[1]]}")
        tops.append(t)
    return tops


def _assemble(p: Poset, cells, undef) -> ExtensionResult:
    if undef:
        return ExtensionResult(None, tuple(undef))
    return ExtensionResult(TotalTable(p, cells), ())


# -- rules that are always total on sectionally bounded star posets -----------


def pure_extension(s: PartialTable) -> TotalTable:
    """x -> y is x*y for y <= x, the top of [x) for x < y, and y otherwise."""
    p = s.owner
    tops = _section_tops(p)
    n = p.n
    cells = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if p.leq_ix(y, x):
                cells[x][y] = s.cells[x][y]
            elif p.leq_ix(x, y):
                cells[x][y] = tops[x]
            else:
                cells[x][y] = y
    return TotalTable(p, cells)


def natural_extension(s: PartialTable) -> TotalTable:
    """x -> y is x*y for y <= x and the top of [y) otherwise.

    Pointwise this is max{u >= y : u disjoint from x over y}, the same
    defining set as the sectional pseudocomplement with the restriction
    y <= x dropped.
    """
    p = s.owner
    tops = _section_tops(p)
    n = p.n
    cells = [
        [s.cells[x][y] if p.leq_ix(y, x) else tops[y] for y in range(n)]
        for x in range(n)
    ]
    return TotalTable(p, cells)


def _min_of_values(p: Poset, s: PartialTable, zmask: int, y: int) -> int | None:
    vals = 0
    for z in bits(zmask):
        vals |= 1 << s.cells[z][y]
    return p.least_of(vals)


def natural_min_form(s: PartialTable) -> TotalTable:
    """The natural extension computed as min{z*y : z in [y,x] or z = y}.

    Both min formulations (over [y,x] u {y} and over ((x] u (y]) n [y)) are
    evaluated and compared against the max form; any mismatch means the input
    was not a sectional pseudocomplementation table or there is a bug.
    """
    p = s.owner
    maxform = natural_extension(s)
    n = p.n
    cells = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            z1 = (p.ups[y] & p.downs[x]) | (1 << y)
            z2 = (p.downs[x] | p.downs[y]) & p.ups[y]
            v1 = _min_of_values(p, s, z1, y)
            v2 = _min_of_values(p, s, z2, y)
            v0 = maxform.cells[x][y]
            if v1 is None or v1 != v2 or v1 != v0:
                raise InternalDisagreement(
                    f"natural extension forms disagree at ({p.elements[x]}, {p.elements[y]}): "
                    f"max-form {p.elements[v0]}, min-forms "
                    f"{'none' if v1 is None else p.elements[v1]} / "
                    f"{'none' if v2 is None else p.elements[v2]}")
            cells[x][y] = v1
    return TotalTable(p, cells)


# -- rules that may be partial -------------------------------------------------


def normal_extension(s: PartialTable) -> ExtensionResult:
    """x -> y as max{z*y : z a common upper bound of x and y}, where that max exists."""
    p = s.owner
    n = p.n
    els = p.elements
    cells = [[0] * n for _ in range(n)]
    undef = []
    for x in range(n):
        for y in range(n):
            zmask = p.ups[x] & p.ups[y]
            if zmask == 0:
                undef.append(UndefinedPair(els[x], els[y], (), "no-common-upper-bound"))
                continue
            vals = 0
            for z in bits(zmask):
                vals |= 1 << s.cells[z][y]
            g = p.greatest_of(vals)
            if g is None:
                anti = tuple(els[u] for u in bits(p.maximal_of(vals)))
                undef.append(UndefinedPair(els[x], els[y], anti, "no-greatest-value"))
            else:
                cells[x][y] = g
    return _assemble(p, cells, undef)


class LocalSelection:
    """A symmetric assignment of a down-set to every pair of elements.

    Required laws: x and y belong to I(x, y); I(x, y) = I(y, x); I(x, y) = (x]
    when y <= x; and I(x, y) grows when either argument grows.  The derived
    consequences (I(x, y) inside (z] for every common upper bound z, and the
    sandwich (x] u (y] <= I(x, y) <= every such (z]) are re-checked as well.
    """

    __slots__ = ("owner", "kind", "_masks")

    def __init__(self, owner: Poset, kind: str, masks: dict):
        self.owner = owner
        self.kind = kind
        self._masks = masks  # keyed by (min(i,j), max(i,j))
        self._validate()

    def mask_ix(self, i: int, j: int) -> int:
        return self._masks[(i, j) if i <= j else (j, i)]

    def choose(self, x: str, y: str) -> ElementSet:
        return self.owner.set_of(self.mask_ix(self.owner.index(x), self.owner.index(y)))

    def __eq__(self, other):
        return (
            isinstance(other, LocalSelection)
            and self.owner == other.owner
            and self._masks == other._masks
        )

    def __hash__(self):
        return hash((self.owner, tuple(sorted(self._masks.items()))))

    def _validate(self):
        p = self.owner
        els = p.elements
        for i in range(p.n):
            for j in range(i, p.n):
                m = self.mask_ix(i, j)
                for u in bits(m):
                    if p.downs[u] & ~m:
                        raise SelectionAxiomViolation("down-set", (els[i], els[j], els[u]))
                if not (m >> i & 1 and m >> j & 1):
                    raise SelectionAxiomViolation("I0", (els[i], els[j]))
                if p.leq_ix(j, i) and m != p.downs[i]:
                    raise SelectionAxiomViolation("I2", (els[i], els[j]))
                if p.leq_ix(i, j) and m != p.downs[j]:
                    raise SelectionAxiomViolation("I2", (els[i], els[j]))
        # I3 with its derived consequences I4 / I5
        for i in range(p.n):
            for j in range(p.n):
                m = self.mask_ix(i, j)
                for i2 in bits(p.ups[i]):
                    if m & ~self.mask_ix(i2, j):
                        raise SelectionAxiomViolation("I3", (els[i], els[j], els[i2]))
                for z in bits(p.ups[i] & p.ups[j]):
                    if m & ~p.downs[z]:
                        raise SelectionAxiomViolation("I4", (els[i], els[j], els[z]))
                if (p.downs[i] | p.downs[j]) & ~m:
                    raise SelectionAxiomViolation("I5", (els[i], els[j]))


def selection_union(p: Poset) -> LocalSelection:
    """I(x, y) = (x] u (y], the smallest legal selection."""
    masks = {}
    for i in range(p.n):
        for j in range(i, p.n):
            masks[(i, j)] = p.downs[i] | p.downs[j]
    return LocalSelection(p, "union", masks)


def selection_frink(p: Poset) -> LocalSelection:
    """I(x, y) = L(U({x, y})), the largest legal selection."""
    masks = {}
    for i in range(p.n):
        for j in range(i, p.n):
            masks[(i, j)] = p.frink_mask(i, j)
    return LocalSelection(p, "frink", masks)


def selection_custom(p: Poset, table, kind: str = "custom-table") -> LocalSelection:
    """Selection from an explicit pair table {(x, y): members}; comparable pairs default to (max].

    The table may list each unordered pair in either or both orders; listing a
    pair twice with different member sets violates symmetry.
    """
    masks = {}
    for (x, y), members in table.items():
        i, j = p.index(x), p.index(y)
        key = (i, j) if i <= j else (j, i)
        m = p.subset_mask(members)
        if key in masks and masks[key] != m:
            raise SelectionAxiomViolation("I1", (x, y))
        masks[key] = m
    for i in range(p.n):
        for j in range(i, p.n):
            if (i, j) in masks:
                continue
            if p.leq_ix(i, j):
                masks[(i, j)] = p.downs[j]
            elif p.leq_ix(j, i):
                masks[(i, j)] = p.downs[i]
            else:
                raise SelectionAxiomViolation(
                    "missing-pair", (p.elements[i], p.elements[j]))
    return LocalSelection(p, kind, masks)


def i_natural_defining_mask(p: Poset, sel: LocalSelection, x: int, y: int) -> int:
    """Candidates u with (u] n I(x,y) n [y) = {y}, as a mask over indices."""
    im = sel.mask_ix(x, y) & p.ups[y]
    by = 1 << y
    m = 0
    for u in range(p.n):
        if p.downs[u] & im == by:
            m |= 1 << u
    return m


def i_natural_cell(p: Poset, sel: LocalSelection, x: int, y: int) -> int | None:
    return p.greatest_of(i_natural_defining_mask(p, sel, x, y))


def i_natural_extension(p: Poset, sel: LocalSelection) -> ExtensionResult:
    """x -> y as max{u : (u] n I(x,y) n [y) = {y}} for a local selection I."""
    n = p.n
    els = p.elements
    cells = [[0] * n for _ in range(n)]
    undef = []
    for x in range(n):
        for y in range(n):
            m = i_natural_defining_mask(p, sel, x, y)
            g = p.greatest_of(m)
            if g is None:
                anti = tuple(els[u] for u in bits(p.maximal_of(m)))
                reason = "no-greatest-value" if m else "empty-defining-set"
                undef.append(UndefinedPair(els[x], els[y], anti, reason))
            else:
                cells[x][y] = g
    return _assemble(p, cells, undef)


def i_min_extension(s: PartialTable, sel: LocalSelection) -> ExtensionResult:
    """x -> y as min{z*y : z in I(x,y) n [y)} for a local selection I."""
    p = s.owner
    n = p.n
    els = p.elements
    cells = [[0] * n for _ in range(n)]
    undef = []
    for x in range(n):
        for y in range(n):
            zmask = sel.mask_ix(x, y) & p.ups[y]
            vals = 0
            for z in bits(zmask):
                vals |= 1 << s.cells[z][y]
            v = p.least_of(vals)
            if v is None:
                anti = tuple(els[u] for u in bits(p.minimal_of(vals)))
                undef.append(UndefinedPair(els[x], els[y], anti, "no-least-value"))
            else:
                cells[x][y] = v
    return _assemble(p, cells, undef)


def dual_j_extension(s: PartialTable) -> ExtensionResult:
    """x -> y as min{z*y : U({x,y}) inside [z) inside [y)}.

    The z-range is exactly the Frink ideal of the pair cut to [y), so the
    result must coincide with i_min_extension under the Frink selection; both
    are computed and compared.
    """
    p = s.owner
    n = p.n
    els = p.elements
    cells = [[0] * n for _ in range(n)]
    undef = []
    for x in range(n):
        for y in range(n):
            ub = p.ups[x] & p.ups[y]
            vals = 0
            for z in range(n):
                if ub & ~p.ups[z] == 0 and p.ups[z] & ~p.ups[y] == 0:
                    vals |= 1 << s.cells[z][y]
            v = p.least_of(vals)
            if v is None:
                anti = tuple(els[u] for u in bits(p.minimal_of(vals)))
                undef.append(UndefinedPair(els[x], els[y], anti, "no-least-value"))
            else:
                cells[x][y] = v
    result = _assemble(p, cells, undef)
    frink = i_min_extension(s, selection_frink(p))
    if result != frink:
        raise InternalDisagreement("dual rule disagrees with Frink-selection min rule")
    return result


def m_extension(s: PartialTable) -> TotalTable:
    """x -> y as x * (x meet y) on a meet semilattice.

    Cross-checked against the equivalent form max{u : u meet x = x meet y};
    they must agree cell by cell.
    """
    p = s.owner
    n = p.n
    meets = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            g = p.greatest_of(p.downs[x] & p.downs[y])
            if g is None:
                raise NotMeetSemilattice(
                    f"{p.name!r} has no meet for ({p.elements[x]}, {p.elements[y]})")
            meets[x][y] = g
    cells = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            w = meets[x][y]
            cells[x][y] = s.cells[x][w]
            vals = 0
            for u in range(n):
                if meets[u][x] == w:
                    vals |= 1 << u
            g = p.greatest_of(vals)
            if g != cells[x][y]:
                raise MextSchDisagreement(
                    f"meet rule and its greatest-element form disagree at "
                    f"({p.elements[x]}, {p.elements[y]})")
    return TotalTable(p, cells)


def mlb_extension(p: Poset) -> ExtensionResult:
    """x -> y as max{u : the pairs (u, x) and (x, y) have the same maximal lower bounds}.

    The comparison is literal equality of maximal-lower-bound sets.  On meet
    semilattices those sets are singletons and the rule extends the sectional
    pseudocomplementation; on general posets the sectioned slice can differ
    from x*y (the bundled hexagon witnesses this at (c, a)).
    """
    n = p.n
    els = p.elements
    mlbs = [[p.maximal_of(p.downs[i] & p.downs[j]) for j in range(n)] for i in range(n)]
    cells = [[0] * n for _ in range(n)]
    undef = []
    for x in range(n):
        for y in range(n):
            target = mlbs[x][y]
            m = 0
            for u in range(n):
                if mlbs[u][x] == target:
                    m |= 1 << u
            g = p.greatest_of(m)
            if g is None:
                anti = tuple(els[u] for u in bits(p.maximal_of(m)))
                reason = "no-greatest-value" if m else "empty-defining-set"
                undef.append(UndefinedPair(els[x], els[y], anti, reason))
            else:
                cells[x][y] = g
    return _assemble(p, cells, undef)


def lb_min_extension(s: PartialTable) -> ExtensionResult:
    """Experimental rule: x -> y as min{x*z : z a common lower bound of x and y}.

    Unlike the other rules this one is not guaranteed to extend the star table
    (that needs the star operation antitone in its second argument), so no
    totality or extension property is claimed.
    """
    p = s.owner
    n = p.n
    els = p.elements
    cells = [[0] * n for _ in range(n)]
    undef = []
    for x in range(n):
        for y in range(n):
            zmask = p.downs[x] & p.downs[y]
            if zmask == 0:
                undef.append(UndefinedPair(els[x], els[y], (), "no-common-lower-bound"))
                continue
            vals = 0
            for z in bits(zmask):
                vals |= 1 << s.cells[x][z]
            v = p.least_of(vals)
            if v is None:
                anti = tuple(els[u] for u in bits(p.minimal_of(vals)))
                undef.append(UndefinedPair(els[x], els[y], anti, "no-least-value"))
            else:
                cells[x][y] = v
    return _assemble(p, cells, undef)
