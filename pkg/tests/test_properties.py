"""Randomized invariants over small posets."""

from hypothesis import given, settings
from hypothesis import strategies as st

from spposet import (
    Document,
    MissingWitness,
    Section,
    build_poset,
    emit,
    natural_extension,
    parse,
    pure_extension,
    restrict,
    selection_frink,
    selection_union,
    star_table,
)
from spposet.poset import bits


@st.composite
def posets(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = []
    for j in range(1, n):
        below = draw(st.sets(st.integers(min_value=0, max_value=j - 1), max_size=j))
        pairs.extend((str(i), str(j)) for i in below)
    return build_poset("r", [str(i) for i in range(n)], pairs)


@given(posets())
def test_relation_round_trip(p):
    pairs = [(x, y) for x in p.elements for y in p.elements if p.leq(x, y)]
    assert build_poset(p.name, p.elements, pairs) == p


@given(posets())
def test_bounds_conventions(p):
    assert p.bounds([], "upper").members == p.elements
    assert p.bounds([], "lower").members == p.elements
    for x in p.elements:
        assert set(p.bounds([x], "upper")) == set(p.upper_section(x))
        assert set(p.bounds([x], "lower")) == set(p.lower_section(x))


@given(posets(max_n=5))
def test_mlb_iff_local_meet(p):
    for x in p.elements:
        for y in p.elements:
            mlbs = set(p.maximal_lower_bounds(x, y))
            for z in p.elements:
                assert (z in mlbs) == (p.meet_over(x, y, z) == z)


@given(posets(max_n=5))
def test_frink_sandwich(p):
    for i in range(p.n):
        for j in range(p.n):
            f = p.frink_mask(i, j)
            assert (p.downs[i] | p.downs[j]) & ~f == 0
            for z in bits(p.ups[i] & p.ups[j]):
                assert f & ~p.downs[z] == 0


@given(posets(max_n=5))
def test_classify_invariants(p):
    rep = p.classify()
    assert rep.is_lattice == (rep.is_upper_semilattice and rep.is_lower_semilattice)
    if rep.is_upper_semilattice:
        assert rep.is_nearlattice
    if rep.is_chain:
        assert rep.is_lattice and rep.all_lower_sections_chains
    for flag, witness in rep.witnesses.items():
        assert not getattr(rep, flag)
        assert all(w in p._index for w in witness)


@given(posets(max_n=5))
@settings(max_examples=60)
def test_extensions_extend_star(p):
    st_ = star_table(p)
    if isinstance(st_, MissingWitness):
        return
    for t in (pure_extension(st_), natural_extension(st_)):
        assert restrict(t) == st_


@given(posets(max_n=5))
@settings(max_examples=60)
def test_star_values_sit_in_their_section(p):
    st_ = star_table(p)
    if isinstance(st_, MissingWitness):
        return
    for x in p.elements:
        for y in p.elements:
            if p.leq(y, x):
                v = st_.value(x, y)
                assert p.leq(y, v)
                assert p.disjoint_over(v, x, y)


@given(posets(max_n=5))
@settings(max_examples=40)
def test_selection_constructors_always_validate(p):
    selection_union(p)
    selection_frink(p)


@given(posets(max_n=5))
@settings(max_examples=40)
def test_document_round_trip(p):
    sections = [Section("poset", p.name, p)]
    st_ = star_table(p)
    if not isinstance(st_, MissingWitness):
        sections.append(Section("optable", "star", st_))
        sections.append(Section("optable", "natural", natural_extension(st_)))
    sections.append(Section("selection", "frink", selection_frink(p)))
    doc = Document(tuple(sections))
    assert parse(emit(doc)) == doc
