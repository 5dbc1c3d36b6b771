"""Hull operators, the alpha-refinement, and set-class predicates."""

import pytest
from hypothesis import given

from conftest import topologies, topology_and_subset
from finitetop import (
    alpha_topology,
    closed_sets,
    discrete,
    hull,
    indiscrete,
    is_in_class,
    set_class,
)
from finitetop.census import labeled_census
from finitetop.spaces import complement, full_set


# --- independent oracles ---------------------------------------------------------

def closure_oracle(t, a):
    """Smallest closed superset, scanning the closed family outright."""
    out = full_set(t.n)
    for c in closed_sets(t).members:
        if a & ~c == 0:
            out &= c
    return out


def interior_oracle(t, a):
    out = 0
    for u in t.opens:
        if u & ~a == 0:
            out |= u
    return out


def semi_closed_literal(t, a):
    comp = complement(a, t.n)
    return comp & ~t.closure(t.interior(comp)) == 0


def semi_closure_oracle(t, a):
    out = full_set(t.n)
    for c in range(1 << t.n):
        if a & ~c == 0 and semi_closed_literal(t, c):
            out &= c
    return out


def semi_interior_oracle(t, a):
    out = 0
    for s in set_class(t, "semi-open").members:
        if s & ~a == 0:
            out |= s
    return out


def g_closed_literal(t, a):
    # complement of the literal g-open form: every closed subset of the
    # complement sits inside its interior
    b = complement(a, t.n)
    return all(
        c & ~t.interior(b) == 0
        for c in closed_sets(t).members
        if c & ~b == 0
    )


def sg_closed_literal(t, a):
    # complement of the literal sg-open form, with the semi-interior taken
    # as the union of semi-open subsets (the independent route)
    b = complement(a, t.n)
    sint = semi_interior_oracle(t, b)
    return all(
        c & ~sint == 0
        for c in range(1 << t.n)
        if semi_closed_literal(t, c) and c & ~b == 0
    )


# --- hulls ------------------------------------------------------------------------

def test_hull_examples(one_open_point):
    assert hull(one_open_point, 0b001, "closure") == 0b111
    assert hull(one_open_point, 0b011, "interior") == 0b001
    assert hull(one_open_point, 0b010, "semi-closure") == 0b010


@given(topology_and_subset())
def test_closure_interior_fixed_points(ta):
    t, a = ta
    assert hull(t, 0, "closure") == 0
    assert hull(t, full_set(t.n), "interior") == full_set(t.n)
    assert t.is_closed(hull(t, a, "closure"))
    assert t.is_open(hull(t, a, "interior"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hulls_match_oracles_exhaustively(n):
    for t in labeled_census(n):
        for a in range(1 << n):
            assert hull(t, a, "closure") == closure_oracle(t, a)
            assert hull(t, a, "interior") == interior_oracle(t, a)
            assert hull(t, a, "semi-closure") == semi_closure_oracle(t, a)
            assert hull(t, a, "semi-interior") == semi_interior_oracle(t, a)


@given(topology_and_subset())
def test_semi_closure_closed_form(ta):
    # derived fixed-point form: smallest semi-closed superset is a ∪ int(cl a)
    t, a = ta
    assert hull(t, a, "semi-closure") == a | t.interior(t.closure(a))


def test_hull_unknown_kind(one_open_point):
    with pytest.raises(ValueError):
        hull(one_open_point, 0, "midpoint")


# --- alpha topology ----------------------------------------------------------------

def test_alpha_topology_single_open_point(one_open_point):
    assert alpha_topology(one_open_point).opens == (0, 0b001, 0b011, 0b101, 0b111)


def test_alpha_topology_discrete_fixed():
    assert alpha_topology(discrete(3)) == discrete(3)


def test_alpha_topology_two_point_sierpinski_fixed(sier):
    # oracle: test all four subsets against the membership formula
    expected = tuple(
        a
        for a in range(4)
        if a & ~sier.interior(sier.closure(sier.interior(a))) == 0
    )
    assert alpha_topology(sier).opens == expected == sier.opens


@given(topologies())
def test_alpha_topology_finer_and_idempotent(t):
    ta = alpha_topology(t)
    assert set(t.opens) <= set(ta.opens)
    assert alpha_topology(ta) == ta


# --- class predicates ----------------------------------------------------------------

def test_g_closed_flips_under_refinement(one_open_point):
    a = 0b011
    assert is_in_class(one_open_point, a, "g-closed")
    assert not is_in_class(alpha_topology(one_open_point), a, "g-closed")


@given(topologies())
def test_empty_set_is_in_every_closed_like_class(t):
    for kind in (
        "closed",
        "semi-closed",
        "regular-closed",
        "alpha-closed",
        "g-closed",
        "sg-closed",
        "g-alpha-closed",
        "f-sigma-g-alpha-closed",
        "nowhere-dense",
    ):
        assert is_in_class(t, 0, kind)


def test_regular_closed_example(one_open_point):
    # cl(int {b,c}) = cl ∅ = ∅, so {b,c} is not regular closed
    assert not is_in_class(one_open_point, 0b110, "regular-closed")


def test_set_class_examples(one_open_point):
    assert set_class(one_open_point, "semi-open").members == (0, 0b001, 0b011, 0b101, 0b111)
    assert set_class(one_open_point, "regular-closed").members == (0, 0b111)
    assert closed_sets(one_open_point).members == (0, 0b110, 0b111)


def test_discrete_classes_are_powerset():
    d = discrete(3)
    for kind in ("open", "closed", "semi-open", "g-closed", "sg-closed", "clopen"):
        assert set_class(d, kind).members == tuple(range(8))


def test_indiscrete_closed_sets():
    assert closed_sets(indiscrete(2)).members == (0, 0b11)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_literal_forms_agree_exhaustively(n):
    """Containment characterizations versus the literal complement forms."""
    for t in labeled_census(n):
        for a in range(1 << n):
            assert is_in_class(t, a, "g-closed") == g_closed_literal(t, a)
            assert is_in_class(t, a, "sg-closed") == sg_closed_literal(t, a)
            assert is_in_class(t, a, "g-open") == is_in_class(
                t, complement(a, n), "g-closed"
            )


@given(topology_and_subset())
def test_alpha_open_two_routes(ta):
    # membership formula versus the materialized refinement
    t, a = ta
    assert is_in_class(t, a, "alpha-open") == alpha_topology(t).is_open(a)


@given(topology_and_subset())
def test_complement_duality(ta):
    t, a = ta
    comp = complement(a, t.n)
    assert is_in_class(t, a, "semi-closed") == is_in_class(t, comp, "semi-open")
    assert is_in_class(t, a, "alpha-closed") == is_in_class(t, comp, "alpha-open")
    assert is_in_class(t, a, "codense") == is_in_class(t, comp, "dense")


@given(topology_and_subset())
def test_f_sigma_union_semantics(ta):
    # pointwise witnesses are exactly "union of g-alpha-closed subsets"
    t, a = ta
    members = [c for c in set_class(t, "g-alpha-closed").members if c & ~a == 0]
    union = 0
    for c in members:
        union |= c
    assert is_in_class(t, a, "f-sigma-g-alpha-closed") == (union == a)


def test_unknown_class_kind(one_open_point):
    with pytest.raises(ValueError):
        is_in_class(one_open_point, 0, "almost-open")
    with pytest.raises(ValueError):
        set_class(one_open_point, "almost-open")
