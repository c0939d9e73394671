import math

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from gaussfol.gauss import gauss_map, jacobian_determinant
from gaussfol.catalog import fermat
from gaussfol.foliation import singular_ideal
from gaussfol.groebner import (
    DEGREVLEX,
    Budget,
    BudgetExceeded,
    Ideal,
    MonomialOrder,
    colon_ideal,
    elimination_ideal,
    groebner_basis,
    hilbert_numerator,
    ideal_membership,
    intersect,
    krull_dimension,
    normal_form,
    projective_degree,
    saturate,
    vector_space_dimension,
)
from gaussfol.polyring import Polynomial, VarRing, parse_polynomial

R2 = VarRing(("x", "y"))
R3 = VarRing(("x", "y", "z"))
R4 = VarRing(("x", "y", "z", "t"))


def I(ring, *texts):
    return Ideal([parse_polynomial(s, ring) for s in texts], ring)


def monic_set(gb):
    return {str(g.monic()) for g in gb.basis}


def sympy_monic_set(ideal, order):
    syms = sympy.symbols(ideal.ring.names)
    loc = dict(zip(ideal.ring.names, syms))
    exprs = [sympy.sympify(str(g).replace("^", "**"), locals=loc) for g in ideal.generators]
    G = sympy.groebner(exprs, *syms, order=order, domain="QQ")
    out = set()
    for g in G.exprs:
        terms = sympy.Poly(g, *syms).terms()
        p = Polynomial.from_terms(ideal.ring, {m: mpq(int(c.p), int(c.q)) for m, c in terms})
        out.add(str(p.monic()))
    return out


def test_basis_hand_example():
    gb = groebner_basis(I(R2, "x^2", "x*y+y^2"))
    assert monic_set(gb) == {"x^2", "x*y + y^2", "y^3"}


def test_single_generator():
    for order in (DEGREVLEX, MonomialOrder.lex()):
        assert monic_set(groebner_basis(I(R2, "x"), order)) == {"x"}


def test_normal_forms():
    gx = groebner_basis(I(R2, "x"))
    assert normal_form(parse_polynomial("x^2", R2), gx).is_zero()
    assert normal_form(parse_polynomial("y", R2), gx) == parse_polynomial("y", R2)
    glex = groebner_basis(I(R2, "x^2-y"), MonomialOrder.lex())
    assert normal_form(parse_polynomial("x^3", R2), glex) == parse_polynomial("x*y", R2)


def test_membership():
    y = parse_polynomial("y", R2)
    x = parse_polynomial("x", R2)
    assert ideal_membership(y, I(R2, "x", "y"))
    assert ideal_membership(x, I(R2, "x^2"), radical=True)
    assert not ideal_membership(x, I(R2, "x^2"))


def test_fermat_jacobian_in_radical_of_singular_ideal():
    F = fermat(2, 3)
    J = jacobian_determinant(gauss_map(F))
    assert ideal_membership(J, singular_ideal(F), radical=True)


def test_elimination_resultant():
    ring = VarRing(("x", "a", "b"))
    E = elimination_ideal(I(ring, "a-x^2", "b-x^3"), ["a", "b"])
    target = parse_polynomial("a^3-b^2", E.ring)
    assert ideal_membership(target, E)


def test_elimination_free_variable():
    ring = VarRing(("x", "a"))
    E = elimination_ideal(I(ring, "x-a"), ["a"])
    assert E.is_zero()


def test_elimination_requires_suffix():
    with pytest.raises(Exception):
        elimination_ideal(I(R3, "x"), ["x"])


def test_saturation_examples():
    S = saturate(I(R3, "x*y", "x*z"), parse_polynomial("x", R3))
    assert monic_set(S.groebner()) == {"y", "z"}
    base = I(R3, "x^2*y", "z^3-x")
    same = saturate(base, parse_polynomial("1", R3))
    assert monic_set(same.groebner()) == monic_set(base.groebner())
    S2 = saturate(I(R2, "x^2*y"), parse_polynomial("y", R2))
    assert monic_set(S2.groebner()) == {"x^2"}


def test_colon_and_intersect():
    C = colon_ideal(I(R2, "x^2*y", "y^3"), parse_polynomial("y", R2))
    assert monic_set(C.groebner()) == {"x^2", "y^2"}
    J = intersect(I(R2, "x"), I(R2, "y"))
    assert monic_set(J.groebner()) == {"x*y"}


def test_vector_space_dimension():
    assert vector_space_dimension(I(R2, "x^2", "y^2")) == 4
    assert vector_space_dimension(I(R2, "2*x*y", "x^2+2*y")) == 3
    assert vector_space_dimension(I(R2, "x")) == math.inf


def test_projective_degrees_exceptional_components():
    assert projective_degree(I(R4, "x^2-2*y*t", "x*y-3*z*t", "2*y^2-3*x*z")).degree == 3
    pd = projective_degree(I(R4, "t", "y^2-2*x*z"))
    assert (pd.degree, pd.dimension) == (2, 1)
    assert projective_degree(I(R4, "x", "t")).degree == 1


def test_projective_degree_points_and_empty():
    pd = projective_degree(I(R3, "x*y", "y*z", "x*z"))
    assert (pd.degree, pd.dimension) == (3, 0)
    assert projective_degree(I(R3, "x", "y", "z")).empty
    assert krull_dimension(I(R3, "1")) == -1


def test_hilbert_numerator_of_principal_monomial():
    # Q[x,y]/(x^2): numerator 1 - T^2
    assert hilbert_numerator([(2, 0)]) == [1, 0, -1]


def test_budget_enforced():
    cyclic4 = I(R4, "x+y+z+t", "x*y+y*z+z*t+t*x", "x*y*z+y*z*t+z*t*x+t*x*y", "x*y*z*t-1")
    with pytest.raises(BudgetExceeded):
        groebner_basis(cyclic4, budget=Budget(max_reductions=5))
    b = Budget()
    groebner_basis(I(R2, "x^2", "x*y+y^2"), budget=b)
    assert b.report()["reductions"] > 0


@pytest.mark.parametrize("order,sym", [(DEGREVLEX, "grevlex"), (MonomialOrder.lex(), "lex")])
def test_matches_sympy_on_fixed_ideal(order, sym):
    ideal = I(R3, "x^2+y*z-1", "x*y-z^2", "y^3-x*z+2")
    assert monic_set(groebner_basis(ideal, order)) == sympy_monic_set(ideal, sym)


term = st.tuples(st.integers(0, 2), st.integers(0, 1), st.integers(0, 1))
small = st.dictionaries(term, st.integers(-3, 3).filter(bool), min_size=1, max_size=3).map(
    lambda d: Polynomial.from_terms(R3, d))


@settings(max_examples=20, deadline=None)
@given(st.lists(small, min_size=1, max_size=2))
def test_reduced_basis_matches_sympy(gens):
    gens = [g for g in gens if g.terms]
    if not gens:
        return
    ideal = Ideal(gens, R3)
    assert monic_set(groebner_basis(ideal)) == sympy_monic_set(ideal, "grevlex")


@settings(max_examples=20, deadline=None)
@given(st.lists(small, min_size=1, max_size=3), small)
def test_generators_reduce_to_zero(gens, extra):
    ideal = Ideal(gens, R3)
    gb = groebner_basis(ideal)
    for g in ideal.generators:
        assert normal_form(g, gb).is_zero()
    prod = extra * gens[0]
    assert normal_form(prod, gb).is_zero()
