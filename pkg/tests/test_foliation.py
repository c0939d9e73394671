import json
import random

import pytest
from gmpy2 import mpq

from gaussfol import catalog as C
from gaussfol.exterior import DifferentialForm, interior_product, one_form, radial_field
from gaussfol.foliation import (
    EulerFails,
    FoliationError,
    NotHomogeneous,
    NotIntegrable,
    ResidueConditionViolated,
    SingularMatrix,
    ZeroForm,
    first_integral_cofactor,
    foliation_from_json,
    foliation_to_json,
    invariant_hypersurface,
    linear_transform,
    logarithmic_foliation,
    make_foliation,
    projectively_equal,
    pullback_foliation,
    pullback_form,
    restrict_to_linear_subspace,
    singular_ideal,
)
from gaussfol.groebner import Ideal, ideal_membership, krull_dimension, projective_degree
from gaussfol.polyring import VarRing

P3 = C.P3


def p(text, ring=P3):
    return ring.parse(text)


# -- construction and validation -----------------------------------------


def test_exceptional_is_valid_degree_two():
    F = C.exceptional23()
    assert F.degree == 2 and F.ambient == 3


def test_euler_failure():
    with pytest.raises(EulerFails):
        make_foliation([P3.zero, p("x"), P3.zero, P3.zero])


def test_not_homogeneous():
    with pytest.raises(NotHomogeneous):
        make_foliation([p("y"), p("-x+x^2"), P3.zero, P3.zero])


def test_zero_form():
    with pytest.raises(ZeroForm):
        make_foliation([P3.zero] * 4)


def test_random_euler_form_not_integrable():
    # i_R of a random 2-form satisfies Euler but is generically not integrable
    rng = random.Random(11)
    coeffs = {}
    for i in range(4):
        for j in range(i + 1, 4):
            coeffs[(i, j)] = sum((g.scale(rng.randint(-4, 4)) for g in P3.gens()), P3.zero)
    alpha = DifferentialForm(P3, 2, coeffs)
    omega = interior_product(radial_field(P3), alpha)
    with pytest.raises(NotIntegrable):
        make_foliation(omega)


def test_content_is_removed():
    F = C.exceptional23()
    G = make_foliation([c * p("x+y") for c in F.coefficients])
    assert G.coefficients == F.coefficients


# -- singular scheme ------------------------------------------------------


def test_fk_singular_radical():
    F = C.fk_family(2)
    I = singular_ideal(F)
    assert ideal_membership(p("x"), I, radical=True)
    assert ideal_membership(p("y"), I, radical=True)
    xy = Ideal([p("x"), p("y")], P3)
    assert all(ideal_membership(g, xy) for g in I.generators)


def test_ex1_three_points():
    F = C.get("ex1:1,2,-3").foliation
    pd = projective_degree(singular_ideal(F))
    assert (pd.dimension, pd.degree) == (0, 3)


def test_fermat_singular_dimension():
    assert krull_dimension(singular_ideal(C.fermat(2, 3))) - 1 == 1


# -- invariance ----------------------------------------------------------


def test_invariant_hypersurfaces():
    assert invariant_hypersurface(C.exceptional23(), p("t"))
    F = C.get("ex3:3").foliation
    assert invariant_hypersurface(F, F.ring.gens()[0])


def test_magic_numerator_not_invariant():
    u, v = C.UV.gens()
    F = C.magic_pullback(u, C.UV.one)
    assert not invariant_hypersurface(F, p("x"))


# -- first integrals ------------------------------------------------------


def test_cofactor_exceptional23():
    f, g = C.exceptional23_first_integral()
    h = first_integral_cofactor(C.exceptional23(), f, 2, g, 3)
    assert h is not None and h.total_degree() == 1 and h.monic() == p("t")


def test_cofactor_exceptional34():
    f, g = C.exceptional34_first_integral()
    h = first_integral_cofactor(C.exceptional34(), f, 3, g, 4)
    assert h is not None and h.monic() == C.P4E.parse("t^2")


def test_cofactor_rejects_wrong_pair():
    f, g = C.exceptional23_first_integral()
    assert first_integral_cofactor(C.exceptional23(), f + p("x^3"), 2, g, 3) is None
    with pytest.raises(FoliationError):
        first_integral_cofactor(C.exceptional23(), f, 1, g, 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cofactor_family(n):
    F, f, g = C.exceptional_family(n)
    h = first_integral_cofactor(F, f, n - 1, g, n)
    z0 = F.ring.gens()[0]
    assert h is not None
    assert h.monic() == z0 ** (n - 2)
    assert abs(h.leading_coefficient()) == n * (n - 1)


# -- logarithmic foliations ----------------------------------------------


def test_logarithmic_hyperplanes():
    F = logarithmic_foliation(P3.gens(), [1, 1, 1, -3])
    assert F.degree == 2


def test_logarithmic_ex2_form():
    Z = VarRing(("z0", "z1", "z2", "z3"))
    z = Z.gens()
    q = z[1] ** 2 + z[2] ** 2 + z[3] ** 2
    F = logarithmic_foliation([q, z[0]], [1, -2])
    expected = make_foliation([-q] + [z[0] * zj for zj in z[1:]])
    assert projectively_equal(F, expected)


def test_logarithmic_degree_formula():
    F = C.random_logarithmic([3, 2], seed=5)
    assert F.degree == 3


def test_residue_condition():
    with pytest.raises(ResidueConditionViolated):
        logarithmic_foliation([p("x"), p("y")], [1, 1])


# -- pull-backs -----------------------------------------------------------


@pytest.mark.parametrize("s", [0, 1, 2])
def test_magic_degree(s):
    u, v = C.UV.gens()
    A = u ** s + u if s > 1 else u ** s
    F = C.magic_pullback(A, C.UV.one)
    assert F.degree == s + 2


def test_monomial_pullback_coefficients():
    pp, q = 2, 1
    F = C.monomial_pullback(pp, q)
    expected = [p(f"x^{pp}*y*t^{q + 2}"), p(f"-x^{pp + 1}*t^{q + 2}"), p(f"y^{pp + 2}*z^{q}*t"),
                p(f"-y^{pp + 2}*z^{q + 1}")]
    assert projectively_equal(F, make_foliation(expected))


def test_linear_projection_pullback_is_valid():
    F = C.linear_pullback()
    assert F.degree == 2 and F.ambient == 3


# -- restriction and linear maps -----------------------------------------


def test_restriction_to_random_plane():
    R = VarRing(("a", "b", "c"))
    a, b, c = R.gens()
    iota = [a + b.scale(2) - c, b - a.scale(3), c + a, a.scale(5) - b + c.scale(2)]
    G = restrict_to_linear_subspace(C.exceptional23(), iota)
    assert G.degree == 2
    assert projective_degree(singular_ideal(G)).degree == 7


def test_restriction_to_invariant_plane():
    R = VarRing(("a", "b", "c"))
    a, b, c = R.gens()
    with pytest.raises(ZeroForm):
        restrict_to_linear_subspace(C.exceptional23(), [a, b, c, R.zero])


def test_restriction_identity():
    F = C.exceptional23()
    assert restrict_to_linear_subspace(F, P3.gens()) == F


def test_linear_transform_identity_and_singular():
    F = C.exceptional23()
    eye = [[int(i == j) for j in range(4)] for i in range(4)]
    assert linear_transform(F, eye) == F
    with pytest.raises(SingularMatrix):
        linear_transform(F, [[1, 0, 0, 0]] * 4)


def test_one_parameter_subgroup_splits_weights():
    s = mpq(2)
    x, y, z, t = P3.gens()
    diag = [x.scale(s), y.scale(s), z.scale(1 / s ** 3), t.scale(s)]
    pieces = C.boundary_pieces()
    scaled = []
    for w in pieces:
        moved = pullback_form(w.coefficient_list(), diag)
        ratios = {moved[i].terms[m] / c for i, co in enumerate(w.coefficient_list()) for m, c in co.terms.items()}
        assert len(ratios) == 1  # each piece is an eigenvector
        scaled.append(ratios.pop())
    assert len(set(scaled)) > 1
    omega = sum((w for w in pieces[1:]), pieces[0])
    moved = pullback_form(omega.coefficient_list(), diag)
    combo = [sum((w.coefficient_list()[i].scale(k) for w, k in zip(pieces, scaled)), P3.zero) for i in range(4)]
    assert moved == combo


def test_swap_conjugates_dual_to_original():
    F = C.exceptional23()
    dual = C.get("exceptional23").inverse
    D = make_foliation(one_form(C.TARGET3, list(dual.components)))
    x, y, z, t = P3.gens()
    moved = pullback_foliation(D, [y, x, t, z])
    assert projectively_equal(moved, F)


def test_projective_equality():
    F = C.exceptional23()
    assert projectively_equal(F, make_foliation([c.scale(5) for c in F.coefficients]))
    assert not projectively_equal(C.combiner(1, 1, 0), C.combiner(0, 1, 1))


def test_json_roundtrip():
    F = C.exceptional23()
    data = json.loads(json.dumps(foliation_to_json(F)))
    assert foliation_from_json(data) == F
