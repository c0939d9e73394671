import pytest
from gmpy2 import mpq

from gaussfol import catalog as C
from gaussfol.foliation import (
    EulerFails,
    first_integral_cofactor,
    invariant_hypersurface,
    logarithmic_foliation,
    make_foliation,
    projectively_equal,
)
from gaussfol.gauss import contracted_divisor, gauss_map, invert_birational, verify_inverse
from gaussfol.polyring import VarRing

P3 = C.P3


def p(text, ring=P3):
    return ring.parse(text)


def test_exceptional34_first_coefficient():
    F = C.exceptional34()
    assert F.degree == 3 and F.ambient == 4
    assert F.coefficients[0] == p("t*(z^3-3*y*z*t+3*x*t^2)", C.P4E) or \
        F.coefficients[0] == -p("t*(z^3-3*y*z*t+3*x*t^2)", C.P4E)


FAMILY5 = {
    "f": "z1^5-5*z0*z1^3*z2+5*z0^2*z1*z2^2+5*z0^2*z1^2*z3-5*z0^3*z2*z3-5*z0^3*z1*z4+5*z0^4*z5",
    "g": "z1^4-4*z0*z1^2*z2+2*z0^2*z2^2+4*z0^2*z1*z3-4*z0^3*z4",
    "A": [
        "z1*z2^4-4*z1^2*z2^2*z3+z0*z2^3*z3+2*z1^3*z3^2+2*z0*z1*z2*z3^2+4*z1^3*z2*z4-6*z0*z1*z2^2*z4"
        "-5*z0*z1^2*z3*z4+3*z0^2*z2*z3*z4+3*z0^2*z1*z4^2-4*z1^4*z5+11*z0*z1^2*z2*z5-3*z0^2*z2^2*z5"
        "-6*z0^2*z1*z3*z5+z0^3*z4*z5",
        "z0*(-2*z2^4+7*z1*z2^2*z3-3*z1^2*z3^2-5*z0*z2*z3^2-6*z1^2*z2*z4+6*z0*z2^2*z4+7*z0*z1*z3*z4"
        "-4*z0^2*z4^2+5*z1^3*z5-10*z0*z1*z2*z5+5*z0^2*z3*z5)",
        "z0*(z1*z2^3-2*z1^2*z2*z3-3*z0*z2^2*z3+4*z0*z1*z3^2+z1^3*z4+3*z0*z1*z2*z4-4*z0^2*z3*z4"
        "-5*z0*z1^2*z5+5*z0^2*z2*z5)",
        "z0*(-z1^2*z2^2+2*z0*z2^3+z1^3*z3-z0*z1*z2*z3-z0*z1^2*z4-4*z0^2*z2*z4+5*z0^2*z1*z5)",
        "z0*(z1^3*z2-3*z0*z1*z2^2-z0*z1^2*z3+5*z0^2*z2*z3+z0^2*z1*z4-5*z0^3*z5)",
        "z0*(-z1^4+4*z0*z1^2*z2-2*z0^2*z2^2-4*z0^2*z1*z3+4*z0^3*z4)",
    ],
}


def test_family_five_explicit():
    F, f, g = C.exceptional_family(5)
    R = F.ring
    assert f == p(FAMILY5["f"], R) and g == p(FAMILY5["g"], R)
    assert F.coefficients == [p(a, R) for a in FAMILY5["A"]]


def test_family_rejects_small_n():
    with pytest.raises(C.CatalogError):
        C.exceptional_family(2)


def test_fermat_valid():
    F = C.fermat(3, 4)
    assert F.degree == 3 and F.ambient == 4


def test_fk_degree_and_first_integral():
    for k in (1, 2, 3):
        F = C.fk_family(k)
        assert F.degree == k + 1
        x, y, z, t = P3.gens()
        num = (x * z + y * t) * y ** k + x ** (k + 2)
        assert first_integral_cofactor(F, num, 1, y, k + 2) is not None


def test_fk_variant_map_is_not_euler():
    G, H = C.fk_variant_pair(1)
    with pytest.raises(EulerFails):
        make_foliation(list(G.components))
    assert verify_inverse(G, H) is not None


def test_magic_trivial_coefficients():
    F = C.magic_pullback(C.UV.one, C.UV.one)
    expected = make_foliation([p("z^2*t"), p("z*t^2"), p("-y*t^2"), p("-x*z^2")])
    assert projectively_equal(F, expected)


# -- monomial classifier ------------------------------------------------------


def test_classifier_log1111():
    F = logarithmic_foliation(list(P3.gens()), [1, 2, 3, -6])
    assert C.classify_monomial(F).verdict == "Log1111"


@pytest.mark.parametrize("pq", [(1, 1), (1, 2), (2, 2), (3, 1)])
def test_classifier_pullback(pq):
    res = C.classify_monomial(C.monomial_pullback(*pq))
    assert res.verdict == "PullbackUV" and (res.p, res.q) == pq
    assert str(res) == f"PullbackUV(p={pq[0]}, q={pq[1]})"


def test_classifier_not_dominant():
    coeffs = [p("y*z"), p("-x*z"), P3.zero, P3.zero]
    assert C.classify_monomial(coeffs).verdict == "NotDominant"


def test_classifier_rejects_polynomials():
    with pytest.raises(C.CatalogError):
        C.classify_monomial(C.exceptional23())


# -- homaloids and tnp ----------------------------------------------------------


def test_homaloid_map_birational():
    R = VarRing(("x", "y", "z"))
    G = C.homaloid_map(p("y*(x^2+y*z)", R))
    res = invert_birational(G)
    assert verify_inverse(G, res.inverse) is not None


def test_homaloid_foliation_shape():
    F = C.get("homaloid:conic").foliation
    assert F.degree == 1 and F.ambient == 3


def test_tnp_inverse_and_contracted_hypersurface():
    item = C.get("tnp:2")
    G = gauss_map(item.foliation)
    assert verify_inverse(G, item.inverse) is not None
    B = item.foliation.coefficients[1]
    assert B == p("t^2*(y*t+x^2-z*t)") or B == -p("t^2*(y*t+x^2-z*t)")
    h = item.extra["contracted"]
    assert not invariant_hypersurface(item.foliation, h)
    parts = contracted_divisor(G, item.inverse)
    assert any(d.factor.monic() == h.monic() for d in parts)


def test_tnp_rejects_zero():
    with pytest.raises(C.CatalogError):
        C.tnp_example(0)


# -- logarithmic --------------------------------------------------------------------


def test_log_formula_values():
    assert C.log_formula([1, 1, 1, 1]) == 1
    assert C.log_formula([1, 2]) == 1
    assert C.log_formula([1, 1, 1]) == 0
    assert C.log_formula([4, 1]) == 9


def test_random_logarithmic_seeded():
    a = C.random_logarithmic([2, 1, 1], seed=3)
    b = C.random_logarithmic([2, 1, 1], seed=3)
    assert a == b and a.degree == 2
    with pytest.raises(C.CatalogError):
        C.random_logarithmic([3])


# -- registry -------------------------------------------------------------------------


def test_keys_resolve():
    samples = ["exceptional23", "boundary:12", "combiner:1,2,3", "beta-limit", "exceptional34", "family:3",
               "fermat:2,3", "fk:1", "magic", "monomial:1,2", "log1111", "homaloid:triangle", "tnp:3",
               "ex1", "ex2:3", "ex3:3", "exn", "dg2", "exdg3-8", "exdg3-9", "fassarella", "omega-d",
               "linear-pullback", "log:2,1"]
    heads = {k.partition(":")[0] for k, _ in C.keys()}
    for key in samples:
        assert key.partition(":")[0] in heads
        item = C.get(key)
        assert item.foliation.degree >= 1


def test_unknown_keys():
    for key in ("nope", "boundary:99", "homaloid:cubic", "fermat:x"):
        with pytest.raises(C.CatalogError):
            C.get(key)


def test_exceptional23_item_extras():
    item = C.get("exceptional23")
    assert item.expected_tdg == 1 and [V.degree for V in item.components] == [1, 2, 3]
    assert item.extra["p"] == 2 and item.extra["q"] == 3
    assert C.get("exceptional34").extra["component_data"] == [(1, 1), (3, 1), (8, 1)]


def test_combiner_scaling():
    assert projectively_equal(C.combiner(1, 1, 1), C.exceptional23())
    assert projectively_equal(C.combiner(2, 2, 2), C.combiner(mpq(1, 3), mpq(1, 3), mpq(1, 3)))
