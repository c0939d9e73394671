"""Explicit foliations, their known inverses and singular components.

Every constructor returns validated objects.  ``get(key)`` resolves the
string keys used by the command line, e.g. ``"family:5"`` or ``"fermat:2,3"``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .exterior import DifferentialForm, VectorField, contract_volume, one_form, radial_field
from .foliation import (
    Foliation,
    FoliationError,
    ZeroForm,
    logarithmic_foliation,
    make_foliation,
    pullback_form,
)
from .gauss import ComponentData, RationalMap, is_dominant
from .groebner import Ideal, saturate
from .polyring import Polynomial, VarRing, as_rational, determinant

__all__ = [
    "CatalogItem",
    "CatalogError",
    "MonomialClassification",
    "P3",
    "projective_ring",
    "exceptional23",
    "boundary_pieces",
    "combiner",
    "beta_limit",
    "exceptional34",
    "exceptional_family",
    "family_components",
    "fermat",
    "fk_family",
    "fk_inverse",
    "fk_variant_pair",
    "magic_pullback",
    "monomial_pullback",
    "classify_monomial",
    "homaloid_map",
    "homaloid_foliation",
    "tnp_example",
    "random_logarithmic",
    "get",
    "keys",
]

P3 = VarRing(("x", "y", "z", "t"))
TARGET3 = VarRing(("a", "b", "c", "e"))


class CatalogError(ValueError):
    pass


@dataclass
class CatalogItem:
    key: str
    foliation: Foliation
    description: str = ""
    inverse: RationalMap | None = None
    components: list[ComponentData] = field(default_factory=list)
    expected_tdg: int | None = None
    extra: dict = field(default_factory=dict)


def projective_ring(n: int) -> VarRing:
    """Default homogeneous coordinates on P^n."""
    if n == 2:
        return VarRing(("x", "y", "z"))
    if n == 3:
        return P3
    return VarRing(tuple(f"z{i}" for i in range(n + 1)))


def _p(ring: VarRing, *texts: str) -> list[Polynomial]:
    return [ring.parse(s) for s in texts]


def _component(ring: VarRing, gens: Sequence[str], witness, degree=None, mu=None, name="") -> ComponentData:
    return ComponentData(Ideal(_p(ring, *gens), ring), tuple(as_rational(w) for w in witness),
                         degree, mu, name)


def _inverse(target: VarRing, *texts: str) -> RationalMap:
    return RationalMap(_p(target, *texts), target)


# ---------------------------------------------------------------------------
# the exceptional component E(2,3;3) and its boundary


def exceptional23() -> Foliation:
    coeffs = _p(P3, "t*(2*y^2-3*x*z)", "t*(3*t*z-x*y)", "t*(x^2-2*y*t)", "2*x^2*z-y*z*t-x*y^2")
    return make_foliation(coeffs, meta={"name": "exceptional23"})


def exceptional23_first_integral() -> tuple[Polynomial, Polynomial]:
    """f, g with f²/g³ constant on leaves."""
    f, g = _p(P3, "z*t^2-x*y*t+1/3*x^3", "y*t-1/2*x^2")
    return f, g


def exceptional23_components() -> list[ComponentData]:
    return [
        _component(P3, ["x", "t"], (0, 1, 1, 0), 1, 1, "line"),
        _component(P3, ["t", "y^2-2*x*z"], (1, 1, mpq(1, 2), 0), 2, 1, "conic"),
        _component(P3, ["x^2-2*y*t", "x*y-3*z*t", "2*y^2-3*x*z"], (1, mpq(1, 2), mpq(1, 6), 1), 3, 1,
                   "twisted cubic"),
    ]


def boundary_pieces() -> tuple[DifferentialForm, DifferentialForm, DifferentialForm]:
    """The three weight pieces whose sum is the exceptional form."""
    w1 = one_form(P3, _p(P3, "2*y^2*t", "-x*y*t", "0", "-x*y^2"))
    w2 = one_form(P3, _p(P3, "-3*x*z*t", "0", "x^2*t", "2*x^2*z"))
    w3 = one_form(P3, _p(P3, "0", "3*t^2*z", "-2*y*t^2", "-y*z*t"))
    return w1, w2, w3


def combiner(a1, a2, a3) -> Foliation:
    alphas = [as_rational(a) for a in (a1, a2, a3)]
    if not any(alphas):
        raise ZeroForm("at least one weight must be nonzero")
    total = DifferentialForm.zero(P3, 1)
    for a, w in zip(alphas, boundary_pieces()):
        if a:
            total = total + w.scale(a)
    return make_foliation(total, meta={"name": "combiner", "weights": [str(a) for a in alphas]})


# closed-form duals of the boundary foliations; they are the inverse maps
_BOUNDARY = {
    "12": (
        (1, 1, 0),
        ("-3*c^2*e", "3*b*c*e", "a*c*e-2*b^2*e", "2*a*c^2-b^2*c"),
        "t*x*(2*x*z-y^2)",
    ),
    "13": (
        (1, 0, 1),
        ("c*(a*b-3*e*c)", "-2*a^2*c", "a*(e*c+a*b)", "2*a*c^2"),
        "y*t",
    ),
    "23": (
        (0, 1, 1),
        ("-a*b*c", "c*(2*a^2-3*b*e)", "b*(-a^2+2*b*e)", "b^2*c"),
        "z*t*(2*y*t-x^2)",
    ),
}


def boundary(which: str) -> CatalogItem:
    try:
        weights, inv, div = _BOUNDARY[which]
    except KeyError:
        raise CatalogError(f"unknown boundary piece {which!r}; use 12, 13 or 23") from None
    F = combiner(*weights)
    return CatalogItem(f"boundary:{which}", F, f"sum of weight pieces {which}",
                       _inverse(TARGET3, *inv), expected_tdg=1,
                       extra={"reduced_divisor": P3.parse(div)})


def beta_limit() -> Foliation:
    coeffs = _p(P3, "y*t*(-3*x+2*y)", "t*(x^2-x*y+y*t)", "0", "y*(2*x^2-x*y-y*t)")
    return make_foliation(coeffs, meta={"name": "beta-limit"})


# ---------------------------------------------------------------------------
# E(3,4;4)

P4E = VarRing(("s", "x", "y", "z", "t"))
TARGET4 = VarRing(("a", "b", "c", "e", "f"))


def exceptional34() -> Foliation:
    coeffs = _p(
        P4E,
        "t*(z^3-3*y*z*t+3*x*t^2)",
        "-2*t*(y*z^2-2*y^2*t-x*z*t+2*s*t^2)",
        "-2*t*(-y^2*z+x*z^2+3*x*y*t-2*s*z*t)",
        "-2*t*(2*y^3-5*x*y*z+2*s*z^2+3*x^2*t-2*s*y*t)",
        "2*y^3*z-6*x*y*z^2+3*s*z^3+2*x*y^2*t+4*x^2*z*t-5*s*y*z*t+s*x*t^2",
    )
    return make_foliation(coeffs, meta={"name": "exceptional34"})


def exceptional34_first_integral() -> tuple[Polynomial, Polynomial]:
    # the sign of the cubic term of g is the one making f³/g⁴ a first integral
    return tuple(_p(P4E, "s*t^3-(2*x*z+y^2)*t^2+2*y*z^2*t-1/2*z^4", "x*t^2-y*z*t+1/3*z^3"))


def exceptional34_inverse() -> RationalMap:
    return _inverse(
        TARGET4,
        "-b*c^3+3*b^2*c*e-2*a*c^2*e-4*a*b*e^2-3*b^3*f+10*a*b*c*f-4*a^2*e*f",
        "a*(2*c^3-5*b*c*e+6*a*e^2+4*b^2*f-8*a*c*f)",
        "a*(-8*a*b*f+b^2*e+2*b*c^2-3*b*c^2+6*a*c*e)",
        "a*(16*a^2*f-2*a*b*e-4*a*c^2+b^2*c)",
        "a*(6*a*b*c-12*a^2*e-b^3)",
    )


# ---------------------------------------------------------------------------
# exceptional family on P^n


def _family_fields(ring: VarRing):
    n = ring.nvars - 1
    z = ring.gens()
    S = VectorField(ring, [ring.zero] + [z[j].scale(j) for j in range(1, n + 1)])

    def nil(k):
        return VectorField(ring, [z[j - k] if j >= k else ring.zero for j in range(n + 1)])

    return S, nil


def _hankel(ring: VarRing, m: int) -> Polynomial:
    z = ring.gens()
    rows = [[z[j + 1].scale(j + 1) for j in range(m)]]
    for r in range(1, m):
        rows.append([z[j - r + 1] if j - r + 1 >= 0 else ring.zero for j in range(m)])
    return determinant(rows)


def exceptional_family(n: int) -> tuple[Foliation, Polynomial, Polynomial]:
    """The degree n−1 foliation on P^n generated by R, S, N, ..., N^{n−2}, and f, g."""
    if n < 3:
        raise CatalogError("the family starts at n = 3")
    ring = VarRing(tuple(f"z{i}" for i in range(n + 1)))
    S, nil = _family_fields(ring)
    fields = [radial_field(ring), S] + [nil(k) for k in range(1, n - 1)]
    # overall sign fixed so that A_n = −z0·g
    omega = contract_volume(fields, ring).scale(-1)
    f = _hankel(ring, n)
    g = _hankel(ring, n - 1)
    F = make_foliation(omega, meta={"name": f"family:{n}"})
    return F, f, g


def family_components(n: int, budget=None) -> list[Ideal]:
    """Ideals of the three codimension-two singular components."""
    F, f, g = exceptional_family(n)
    ring = F.ring
    z = ring.gens()
    V1 = saturate(Ideal([f, g], ring), z[0], budget)
    V2 = Ideal([z[0], z[1]], ring)
    a0 = F.coefficients[0].compose([ring.zero] + list(z[1:]))
    while z[1].divides(a0):
        a0 = a0.divexact(z[1])
    V3 = Ideal([z[0], a0], ring)
    return [V1, V2, V3]


# ---------------------------------------------------------------------------
# assorted families


def fermat(d: int, n: int) -> Foliation:
    if d < 1 or n < 2:
        raise CatalogError("need d >= 1 and n >= 2")
    ring = projective_ring(n)
    z = ring.gens()
    power_sum = ring.zero
    for zi in z[1:]:
        power_sum = power_sum + zi ** (d + 1)
    coeffs = [power_sum] + [-(z[0] * zi ** d) for zi in z[1:]]
    return make_foliation(coeffs, meta={"name": f"fermat:{d},{n}"})


def fk_family(k: int) -> Foliation:
    if k < 1:
        raise CatalogError("k must be positive")
    x, y, z, t = P3.gens()
    coeffs = [
        y * ((x ** (k + 1)).scale(k + 2) + y ** k * z),
        -((x ** (k + 2)).scale(k + 2) + (x * y ** k * z).scale(2) + y ** (k + 1) * t),
        x * y ** (k + 1),
        y ** (k + 2),
    ]
    return make_foliation(coeffs, meta={"name": f"fk:{k}"})


def fk_inverse(k: int) -> RationalMap:
    """Closed-form inverse of the Gauss map of ``fk_family(k)``."""
    A, B, C, D = TARGET3.gens()
    comps = [
        C * D ** (k + 1),
        D ** (k + 2),
        A * D ** (k + 1) - (C ** (k + 1) * D).scale(k + 2),
        (C ** (k + 2)).scale(k + 2) - (A * C * D ** k).scale(2) - B * D ** (k + 1),
    ]
    return RationalMap(comps, TARGET3)


def fk_variant_pair(k: int) -> tuple[RationalMap, RationalMap]:
    """A birational map/inverse pair in a sign-variant normalization.

    The second component carries the opposite sign on its last two terms, so
    the map is not the Gauss map of a foliation; it is still birational and
    the two maps below are mutually inverse.
    """
    x, y, z, t = P3.gens()
    G = RationalMap([
        y * ((x ** (k + 1)).scale(k + 2) + y ** k * z),
        -((x ** (k + 2)).scale(k + 2) - (x * y ** k * z).scale(2) - y ** (k + 1) * t),
        x * y ** (k + 1),
        y ** (k + 2),
    ], TARGET3)
    A, B, C, D = TARGET3.gens()
    H = RationalMap([
        C * D ** (k + 1),
        D ** (k + 2),
        A * D ** (k + 1) - (C ** (k + 1) * D).scale(k + 2),
        B * D ** (k + 1) - (A * C * D ** k).scale(2) + (C ** (k + 2)).scale(3 * (k + 2)),
    ], TARGET3)
    return G, H


UV = VarRing(("u", "v"))


def _hom_in(p: Polynomial, num, den, du: int, dv: int) -> Polynomial:
    # p(num_u/den_u, num_v/den_v) · den_u^du · den_v^dv
    (nu, nv), (eu, ev) = num, den
    acc = nu.ring.zero
    for (i, j), c in p.terms.items():
        acc = acc + (nu ** i * eu ** (du - i) * nv ** j * ev ** (dv - j)).scale(c)
    return acc


def magic_pullback(A: Polynomial, B: Polynomial) -> Foliation:
    """Pull back A du + B dv along (x,y,z,t) ↦ (x/t, y/z), denominators cleared."""
    if A.ring != UV or B.ring != UV:
        A, B = A.to_ring(UV), B.to_ring(UV)
    if not A.terms or not B.terms:
        raise ZeroForm("A and B must both be nonzero")
    x, y, z, t = P3.gens()
    du = max(A.degree_in(0), B.degree_in(0))
    dv = max(A.degree_in(1), B.degree_in(1))
    Ah = _hom_in(A, (x, y), (t, z), du, dv)
    Bh = _hom_in(B, (x, y), (t, z), du, dv)
    coeffs = [z * z * t * Ah, z * t * t * Bh, -(y * t * t * Bh), -(x * z * z * Ah)]
    return make_foliation(coeffs, meta={"name": "magic", "A": str(A), "B": str(B)})


def monomial_pullback(p: int, q: int) -> Foliation:
    """u^p du + v^q dv along u = x/y, v = z/t."""
    x, y, z, t = P3.gens()
    coeffs = [x ** p * y * t ** (q + 2), -(x ** (p + 1) * t ** (q + 2)),
              y ** (p + 2) * z ** q * t, -(y ** (p + 2) * z ** (q + 1))]
    return make_foliation(coeffs, meta={"name": f"monomial:{p},{q}"})


def monomial_inverse(p: int, q: int) -> RationalMap:
    a, b, c, d = TARGET3.gens()
    comps = [
        (b ** (p + 1) * c ** (q + 2)).scale((-1) ** (q + 1)),
        (a * b ** p * c ** (q + 2)).scale((-1) ** q),
        (a ** (p + 2) * d ** (q + 1)).scale((-1) ** (p + 1)),
        (a ** (p + 2) * c * d ** q).scale((-1) ** p),
    ]
    return RationalMap(comps, TARGET3)


@dataclass(frozen=True)
class MonomialClassification:
    """Verdict of the monomial classifier.

    For ``PullbackUV`` the form is, up to a monomial factor, the pull-back of
    ``u^p du + λ v^q dv`` with ``u = z_i/z_j`` and ``v = z_k/z_l`` (indices in
    ``pairs``).  ``raw`` holds the exponents (P, Q) of the ratio
    B_i/B_k = ratio · u^P v^Q read off from the coefficients, and (p, q) are
    re-encoded as (|P|−1, |Q|−1) after choosing the orientation of u and v.
    """

    verdict: str
    p: int | None = None
    q: int | None = None
    raw: tuple | None = None
    ratio: mpq | None = None
    pairs: tuple | None = None
    residues: tuple | None = None

    def __str__(self):
        if self.verdict == "PullbackUV":
            return f"PullbackUV(p={self.p}, q={self.q})"
        return self.verdict


def _monomial_data(coeffs: Sequence[Polynomial]):
    out = []
    for c in coeffs:
        if len(c.terms) > 1:
            raise CatalogError("coefficients must be monomials")
        if not c.terms:
            out.append(None)
        else:
            ((m, v),) = c.terms.items()
            out.append((m, v))
    return out


def classify_monomial(omega) -> MonomialClassification:
    """Sort a monomial foliation on P^3 into the two dominant normal forms or NotDominant."""
    if isinstance(omega, Foliation):
        coeffs = omega.coefficients
        ring = omega.ring
    elif isinstance(omega, DifferentialForm):
        coeffs = omega.coefficient_list()
        ring = omega.ring
    else:
        coeffs = list(omega)
        ring = coeffs[0].ring
    if ring.nvars != 4:
        raise CatalogError("the classifier works on P^3")
    data = _monomial_data(coeffs)
    if any(d is None for d in data):
        return MonomialClassification("NotDominant")
    F = make_foliation(coeffs, ring)
    dom, _ = is_dominant(RationalMap(F.coefficients))
    if not dom:
        return MonomialClassification("NotDominant")
    data = _monomial_data(F.coefficients)
    # B_i = z_i A_i
    B = []
    for i, (m, v) in enumerate(data):
        e = list(m)
        e[i] += 1
        B.append((tuple(e), v))
    exps = {b[0] for b in B}
    if len(exps) == 1:
        return MonomialClassification("Log1111", residues=tuple(b[1] for b in B))
    for j in (1, 2, 3):
        k, l = [i for i in (1, 2, 3) if i != j]
        if B[0][0] == B[j][0] and B[k][0] == B[l][0] and B[0][1] + B[j][1] == 0 and B[k][1] + B[l][1] == 0:
            break
    else:
        raise CatalogError("coefficients do not split into cancelling pairs")
    diff = [a - b for a, b in zip(B[0][0], B[k][0])]
    P, Pm, Q, Qm = diff[0], diff[j], diff[k], diff[l]
    if P != -Pm or Q != -Qm or any(diff[i] for i in range(4) if i not in (0, j, k, l)):
        raise CatalogError("exponent equations have no solution")
    ratio = B[0][1] / B[k][1]
    u = (0, j) if P >= 0 else (j, 0)
    v = (k, l) if Q <= 0 else (l, k)
    return MonomialClassification("PullbackUV", abs(P) - 1, abs(Q) - 1, (P, Q), ratio, (u, v))


def homaloid_map(F: Polynomial) -> RationalMap:
    grad = F.gradient()
    if not any(g.terms for g in grad):
        raise CatalogError("the gradient vanishes identically")
    return RationalMap(grad)


def homaloid_foliation(F: Polynomial) -> Foliation:
    """Level sets of F/t^deg F with t a new last variable."""
    ring = F.ring.extend(back=("t",))
    d = F.total_degree()
    Fh = F.to_ring(ring)
    t = ring.var(ring.nvars - 1)
    coeffs = [t * g for g in Fh.gradient()[:-1]] + [-Fh.scale(d)]
    return make_foliation(coeffs, meta={"name": "homaloid", "F": str(F)})


_HOMALOIDS = {"conic": "x^2+y^2+z^2", "triangle": "x*y*z", "conic-tangent-line": "y*(x^2+y*z)"}


def tnp_example(lam) -> Foliation:
    lam = as_rational(lam)
    if lam == 0:
        raise CatalogError("the parameter must be nonzero")
    L = str(lam)
    coeffs = _p(P3, "2*x*t*(y*t+x^2-z*t)", "t^2*(y*t+x^2-z*t)", f"({L})*t^2*(y*t+x^2)",
                f"(y*t+2*x^2)*(z*t-y*t-x^2)-({L})*t*z*(t*y+x^2)")
    return make_foliation(coeffs, meta={"name": f"tnp:{L}"})


def tnp_inverse(lam) -> RationalMap:
    L = f"({as_rational(lam)})"
    return _inverse(
        TARGET3,
        f"2*{L}*a*b*c*(({L}-1)*b-c)",
        f"{L}*c*((2-{L})*a^2*b+4*b^2*e+a^2*c)",
        f"b*({L}*a^2+4*{L}*b*e)*(c-{L}*b)",
        f"4*{L}*b^2*c*(({L}-1)*b-c)",
    )


def random_logarithmic(degrees: Sequence[int], seed: int = 0, ring: VarRing = P3,
                       box: int = 9) -> Foliation:
    """Seeded random member of L(p_1, ..., p_k; n) with integer data."""
    degs = [int(p) for p in degrees]
    if len(degs) < 2 or any(p < 1 for p in degs):
        raise CatalogError("need at least two positive degrees")
    rng = random.Random(seed)
    from .gauss import _exponents

    n = ring.nvars
    for _ in range(50):
        fs = []
        for p in degs:
            terms = {e: mpq(rng.randint(-box, box)) for e in _exponents(n, p)}
            fs.append(Polynomial(ring, terms))
        lams = [mpq(rng.choice([i for i in range(-box, box + 1) if i])) for _ in degs[:-1]]
        last = -sum(l * p for l, p in zip(lams, degs)) / degs[-1]
        if last == 0 or any(not f.terms for f in fs):
            continue
        F = logarithmic_foliation(fs, lams + [last])
        if F.degree == sum(degs) - 2:
            F.meta.update({"name": "log:" + ",".join(map(str, degs)), "seed": seed})
            return F
    raise CatalogError("could not draw a generic logarithmic foliation")


def log_formula(degrees: Sequence[int]) -> int:
    p = list(degrees)
    pairs = sum(p[i] * p[j] for i in range(len(p)) for j in range(i + 1, len(p)))
    return sum(x * x for x in p) + pairs - 3 * sum(p) + 3


# ---------------------------------------------------------------------------
# one-off examples


def _linear_field_form(mus: Sequence, ring: VarRing) -> Foliation:
    z = ring.gens()
    prod = ring.one
    for zi in z:
        prod = prod * zi
    coeffs = [prod.divexact(zi).scale(as_rational(m)) for zi, m in zip(z, mus)]
    return make_foliation(coeffs)


def _default_mus(n: int) -> list[int]:
    mus = list(range(1, n + 1))
    return mus + [-sum(mus)]


def _product_inverse(mus: Sequence, target: VarRing) -> RationalMap:
    w = target.gens()
    comps = []
    for j, m in enumerate(mus):
        acc = target.one.scale(as_rational(m))
        for i, wi in enumerate(w):
            if i != j:
                acc = acc * wi
        comps.append(acc)
    return RationalMap(comps, target)


def _ex2(n: int) -> tuple[Foliation, RationalMap]:
    ring = projective_ring(n)
    z = ring.gens()
    q = ring.zero
    for zi in z[1:]:
        q = q + zi * zi
    F = make_foliation([-q] + [z[0] * zi for zi in z[1:]], meta={"name": f"ex2:{n}"})
    G_target = VarRing(tuple(f"w{i}" for i in range(n + 1))) if n > 4 else None
    from .gauss import default_target_names

    target = G_target or VarRing(default_target_names(n + 1))
    y = target.gens()
    qy = target.zero
    for yi in y[1:]:
        qy = qy + yi * yi
    return F, RationalMap([-qy] + [y[0] * yi for yi in y[1:]], target)


def _exn() -> Foliation:
    ring = VarRing(("s", "t", "x", "y", "z"))
    s, t, x, y, z = ring.gens()
    q = x * x + y * y + z * z
    dq = q.gradient()
    coeffs = [s * t * c for c in dq]
    coeffs[0] = coeffs[0] - t * q
    coeffs[1] = coeffs[1] - s * q
    return make_foliation(coeffs, meta={"name": "exn"})


def _fassarella() -> tuple[Foliation, RationalMap]:
    ring = VarRing(("x", "y", "z", "t", "w"))
    f = ring.parse("z^3+y*z*t+x*t^2+t^3")
    w = ring.var(4)
    grad = f.gradient()
    coeffs = [w * g for g in grad[:4]] + [-f.scale(3)]
    F = make_foliation(coeffs, meta={"name": "fassarella"})
    H = _inverse(TARGET4,
                 "f*(e*a^2-b*(c*a-3*b^2)-3*a^3)", "2*f*a*(c*a-3*b^2)", "2*a^2*b*f", "2*a^3*f",
                 "3*a*(b^3-a*b*c+a^3-a^2*e)")
    return F, H


def omega_d(p: int = 3, q: int = 0, r: int = 0, alpha=1, beta=1) -> Foliation:
    """f·y·z·(α df/f + β dy/y + γ dz/z) with αd + β + γ = 0."""
    if p < 2:
        raise CatalogError("p must be at least 2; for p = 1 the form is a linear pull-back")
    d = p + q + r
    x, y, z, t = P3.gens()
    f = y ** q * z ** r * (x * y ** (p - 1) + t ** p) + y ** d + z ** d
    a, b = as_rational(alpha), as_rational(beta)
    c = -(a * d + b)
    grad = f.gradient()
    coeffs = [(y * z * g).scale(a) for g in grad]
    coeffs[1] = coeffs[1] + (f * z).scale(b)
    coeffs[2] = coeffs[2] + (f * y).scale(c)
    return make_foliation(coeffs, meta={"name": f"omega-d:{p},{q},{r}"})


def linear_pullback() -> Foliation:
    """A degree-two foliation of P^2 pulled back along a linear projection P^3 ⇢ P^2."""
    plane = VarRing(("u", "v", "w"))
    X = VectorField(plane, _p(plane, "v^2+u*w", "w^2-u*v", "u^2+2*v*w"))
    eta = contract_volume([radial_field(plane), X], plane).coefficient_list()
    proj = _p(P3, "x+t", "y-2*t", "z+3*t")
    return make_foliation(pullback_form(eta, proj), meta={"name": "linear-pullback"})


def _dg2_last() -> tuple[Foliation, RationalMap]:
    f = P3.parse("x*z^2+y*z*t+y^3")
    z = P3.var(2)
    coeffs = [-(z * g) for g in f.gradient()]
    coeffs[2] = coeffs[2] + f.scale(3)
    F = make_foliation(coeffs, meta={"name": "dg2"})
    H = _inverse(TARGET3, "a^2*c+2*a*b*e-3*e^3", "-a^2*e", "-a^3", "a*(3*e^2-a*b)")
    return F, H


def _exdg3_8() -> Foliation:
    coeffs = _p(P3, "4*x*t*(t*y+x^2)", "2*t^2*(t*y+x^2)", "3*z^2*t^2",
                "-(3*z^3*t+2*(t*y+x^2)*(t*y+2*x^2))")
    return make_foliation(coeffs, meta={"name": "exdg3-8"})


def _exdg3_9() -> Foliation:
    Q = P3.parse("t^2*(x^2+y^2+z^2)+t*(x^3+y^3+z^3)+x^2*(x^2+y*z)")
    t = P3.var(3)
    coeffs = [t * g for g in Q.gradient()]
    coeffs[3] = coeffs[3] - Q.scale(4)
    return make_foliation(coeffs, meta={"name": "exdg3-9"})


# ---------------------------------------------------------------------------
# key registry


def _args(text: str) -> list[str]:
    return [a for a in text.split(",") if a != ""]


def get(key: str, seed: int = 0) -> CatalogItem:
    """Resolve a catalog key."""
    name, _, arg = key.partition(":")
    try:
        return _build(name, arg, seed, key)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, (CatalogError, FoliationError)):
            raise
        raise CatalogError(f"bad catalog key {key!r}: {exc}") from None


def _build(name: str, arg: str, seed: int, key: str) -> CatalogItem:
    if name == "exceptional23":
        f, g = exceptional23_first_integral()
        return CatalogItem(key, exceptional23(), "exceptional foliation of degree two on P^3",
                           _inverse(TARGET3, "c*(a*b-3*c*e)", "c*(3*b*e-2*a^2)", "a^2*b+a*c*e-2*b^2*e",
                                    "c*(2*a*c-b^2)"),
                           exceptional23_components(), 1,
                           {"f": f, "g": g, "p": 2, "q": 3,
                            "factor": P3.parse("t^2*(2*y*t-x^2)*(-3*x^2*y^2+6*x^3*z+8*y^3*t-18*x*y*z*t+9*z^2*t^2)")})
    if name == "boundary":
        return boundary(arg)
    if name == "combiner":
        a = _args(arg) or ["1", "1", "1"]
        return CatalogItem(key, combiner(*[as_rational(s) for s in a]), "weighted sum of boundary pieces")
    if name == "beta-limit":
        return CatalogItem(key, beta_limit(), "limit of the exceptional orbit; linear pull-back", expected_tdg=0)
    if name == "exceptional34":
        f, g = exceptional34_first_integral()
        return CatalogItem(key, exceptional34(), "exceptional foliation of degree three on P^4",
                           exceptional34_inverse(), [], None,
                           {"f": f, "g": g, "p": 3, "q": 4, "h3": P4E.parse("3*x*t^2-3*y*z*t+z^3"),
                            "component_data": [(1, 1), (3, 1), (8, 1)]})
    if name == "family":
        n = int(arg or 5)
        F, f, g = exceptional_family(n)
        return CatalogItem(key, F, f"exceptional family on P^{n}", extra={"f": f, "g": g, "p": n - 1, "q": n})
    if name == "fermat":
        d, n = (int(s) for s in (_args(arg) or ["2", "3"]))
        return CatalogItem(key, fermat(d, n), "Fermat foliation", expected_tdg=d ** (n - 1))
    if name == "fk":
        k = int(arg or 1)
        return CatalogItem(key, fk_family(k), "birational family of degree k+1", fk_inverse(k), expected_tdg=1)
    if name == "magic":
        parts = arg.split(";") if arg else ["1+u^2", "1+u*v"]
        A, B = (UV.parse(s) for s in parts)
        return CatalogItem(key, magic_pullback(A, B), "pull-back along (x/t, y/z)", expected_tdg=1)
    if name == "monomial":
        p, q = (int(s) for s in (_args(arg) or ["1", "1"]))
        return CatalogItem(key, monomial_pullback(p, q), "pull-back of u^p du + v^q dv",
                           monomial_inverse(p, q), expected_tdg=1)
    if name == "log1111":
        lams = [as_rational(s) for s in (_args(arg) or ["1", "2", "3", "-6"])]
        return CatalogItem(key, logarithmic_foliation(list(P3.gens()), lams), "L(1,1,1,1;3)",
                           _product_inverse(lams, TARGET3), expected_tdg=1)
    if name == "homaloid":
        which = arg or "conic-tangent-line"
        if which not in _HOMALOIDS:
            raise CatalogError(f"unknown homaloid {which!r}")
        F = homaloid_foliation(VarRing(("x", "y", "z")).parse(_HOMALOIDS[which]))
        comps = []
        if which == "conic-tangent-line":
            comps = [_component(P3, ["x", "y"], (0, 0, 1, 1), 1, 3, "V1"),
                     _component(P3, ["y", "t"], (1, 0, 1, 0), 1, 1, "V2"),
                     _component(P3, ["t", "x^2+y*z"], (1, -1, 1, 0), 2, 1, "V3")]
        return CatalogItem(key, F, f"level sets of the homaloid {_HOMALOIDS[which]}", components=comps,
                           expected_tdg=1, extra={"homaloid": _HOMALOIDS[which]})
    if name == "tnp":
        lam = as_rational(arg or 2)
        return CatalogItem(key, tnp_example(lam), "pull-back along fibres that are conics",
                           tnp_inverse(lam), expected_tdg=1,
                           extra={"contracted": P3.parse("y*t+x^2-z*t")})
    if name == "ex1":
        mus = [as_rational(s) for s in (_args(arg) or ["1", "2", "-3"])]
        F = _linear_field_form(mus, projective_ring(2))
        return CatalogItem(key, F, "degree one on P^2", _product_inverse(mus, VarRing(("a", "b", "c"))))
    if name == "ex2":
        F, H = _ex2(int(arg or 3))
        return CatalogItem(key, F, "L(2,1;n)", H)
    if name == "ex3":
        n = int(arg or 3)
        mus = _default_mus(n)
        from .gauss import default_target_names

        F = _linear_field_form(mus, projective_ring(n))
        return CatalogItem(key, F, "L(1,...,1;n)", _product_inverse(mus, VarRing(default_target_names(n + 1))))
    if name == "exn":
        return CatalogItem(key, _exn(), "L(1,1,2;4) with self-dual Gauss map")
    if name == "dg2":
        F, H = _dg2_last()
        comps = [_component(P3, ["y", "z"], (1, 0, 0, 1), 1, 6, "V")]
        return CatalogItem(key, F, "L(1,3;3) member with birational Gauss map", H, comps, 1)
    if name == "exdg3-8":
        comps = [_component(P3, ["x", "t"], (0, 1, 1, 0), 1, 7, "V1"),
                 _component(P3, ["z", "y*t+x^2"], (1, -1, 0, 1), 2, 2, "V2")]
        return CatalogItem(key, _exdg3_8(), "degree three, topological degree two", None, comps, 2)
    if name == "exdg3-9":
        comps = [_component(P3, ["t", "x"], (0, 1, 1, 0), 1, 3, "V1"),
                 _component(P3, ["t", "x^2+y*z"], (1, -1, 1, 0), 2, 1, "V2")]
        return CatalogItem(key, _exdg3_9(), "degree three, topological degree eight", None, comps, 8)
    if name == "fassarella":
        F, H = _fassarella()
        return CatalogItem(key, F, "degree two on P^4 with bidegree (3,4)", H)
    if name == "omega-d":
        p, q, r = (int(s) for s in (_args(arg) or ["3", "0", "0"]))
        d = p + q + r
        return CatalogItem(key, omega_d(p, q, r), "topological degree d^2-d", expected_tdg=d * d - d)
    if name == "linear-pullback":
        return CatalogItem(key, linear_pullback(), "linear pull-back from P^2", expected_tdg=0)
    if name == "log":
        degs = [int(s) for s in _args(arg)]
        return CatalogItem(key, random_logarithmic(degs, seed), "seeded random logarithmic foliation",
                           expected_tdg=log_formula(degs), extra={"seed": seed})
    raise CatalogError(f"unknown catalog key {key!r}")


_KEYS = [
    ("exceptional23", "exceptional foliation E(2,3;3)"),
    ("boundary:12|13|23", "boundary foliations of E(2,3;3)"),
    ("combiner:a1,a2,a3", "weighted sum of the three boundary pieces"),
    ("beta-limit", "non-dominant limit in the closure of E(2,3;3)"),
    ("exceptional34", "exceptional foliation E(3,4;4) on P^4"),
    ("family:n", "exceptional family of degree n-1 on P^n, n >= 3"),
    ("fermat:d,n", "Fermat foliation of degree d on P^n"),
    ("fk:k", "first integral ((xz+yt)y^k+x^(k+2))/y^(k+2)"),
    ("magic:A;B", "pull-back of A du + B dv along (x/t, y/z)"),
    ("monomial:p,q", "pull-back of u^p du + v^q dv along (x/y, z/t)"),
    ("log1111:l1,l2,l3,l4", "xyzt * sum l_i dz_i/z_i"),
    ("homaloid:conic|triangle|conic-tangent-line", "level sets of a plane homaloid"),
    ("tnp:lambda", "pull-back of (u-v)du + lambda u dv along (y+x^2, z)"),
    ("ex1:m0,m1,m2", "degree one foliation on P^2"),
    ("ex2:n", "L(2,1;n) with first integral q/z0^2"),
    ("ex3:n", "L(1,...,1;n)"),
    ("exn", "L(1,1,2;4) self-dual example"),
    ("dg2", "3f dz - z df with f = xz^2+yzt+y^3"),
    ("exdg3-8", "first integral (z^3 t + (yt-x^2)^2)/t^4"),
    ("exdg3-9", "first integral Q/t^4"),
    ("fassarella", "w df - 3f dw on P^4"),
    ("omega-d:p,q,r", "degree p+q+r example with tdg d^2-d"),
    ("linear-pullback", "linear pull-back of a foliation on P^2"),
    ("log:p1,...,pk", "seeded random member of L(p1,...,pk;3)"),
]


def keys() -> list[tuple[str, str]]:
    return list(_KEYS)
