"""Validated codimension-one foliations on projective space and their constructions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .exterior import (
    DifferentialForm,
    exact_form,
    exterior_derivative,
    interior_product,
    one_form,
    radial_field,
    wedge,
)
from .groebner import Ideal
from .polyring import (
    Polynomial,
    VarRing,
    as_rational,
    gcd_and_content,
    homogeneity_check,
    parse_polynomial,
)

__all__ = [
    "FoliationError",
    "NotHomogeneous",
    "EulerFails",
    "NotIntegrable",
    "ZeroForm",
    "ResidueConditionViolated",
    "SingularMatrix",
    "Foliation",
    "make_foliation",
    "singular_ideal",
    "invariant_hypersurface",
    "first_integral_cofactor",
    "logarithmic_foliation",
    "pullback_form",
    "pullback_foliation",
    "homogenize_affine_form",
    "restrict_to_linear_subspace",
    "linear_transform",
    "projectively_equal",
    "proportional",
    "foliation_to_json",
    "foliation_from_json",
    "remove_content",
]


class FoliationError(ValueError):
    pass


class NotHomogeneous(FoliationError):
    pass


class EulerFails(FoliationError):
    pass


class NotIntegrable(FoliationError):
    pass


class ZeroForm(FoliationError):
    """The form vanishes identically (e.g. restriction to an invariant subspace)."""


class ResidueConditionViolated(FoliationError):
    pass


class SingularMatrix(FoliationError):
    pass


@dataclass(frozen=True)
class Foliation:
    """An integrable homogeneous 1-form with i_Rω = 0 and content-free coefficients."""

    form: DifferentialForm
    degree: int
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def ring(self) -> VarRing:
        return self.form.ring

    @property
    def ambient(self) -> int:
        return self.form.ring.nvars - 1

    @property
    def coefficients(self) -> list[Polynomial]:
        return self.form.coefficient_list()

    def __str__(self):
        return ", ".join(str(c) for c in self.coefficients)


def remove_content(coeffs: Sequence[Polynomial]) -> list[Polynomial]:
    g, quotients = gcd_and_content(coeffs)
    return quotients


def make_foliation(omega: DifferentialForm | Sequence[Polynomial], ring: VarRing | None = None,
                   meta: dict | None = None) -> Foliation:
    """Validate a 1-form after dividing out the gcd of its coefficients."""
    if not isinstance(omega, DifferentialForm):
        coeffs = list(omega)
        ring = ring or coeffs[0].ring
        omega = one_form(ring, coeffs)
    if omega.degree != 1:
        raise FoliationError("a foliation is given by a 1-form")
    if omega.is_zero():
        raise ZeroForm("the zero form does not define a foliation")
    ring = omega.ring
    coeffs = remove_content(omega.coefficient_list())
    degrees = {homogeneity_check(c) for c in coeffs if c.terms}
    if None in degrees or len(degrees) != 1:
        raise NotHomogeneous("coefficients are not homogeneous of one common degree")
    k = degrees.pop()
    form = one_form(ring, coeffs)
    if interior_product(radial_field(ring), form).coeffs:
        raise EulerFails("i_R(omega) is not zero")
    if not wedge(form, exterior_derivative(form)).is_zero():
        raise NotIntegrable("omega ^ d(omega) is not zero")
    return Foliation(form, k - 1, dict(meta or {}))


def singular_ideal(F: Foliation) -> Ideal:
    return Ideal(F.coefficients, F.ring)


def invariant_hypersurface(F: Foliation, h: Polynomial) -> bool:
    """True when h divides every coefficient of ω ∧ dh."""
    if not h.terms:
        raise FoliationError("h must be nonzero")
    two = wedge(F.form, exact_form(h))
    return all(h.divides(c) for c in two.coeffs.values())


def first_integral_cofactor(F: Foliation, f: Polynomial, p: int, g: Polynomial, q: int) -> Polynomial | None:
    """h with p·g·df − q·f·dg = h·ω, or None when the left side is not a multiple of ω."""
    df_ = homogeneity_check(f)
    dg_ = homogeneity_check(g)
    if df_ is None or dg_ is None:
        raise FoliationError("f and g must be homogeneous")
    if p * df_ != q * dg_:
        raise FoliationError("f^p / g^q must have degree zero")
    lhs = [p * g * a - q * f * b for a, b in zip(f.gradient(), g.gradient())]
    h = None
    for li, wi in zip(lhs, F.coefficients):
        if not wi.terms:
            if li.terms:
                return None
            continue
        quo, rem = li.divmod(wi)
        if rem.terms:
            return None
        if h is None:
            h = quo
        elif quo != h:
            return None
    return h


def logarithmic_foliation(fs: Sequence[Polynomial], lambdas: Sequence, meta: dict | None = None) -> Foliation:
    """Foliation of f_1···f_k Σ λ_j df_j/f_j with denominators cleared."""
    if len(fs) != len(lambdas) or len(fs) < 2:
        raise FoliationError("need at least two polynomials and matching residues")
    lams = [as_rational(l) for l in lambdas]
    if any(l == 0 for l in lams):
        raise ResidueConditionViolated("residues must be nonzero")
    degs = []
    for f in fs:
        d = homogeneity_check(f)
        if d is None:
            raise NotHomogeneous("logarithmic components must be homogeneous")
        degs.append(d)
    if sum(l * d for l, d in zip(lams, degs)) != 0:
        raise ResidueConditionViolated("sum of residue times degree must vanish")
    ring = fs[0].ring
    coeffs = [ring.zero] * ring.nvars
    for j, (f, lam) in enumerate(zip(fs, lams)):
        other = ring.one
        for i, g in enumerate(fs):
            if i != j:
                other = other * g
        factor = other.scale(lam)
        grad = f.gradient()
        coeffs = [c + factor * gi for c, gi in zip(coeffs, grad)]
    info = {"construction": "logarithmic", "degrees": degs, "residues": [str(l) for l in lams]}
    info.update(meta or {})
    return make_foliation(one_form(ring, coeffs), meta=info)


def _components(phi) -> list[Polynomial]:
    return list(getattr(phi, "components", phi))


def pullback_form(coeffs: Sequence[Polynomial], phi) -> list[Polynomial]:
    """Coefficients of Σ A_j(Φ) dΦ_j in the source ring of Φ."""
    comps = _components(phi)
    if len(comps) != len(coeffs):
        raise FoliationError("map target dimension does not match the form")
    src = comps[0].ring
    out = [src.zero] * src.nvars
    for a, phij in zip(coeffs, comps):
        if not a.terms:
            continue
        aj = a.compose(comps)
        if not aj.terms:
            continue
        grad = phij.gradient()
        out = [o + aj * gk for o, gk in zip(out, grad)]
    return out


def pullback_foliation(G: Foliation, phi, meta: dict | None = None) -> Foliation:
    coeffs = pullback_form(G.coefficients, phi)
    if not any(c.terms for c in coeffs):
        raise ZeroForm("the pull-back vanishes identically")
    return make_foliation(coeffs, meta=meta)


def homogenize_affine_form(coeffs: Sequence[Polynomial], ring: VarRing) -> list[Polynomial]:
    """Homogenize Σ P_i du_i on affine n-space to a form on P^n.

    ``coeffs`` live in an affine ring (u_1..u_n); ``ring`` is the homogeneous
    ring whose first n variables correspond to the u_i and whose last variable
    is the homogenizing one.  Content is not removed.
    """
    n = len(coeffs)
    if ring.nvars != n + 1:
        raise FoliationError("homogeneous ring must have one more variable")
    top = max(c.total_degree() for c in coeffs)
    if top < 0:
        raise ZeroForm("zero affine form")
    W = ring.var(ring.nvars - 1)
    U = [ring.var(i) for i in range(n)]

    def hom(p: Polynomial, total: int) -> Polynomial:
        acc = {}
        for m, c in p.terms.items():
            s = sum(m)
            acc[tuple(m) + (total - s,)] = c
        return Polynomial(ring, acc)

    # u_i = U_i/W, du_i = (W dU_i − U_i dW)/W²; multiply through by W^(top+2)
    out = [ring.zero] * (n + 1)
    for i, p in enumerate(coeffs):
        if not p.terms:
            continue
        P = hom(p, top)
        out[i] = out[i] + P * W
        out[n] = out[n] - P * U[i]
    return out


def restrict_to_linear_subspace(F: Foliation, iota, meta: dict | None = None) -> Foliation:
    """Pull ω back along a linear embedding P^k → P^n."""
    comps = _components(iota)
    for c in comps:
        if c.terms and homogeneity_check(c) != 1:
            raise FoliationError("the embedding must be linear")
    src = comps[0].ring
    mat = [[c.terms.get(tuple(1 if k == j else 0 for k in range(src.nvars)), mpq(0))
            for j in range(src.nvars)] for c in comps]
    if _rank(mat) != src.nvars:
        raise FoliationError("the embedding is not injective")
    coeffs = pullback_form(F.coefficients, comps)
    if not any(c.terms for c in coeffs):
        raise ZeroForm("the restriction vanishes identically (invariant subspace)")
    return make_foliation(coeffs, meta=meta)


def _rank(mat) -> int:
    rows = [list(map(mpq, r)) for r in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def linear_transform(F: Foliation, M: Sequence[Sequence], meta: dict | None = None) -> Foliation:
    """Pull back under z ↦ M z."""
    ring = F.ring
    n = ring.nvars
    mat = [[as_rational(v) for v in row] for row in M]
    if len(mat) != n or any(len(r) != n for r in mat):
        raise FoliationError("matrix size does not match the ring")
    if _rank(mat) != n:
        raise SingularMatrix("matrix is not invertible")
    gens = ring.gens()
    comps = []
    for row in mat:
        acc = ring.zero
        for v, z in zip(row, gens):
            if v:
                acc = acc + z.scale(v)
        comps.append(acc)
    return make_foliation(pullback_form(F.coefficients, comps), meta=meta)


def proportional(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> bool:
    """True when the two tuples agree up to a nonzero rational (or polynomial) factor."""
    if len(a) != len(b):
        return False
    if not any(x.terms for x in a) or not any(y.terms for y in b):
        return False
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if (a[i] * b[j] - a[j] * b[i]).terms:
                return False
    return True


def projectively_equal(F: Foliation, G: Foliation) -> bool:
    if F.ring != G.ring:
        raise FoliationError("foliations live in different rings")
    return proportional(F.coefficients, G.coefficients)


def foliation_to_json(F: Foliation) -> dict:
    return {"vars": list(F.ring.names), "coefficients": [str(c) for c in F.coefficients],
            "meta": {**{k: v for k, v in F.meta.items() if _jsonable(v)}, "degree": F.degree}}


def _jsonable(v) -> bool:
    try:
        json.dumps(v)
        return True
    except TypeError:
        return False


def foliation_from_json(data: dict | str) -> Foliation:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        ring = VarRing(tuple(data["vars"]))
        coeffs = [parse_polynomial(s, ring) for s in data["coefficients"]]
    except KeyError as exc:
        raise FoliationError(f"foliation file is missing field {exc}") from None
    if len(coeffs) != ring.nvars:
        raise FoliationError("need one coefficient per variable")
    return make_foliation(coeffs, ring, meta=data.get("meta"))
