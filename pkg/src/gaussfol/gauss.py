"""Gauss maps, birational inversion, contracted divisors and topological degrees."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exterior import one_form
from .foliation import (
    Foliation,
    invariant_hypersurface,
    make_foliation,
    pullback_form,
    proportional,
    remove_content,
    _rank,
)
from .groebner import (
    Budget,
    BudgetExceeded,
    DEGREVLEX,
    Ideal,
    MonomialOrder,
    groebner_basis,
    normal_form,
    projective_degree,
    saturate,
    vector_space_dimension,
)
from .polyring import (
    Polynomial,
    PolynomialError,
    VarRing,
    as_rational,
    determinant,
    gcd,
    homogeneity_check,
    parse_polynomial,
    squarefree_decompose,
)

__all__ = [
    "GaussError",
    "NotDominant",
    "Inconclusive",
    "NonIsolated",
    "WitnessError",
    "OracleFailure",
    "RationalMap",
    "InversionResult",
    "ComponentData",
    "DivisorFactor",
    "OracleReport",
    "default_target_names",
    "gauss_map",
    "jacobian_determinant",
    "is_dominant",
    "compose_maps",
    "scalar_identity_factor",
    "invert_birational",
    "verify_inverse",
    "contracted_divisor",
    "map_bidegree",
    "push_forward",
    "tdg_by_formula",
    "tdg_oracle",
    "tdg_oracle_report",
    "local_multiplicity",
    "transverse_multiplicity",
    "verify_component",
    "map_to_json",
    "map_from_json",
    "component_from_json",
]


class GaussError(ValueError):
    pass


class NotDominant(GaussError):
    pass


class Inconclusive(GaussError):
    pass


class NonIsolated(GaussError):
    pass


class WitnessError(GaussError):
    pass


class OracleFailure(GaussError):
    pass


def default_target_names(k: int) -> tuple[str, ...]:
    if k <= 5:
        return ("a", "b", "c", "e", "f")[:k]
    return tuple(f"w{i}" for i in range(k))


class RationalMap:
    """[Q_0 : ... : Q_m] with homogeneous components of one degree and trivial gcd."""

    def __init__(self, components: Sequence[Polynomial], target: VarRing | Sequence[str] | None = None,
                 normalize: bool = True):
        comps = list(components)
        if not comps:
            raise GaussError("a map needs components")
        src = comps[0].ring
        for c in comps:
            if c.ring != src:
                raise GaussError("components must share one ring")
        if not any(c.terms for c in comps):
            raise GaussError("all components are zero")
        if normalize:
            comps = remove_content(comps)
        degs = {homogeneity_check(c) for c in comps if c.terms}
        if None in degs or len(degs) != 1:
            raise GaussError("components must be homogeneous of one common degree")
        if target is None:
            target = VarRing(default_target_names(len(comps)))
        elif not isinstance(target, VarRing):
            target = VarRing(tuple(target))
        if target.nvars != len(comps):
            raise GaussError("target ring arity does not match the number of components")
        self.source = src
        self.target = target
        self.components = tuple(comps)
        self.degree = degs.pop()

    @property
    def is_square(self) -> bool:
        return self.source.nvars == self.target.nvars

    def __eq__(self, other):
        return (isinstance(other, RationalMap) and self.components == other.components
                and self.target == other.target)

    def __hash__(self):
        return hash((self.components, self.target))

    def proportional_to(self, other: "RationalMap") -> bool:
        return proportional(self.components, other.components)

    def __str__(self):
        return "[" + " : ".join(str(c) for c in self.components) + "]"

    def __repr__(self):
        return f"RationalMap({self})"


@dataclass
class InversionResult:
    inverse: RationalMap
    factor: Polynomial
    chart: tuple[int, int]
    charts_tried: list = field(default_factory=list)
    budget: dict = field(default_factory=dict)


@dataclass
class ComponentData:
    ideal: Ideal
    witness: tuple
    degree: int | None = None
    mu: int | None = None
    name: str = ""


@dataclass(frozen=True)
class DivisorFactor:
    factor: Polynomial
    multiplicity: int
    invariant: bool | None = None


def gauss_map(F: Foliation, target: VarRing | Sequence[str] | None = None) -> RationalMap:
    return RationalMap(F.coefficients, target)


def jacobian_determinant(G: RationalMap) -> Polynomial:
    if not G.is_square:
        raise GaussError("the Jacobian determinant needs a square map")
    n = G.source.nvars
    mat = [[c.diff(j) for j in range(n)] for c in G.components]
    return determinant(mat)


def is_dominant(G: RationalMap) -> tuple[bool, Polynomial]:
    J = jacobian_determinant(G)
    return bool(J.terms), J


def compose_maps(G: RationalMap, H: RationalMap) -> tuple[list[Polynomial], RationalMap]:
    """H ∘ G: substitute the components of G into those of H."""
    if H.source.nvars != len(G.components):
        raise GaussError("arities are not compatible for composition")
    raw = [h.compose(list(G.components)) for h in H.components]
    if not any(r.terms for r in raw):
        raise GaussError("composition vanishes identically")
    return raw, RationalMap(raw, H.target)


def scalar_identity_factor(raw: Sequence[Polynomial]) -> Polynomial | None:
    """f with raw_i = f·z_i for every i, else None."""
    raw = list(raw)
    ring = raw[0].ring
    if len(raw) != ring.nvars:
        return None
    f = None
    for i, r in enumerate(raw):
        zi = ring.var(i)
        q, rem = r.divmod(zi)
        if rem.terms:
            return None
        if f is None:
            f = q
        elif q != f:
            return None
    if f is None or not f.terms:
        return None
    return f


def verify_inverse(G: RationalMap, H: RationalMap) -> Polynomial | None:
    """f with H∘G = f·Id when it holds, else None."""
    try:
        raw, _ = compose_maps(G, H)
    except GaussError:
        return None
    return scalar_identity_factor(raw)


# ---------------------------------------------------------------------------
# inversion by elimination in charts


class _RatFun:
    """num/den in one ring, kept reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial, reduce: bool = True):
        if not den.terms:
            raise ZeroDivisionError("zero denominator")
        if reduce and num.terms and not den.is_constant():
            g = gcd(num, den)
            if not g.is_constant():
                num = num.divexact(g)
                den = den.divexact(g)
        if den.is_constant():
            c = den.constant_value()
            num = num.scale(1 / c)
            den = den.ring.one
        self.num = num
        self.den = den


def _eval_rational(p: Polynomial, subs: dict[int, _RatFun], target: VarRing, tmap: dict[int, int]) -> _RatFun:
    """Evaluate p (variables: solved ones in ``subs`` plus target ones via ``tmap``)."""
    degs = {i: p.degree_in(i) for i in subs}
    den = target.one
    for i, d in degs.items():
        if d > 0:
            den = den * subs[i].den ** d
    num = target.zero
    cache: dict = {}

    def piece(i, e):
        key = (i, e)
        if key not in cache:
            d = degs[i]
            cache[key] = subs[i].num ** e * subs[i].den ** (d - e)
        return cache[key]

    for m, c in p.terms.items():
        tm = [0] * target.nvars
        term = None
        for i, e in enumerate(m):
            if i in subs:
                if degs[i] > 0:
                    f = piece(i, e)
                    term = f if term is None else term * f
            elif e:
                tm[tmap[i]] = e
        base = Polynomial(target, {tuple(tm): c})
        num = num + (base if term is None else base * term)
    return _RatFun(num, den)


def _solve_chart(G: RationalMap, l: int, m: int, budget: Budget) -> RationalMap | None:
    n1 = G.source.nvars
    n = n1 - 1
    src_idx = [j for j in range(n1) if j != l]
    tgt_idx = [i for i in range(n1) if i != m]
    names = ["_w"] + [f"_s{j}" for j in src_idx] + [f"_a{i}" for i in tgt_idx]
    big = VarRing(tuple(names))
    # dehomogenize the components at z_l = 1
    images = []
    for j in range(n1):
        images.append(big.one if j == l else big.var(1 + src_idx.index(j)))
    A = [c.compose(images) for c in G.components]
    if not A[m].terms:
        return None
    gens = [big.var(0) * A[m] - big.one]
    for k, i in enumerate(tgt_idx):
        gens.append(big.var(1 + n + k) * A[m] - A[i])
    order = MonomialOrder("block", ((1, "lex"), (n, "lex"), (None, "degrevlex")))
    gb = groebner_basis(Ideal(gens, big), order, budget)
    if gb.is_unit():
        return None
    target_aff = VarRing(tuple(f"_a{i}" for i in tgt_idx))
    tmap = {1 + n + k: k for k in range(n)}
    solved: dict[int, _RatFun] = {}
    negkey = order.negkey(big.nvars)
    # solve from the smallest source variable upward
    for pos in range(n, 0, -1):
        allowed = set(range(pos, 1 + n)) | set(tmap)
        cands = []
        for g in gb.basis:
            vs = set(g.variables())
            if pos not in vs or not vs <= allowed:
                continue
            if g.degree_in(pos) != 1:
                continue
            cands.append(g)
        cands.sort(key=lambda g: negkey(min(g.terms, key=negkey)), reverse=True)
        value = None
        for g in cands:
            parts = g.coefficients_in(pos)
            c1 = _eval_rational(parts.get(1, big.zero), solved, target_aff, tmap)
            if not c1.num.terms:
                continue
            c0 = _eval_rational(parts.get(0, big.zero), solved, target_aff, tmap)
            value = _RatFun(-c0.num * c1.den, c0.den * c1.num)
            break
        if value is None:
            return None
        solved[pos] = value
    # rehomogenize: a_i = w_i / w_m
    tgt = G.target
    wm = tgt.var(m)

    def homog(p: Polynomial) -> tuple[Polynomial, int]:
        d = p.total_degree()
        acc = {}
        for mono, c in p.terms.items():
            e = [0] * tgt.nvars
            for k, i in enumerate(tgt_idx):
                e[i] = mono[k]
            e[m] = d - sum(mono)
            acc[tuple(e)] = c
        return Polynomial(tgt, acc), d

    fracs: dict[int, tuple[Polynomial, Polynomial]] = {}
    for pos, rf in solved.items():
        j = src_idx[pos - 1]
        num, dn = homog(rf.num)
        den, dd = homog(rf.den)
        if dd > dn:
            num = num * wm ** (dd - dn)
        elif dn > dd:
            den = den * wm ** (dn - dd)
        fracs[j] = (num, den)
    L = tgt.one
    for num, den in fracs.values():
        g = gcd(L, den)
        L = L * den.divexact(g)
    comps = []
    for j in range(n1):
        if j == l:
            comps.append(L)
        else:
            num, den = fracs[j]
            comps.append(num * L.divexact(den))
    return RationalMap(comps, G.source)


def invert_birational(G: RationalMap, charts: Sequence[tuple[int, int]] | tuple[int, int] | None = None,
                      budget: Budget | None = None) -> InversionResult:
    """Inverse of a birational map by chart-wise elimination, verified by composition."""
    if not G.is_square:
        raise GaussError("inversion needs a square map")
    dom, _ = is_dominant(G)
    if not dom:
        raise NotDominant("Jacobian determinant vanishes identically")
    n1 = G.source.nvars
    if charts is None:
        pairs = [(l, m) for l in range(n1 - 1, -1, -1) for m in range(n1 - 1, -1, -1)]
    elif isinstance(charts, tuple) and len(charts) == 2 and isinstance(charts[0], int):
        pairs = [charts]
    else:
        pairs = list(charts)
    budget = budget if budget is not None else Budget()
    tried = []
    exhausted = None
    for l, m in pairs:
        try:
            H = _solve_chart(G, l, m, budget)
        except BudgetExceeded as exc:
            exhausted = exc
            tried.append(((l, m), "budget"))
            break
        if H is None:
            tried.append(((l, m), "no triangular system"))
            continue
        f = verify_inverse(G, H)
        if f is None:
            tried.append(((l, m), "verification failed"))
            continue
        tried.append(((l, m), "ok"))
        return InversionResult(H, f, (l, m), tried, budget.report())
    if exhausted is not None:
        raise exhausted
    raise Inconclusive(f"no chart produced a verified inverse (tried {len(tried)})")


def contracted_divisor(G: RationalMap, H: RationalMap, foliation: Foliation | None = None,
                       factor: Polynomial | None = None) -> list[DivisorFactor]:
    """Squarefree factors of f in H∘G = f·Id, flagged for invariance when a foliation is given."""
    f = factor if factor is not None else verify_inverse(G, H)
    if f is None:
        raise GaussError("H is not an inverse of G")
    out = []
    for fac, mult in squarefree_decompose(f):
        inv = invariant_hypersurface(foliation, fac) if foliation is not None else None
        out.append(DivisorFactor(fac, mult, inv))
    return out


def map_bidegree(G: RationalMap, H: RationalMap, verify: bool = True) -> tuple[int, int]:
    if verify and verify_inverse(G, H) is None:
        raise GaussError("the pair is not mutually inverse")
    return G.degree, H.degree


def push_forward(F: Foliation, G: RationalMap, H: RationalMap) -> Foliation:
    """The dual foliation Σ H_j(w) dw_j on the target space."""
    if H.source != G.target:
        raise GaussError("inverse does not live on the target of G")
    return make_foliation(one_form(H.source, list(H.components)), meta={"construction": "dual"})


# ---------------------------------------------------------------------------
# topological degree


def tdg_by_formula(d: int, comps: Iterable) -> int:
    """d²+d+1 − Σ μ·deg; components are ComponentData or (degree, μ) pairs."""
    total = 0
    for c in comps:
        if isinstance(c, ComponentData):
            if c.degree is None or c.mu is None:
                raise GaussError("component data needs degree and multiplicity")
            deg, mu = c.degree, c.mu
        else:
            deg, mu = c
        total += deg * mu
    bound = d * d + d + 1
    if total > bound:
        raise GaussError(f"component sum {total} exceeds d^2+d+1 = {bound}")
    return bound - total


@dataclass
class OracleReport:
    value: int
    planes: list = field(default_factory=list)
    seed: int | None = None
    budget: dict = field(default_factory=dict)


def _random_matrix(rng: random.Random, rows: int, cols: int) -> list[list[int]]:
    return [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]


def _plane_embedding(ring3: VarRing, mat) -> list[Polynomial]:
    gens = ring3.gens()
    comps = []
    for row in mat:
        acc = ring3.zero
        for v, g in zip(row, gens):
            if v:
                acc = acc + g.scale(v)
        comps.append(acc)
    return comps


def _oracle_plane(F: Foliation, rng: random.Random, budget: Budget, max_retries: int) -> dict:
    ring3 = VarRing(("a", "b", "c"))
    d = F.degree
    n1 = F.ring.nvars
    for attempt in range(max_retries):
        mat = _random_matrix(rng, n1, 3)
        if _rank(mat) != 3:
            continue
        iota = _plane_embedding(ring3, mat)
        coeffs = pullback_form(F.coefficients, iota)
        if not any(c.terms for c in coeffs):
            continue
        eta = remove_content(coeffs)
        if homogeneity_check(next(c for c in eta if c.terms)) != d + 1:
            continue
        J = Ideal(eta, ring3)
        pdJ = projective_degree(J, budget)
        if pdJ.dimension != 0 or pdJ.degree != d * d + d + 1:
            continue
        sing = [a.compose(iota) for a in F.coefficients]
        weights = [rng.randint(-9, 9) or 1 for _ in sing]
        g = ring3.zero
        for wgt, s in zip(weights, sing):
            g = g + s.scale(wgt)
        if not g.terms:
            continue
        sat = saturate(J, g, budget)
        pd = projective_degree(sat, budget)
        return {"matrix": mat, "value": pd.degree, "retries": attempt, "weights": weights}
    raise OracleFailure("no generic plane found within the retry limit")


def tdg_oracle_report(F: Foliation, seed: int = 0, budget: Budget | None = None,
                      max_retries: int = 20) -> OracleReport:
    """Count tangencies of random planes with F away from Sing(F), on two or three planes."""
    if F.ambient != 3:
        raise GaussError("the oracle is implemented for foliations on P^3")
    budget = budget if budget is not None else Budget()
    rng = random.Random(seed)
    planes = [_oracle_plane(F, rng, budget, max_retries) for _ in range(2)]
    if planes[0]["value"] != planes[1]["value"]:
        planes.append(_oracle_plane(F, rng, budget, max_retries))
        vals = [p["value"] for p in planes]
        winner = max(set(vals), key=vals.count)
        if vals.count(winner) < 2:
            raise OracleFailure(f"planes disagree: {vals}")
        value = winner
    else:
        value = planes[0]["value"]
    return OracleReport(value, planes, seed, budget.report())


def tdg_oracle(F: Foliation, seed: int = 0, budget: Budget | None = None) -> int:
    return tdg_oracle_report(F, seed, budget).value


# ---------------------------------------------------------------------------
# multiplicities


def local_multiplicity(A: Polynomial, B: Polynomial, point: Sequence = None,
                       budget: Budget | None = None) -> int:
    """dim of the local algebra of (A, B) at ``point`` via m-adic truncation."""
    ring = A.ring
    if B.ring != ring:
        raise PolynomialError("A and B live in different rings")
    n = ring.nvars
    pt = [as_rational(v) for v in (point if point is not None else [0] * n)]
    if len(pt) != n:
        raise PolynomialError("point arity does not match the ring")
    shift = [g + c for g, c in zip(ring.gens(), pt)]
    A0 = A.compose(shift)
    B0 = B.compose(shift)
    if A0.constant_value() or B0.constant_value():
        return 0
    n_max = max(A.total_degree(), 1) * max(B.total_degree(), 1) + 2
    prev = None
    for N in range(1, n_max + 1):
        mons = [ring.monomial(e) for e in _exponents(n, N)]
        dim = vector_space_dimension(Ideal([A0, B0] + mons, ring), budget)
        if prev is not None and dim == prev:
            return int(dim)
        prev = dim
    raise NonIsolated("local algebra did not stabilize; the point is not isolated")


def _exponents(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for i in range(d, -1, -1):
        for rest in _exponents(n - 1, d - i):
            yield (i,) + rest


def _on_component(V: ComponentData, ring: VarRing) -> bool:
    return all(g.evaluate(V.witness) == 0 for g in V.ideal.generators)


def transverse_multiplicity(F: Foliation, V: ComponentData, trials: int = 3, seed: int = 0,
                            budget: Budget | None = None) -> int:
    """Minimum Milnor number of the restriction to random 2-planes through the witness."""
    ring = F.ring
    p = [as_rational(v) for v in V.witness]
    if len(p) != ring.nvars:
        raise WitnessError("witness arity does not match the ring")
    if not any(p):
        raise WitnessError("witness must be a nonzero vector")
    if not _on_component(V, ring):
        raise WitnessError("witness does not lie on the component")
    if any(c.evaluate(p) for c in F.coefficients):
        raise WitnessError("witness is not a singular point of the foliation")
    rng = random.Random(seed)
    plane = VarRing(("a", "b", "c"))
    aff = VarRing(("a", "b"))
    best = None
    done = 0
    attempts = 0
    while done < trials and attempts < 10 * trials + 10:
        attempts += 1
        u = [rng.randint(-9, 9) for _ in p]
        v = [rng.randint(-9, 9) for _ in p]
        mat = [[u[i], v[i], p[i]] for i in range(len(p))]
        if _rank(mat) != 3:
            continue
        iota = _plane_embedding(plane, mat)
        coeffs = pullback_form(F.coefficients, iota)
        if not any(c.terms for c in coeffs):
            continue
        eta = remove_content(coeffs)
        chart = [aff.var(0), aff.var(1), aff.one]
        A = eta[0].compose(chart)
        B = eta[1].compose(chart)
        if not A.terms and not B.terms:
            continue
        try:
            mu = local_multiplicity(A, B, (0, 0), budget)
        except NonIsolated:
            continue
        done += 1
        best = mu if best is None else min(best, mu)
    if best is None:
        raise GaussError("all plane sections were degenerate")
    return best


def verify_component(F: Foliation, V: ComponentData, budget: Budget | None = None) -> ComponentData:
    """Check that V lies in Sing(F) and fill in a missing degree."""
    gb = V.ideal.groebner(DEGREVLEX, budget)
    for c in F.coefficients:
        if normal_form(c, gb).terms:
            raise GaussError("a coefficient of the form does not vanish on the component")
    if not _on_component(V, F.ring):
        raise WitnessError("witness does not lie on the component")
    deg = V.degree
    if deg is None:
        deg = projective_degree(V.ideal, budget).degree
    return ComponentData(V.ideal, tuple(V.witness), deg, V.mu, V.name)


# ---------------------------------------------------------------------------
# JSON


def map_to_json(G: RationalMap) -> dict:
    return {"vars": list(G.source.names), "components": [str(c) for c in G.components],
            "target_vars": list(G.target.names)}


def map_from_json(data: dict | str) -> RationalMap:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        ring = VarRing(tuple(data["vars"]))
        comps = [parse_polynomial(s, ring) for s in data["components"]]
    except KeyError as exc:
        raise GaussError(f"map file is missing field {exc}") from None
    return RationalMap(comps, data.get("target_vars"))


def component_from_json(data: dict | str, ring: VarRing) -> ComponentData:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        gens = [parse_polynomial(s, ring) for s in data["generators"]]
        witness = tuple(as_rational(v) for v in data["witness"])
    except KeyError as exc:
        raise GaussError(f"component file is missing field {exc}") from None
    return ComponentData(Ideal(gens, ring), witness, data.get("degree"), data.get("mu"),
                         data.get("name", ""))
