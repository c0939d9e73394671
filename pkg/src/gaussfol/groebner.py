"""Buchberger's algorithm and the ideal-theoretic tools built on it.

Internally a basis element is kept monic with its leading monomial split
off from the tail; reduction is driven by a max-heap on order keys.  Every
order is encoded as a flat integer key so that negating the key gives a
heap-compatible priority.
"""

from __future__ import annotations

import heapq
import operator
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq

from .polyring import Polynomial, PolynomialError, VarRing, homogeneity_check

__all__ = [
    "MonomialOrder",
    "Budget",
    "BudgetExceeded",
    "Ideal",
    "GroebnerBasis",
    "groebner_basis",
    "normal_form",
    "ideal_membership",
    "elimination_ideal",
    "colon_ideal",
    "saturate",
    "intersect",
    "vector_space_dimension",
    "projective_degree",
    "ProjectiveDegree",
    "hilbert_numerator",
    "krull_dimension",
    "INFINITE",
]

INFINITE = float("inf")
_add = operator.add
_sub = operator.sub


class BudgetExceeded(RuntimeError):
    """Raised when a Gröbner computation passes its configured resource limit."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"Groebner budget exceeded: {what} > {limit}")
        self.what = what
        self.limit = limit


@dataclass
class Budget:
    """Step limits shared across one or several Gröbner computations."""

    max_reductions: int | None = 20_000_000
    max_basis: int | None = 20_000
    reductions: int = 0
    pairs: int = 0

    def charge(self, n: int = 1):
        self.reductions += n
        if self.max_reductions is not None and self.reductions > self.max_reductions:
            raise BudgetExceeded("reduction steps", self.max_reductions)

    def check_basis(self, size: int):
        if self.max_basis is not None and size > self.max_basis:
            raise BudgetExceeded("basis size", self.max_basis)

    def report(self) -> dict:
        return {"reductions": self.reductions, "pairs": self.pairs,
                "max_reductions": self.max_reductions, "max_basis": self.max_basis}


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """lex, degrevlex, or a block order given as consecutive (size, kind) blocks.

    Blocks compare left to right; a block of size ``None`` takes the
    remaining variables.
    """

    kind: str
    blocks: tuple = ()

    @staticmethod
    def lex() -> "MonomialOrder":
        return MonomialOrder("lex")

    @staticmethod
    def degrevlex() -> "MonomialOrder":
        return MonomialOrder("degrevlex")

    @staticmethod
    def block(split: int, left: "MonomialOrder | str" = "degrevlex",
              right: "MonomialOrder | str" = "degrevlex") -> "MonomialOrder":
        if split <= 0:
            raise PolynomialError("block split index must be positive")
        left = left if isinstance(left, MonomialOrder) else MonomialOrder(left)
        right = right if isinstance(right, MonomialOrder) else MonomialOrder(right)
        if left.kind == "block":
            raise PolynomialError("left block must be lex or degrevlex")
        rest = right.blocks if right.kind == "block" else ((None, right.kind),)
        return MonomialOrder("block", ((split, left.kind),) + tuple(rest))

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex", "block"):
            raise PolynomialError(f"unknown monomial order {self.kind!r}")

    def _resolved_blocks(self, nvars: int) -> list[tuple[int, int, str]]:
        if self.kind != "block":
            return [(0, nvars, self.kind)]
        out = []
        start = 0
        for size, kind in self.blocks:
            stop = nvars if size is None else start + size
            if stop > nvars or stop <= start:
                raise PolynomialError("block order does not fit the ring")
            out.append((start, stop, kind))
            start = stop
        if start != nvars:
            raise PolynomialError("block order does not cover every variable")
        if len(out) > 1 and out[0][1] >= nvars:
            raise PolynomialError("block split index must lie strictly inside the variable range")
        return out

    def negkey(self, nvars: int) -> Callable[[tuple], tuple]:
        """Function m -> flat int tuple, smaller meaning larger in the order."""
        blocks = self._resolved_blocks(nvars)
        if len(blocks) == 1:
            kind = blocks[0][2]
            if kind == "lex":
                return lambda m: tuple([-e for e in m])
            return lambda m: (-sum(m),) + m[::-1]

        def key(m):
            out = []
            for a, b, kind in blocks:
                part = m[a:b]
                if kind == "lex":
                    out.extend(-e for e in part)
                else:
                    out.append(-sum(part))
                    out.extend(part[::-1])
            return tuple(out)

        return key

    def sort_key(self, nvars: int) -> Callable[[tuple], tuple]:
        """Key with larger meaning larger in the order."""
        nk = self.negkey(nvars)
        return lambda m: tuple([-v for v in nk(m)])

    def is_degree_compatible(self) -> bool:
        return self.kind == "degrevlex"

    def __str__(self):
        if self.kind != "block":
            return self.kind
        return "block(" + ",".join(f"{k}:{s if s is not None else '*'}" for s, k in self.blocks) + ")"


DEGREVLEX = MonomialOrder.degrevlex()


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """Ideal given by generators in one ring."""

    def __init__(self, generators: Iterable[Polynomial], ring: VarRing | None = None):
        gens = list(generators)
        if ring is None:
            if not gens:
                raise PolynomialError("an ideal needs a ring or at least one generator")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise PolynomialError("all generators must share one ring")
        self.ring = ring
        self.generators = [g for g in gens if g.terms]
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(homogeneity_check(g) is not None for g in self.generators)

    def groebner(self, order: MonomialOrder = DEGREVLEX, budget: Budget | None = None) -> "GroebnerBasis":
        gb = self._gb.get(order)
        if gb is None:
            gb = groebner_basis(self, order, budget)
            self._gb[order] = gb
        return gb

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.generators + other.generators, self.ring)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal([a * b for a in self.generators for b in other.generators], self.ring)

    def contains(self, p: Polynomial, budget: Budget | None = None) -> bool:
        return ideal_membership(p, self, radical=False, budget=budget)

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]})"


class GroebnerBasis:
    """Reduced Gröbner basis: monic, pairwise reduced, sorted by leading monomial."""

    def __init__(self, ring: VarRing, order: MonomialOrder, basis: list[Polynomial],
                 budget: Budget | None = None):
        self.ring = ring
        self.order = order
        self.basis = basis
        self.budget = budget
        nk = order.negkey(ring.nvars)
        self._negkey = nk
        self.leading_monomials = [min(p.terms, key=nk) for p in basis]

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return not normal_form(p, self).terms

    def ideal(self) -> Ideal:
        return Ideal(self.basis, self.ring)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.order == other.order and set(self.basis) == set(other.basis))

    def __repr__(self):
        return f"GroebnerBasis({self.order}, {[str(g) for g in self.basis]})"


# ---------------------------------------------------------------------------
# Buchberger core


class _Elt:
    __slots__ = ("lm", "tail", "mask", "sugar", "deg")

    def __init__(self, lm, tail, sugar):
        self.lm = lm
        self.tail = tail
        self.mask = _mask(lm)
        self.sugar = sugar
        self.deg = sum(lm)


def _mask(m) -> int:
    bits = 0
    for i, e in enumerate(m):
        if e:
            bits |= 1 << i
    return bits


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


class _Engine:
    def __init__(self, nvars: int, order: MonomialOrder, budget: Budget):
        self.n = nvars
        self.negkey = order.negkey(nvars)
        self.sortkey = order.sort_key(nvars)
        self.budget = budget
        self.elts: list[_Elt] = []
        self.active: list[int] = []
        # sugar misleads on orders that ignore degree; pick the smallest lcm instead
        self.normal_selection = order.kind == "lex"

    def reducers(self) -> list[_Elt]:
        # trying small leading monomials first keeps lex reductions short
        elts = [self.elts[g] for g in self.active]
        if self.normal_selection:
            elts.sort(key=lambda e: self.negkey(e.lm), reverse=True)
        return elts

    def make(self, terms: dict, sugar: int) -> _Elt | None:
        if not terms:
            return None
        lm = min(terms, key=self.negkey)
        lc = terms[lm]
        inv = 1 / lc
        tail = [(m, c * inv) for m, c in terms.items() if m != lm]
        tail.sort(key=lambda mc: self.negkey(mc[0]))
        return _Elt(lm, tail, sugar)

    def find_reducer(self, m, mm, reducers):
        for e in reducers:
            if e.mask & ~mm:
                continue
            if _divides(e.lm, m):
                return e
        return None

    def reduce(self, terms: dict, reducers: list[_Elt], full: bool = True) -> dict:
        """Reduce the term dict (mutated) modulo ``reducers``; returns the remainder."""
        negkey = self.negkey
        heap = [(negkey(m), m) for m in terms]
        heapq.heapify(heap)
        rem: dict = {}
        charge = self.budget.charge
        push = heapq.heappush
        pop = heapq.heappop
        while heap:
            _, m = pop(heap)
            c = terms.pop(m, None)
            if c is None:
                continue
            red = self.find_reducer(m, _mask(m), reducers)
            if red is None:
                rem[m] = c
                if not full:
                    # keep the rest untouched once the head is irreducible
                    rem.update(terms)
                    return rem
                continue
            charge()
            shift = tuple(map(_sub, m, red.lm))
            for gm, gc in red.tail:
                t = tuple(map(_add, gm, shift))
                v = terms.get(t)
                if v is None:
                    terms[t] = -c * gc
                    push(heap, (negkey(t), t))
                else:
                    v = v - c * gc
                    if v:
                        terms[t] = v
                    else:
                        del terms[t]
        return rem

    def spoly(self, i: int, j: int) -> tuple[dict, int]:
        a, b = self.elts[i], self.elts[j]
        lcm = _lcm(a.lm, b.lm)
        sa = tuple(map(_sub, lcm, a.lm))
        sb = tuple(map(_sub, lcm, b.lm))
        terms: dict = {}
        for m, c in a.tail:
            terms[tuple(map(_add, m, sa))] = c
        for m, c in b.tail:
            t = tuple(map(_add, m, sb))
            v = terms.get(t)
            if v is None:
                terms[t] = -c
            else:
                v = v - c
                if v:
                    terms[t] = v
                else:
                    del terms[t]
        sugar = max(a.sugar + sum(sa), b.sugar + sum(sb))
        return terms, sugar


def _buchberger(eng: _Engine, inputs: list[tuple[dict, int]]) -> list[_Elt]:
    """Run Buchberger with the Gebauer-Moeller criteria and sugar selection."""
    budget = eng.budget
    pairs: list = []  # heap of (sugar, sortkey(lcm), i, j): smallest lcm first
    negkey = eng.negkey

    def update(h: int):
        eh = eng.elts[h]
        hl = eh.lm
        # new pairs (h, g) for g in the active set
        cand = []
        for g in eng.active:
            lcm = _lcm(eng.elts[g].lm, hl)
            cand.append((g, lcm))
        keep = []
        for idx, (g, lcm) in enumerate(cand):
            coprime = all(not (x and y) for x, y in zip(eng.elts[g].lm, hl))
            if coprime:
                keep.append((g, lcm, True))
                continue
            dominated = False
            for jdx, (g2, lcm2) in enumerate(cand):
                if jdx == idx:
                    continue
                if _divides(lcm2, lcm) and (lcm2 != lcm or jdx < idx):
                    dominated = True
                    break
            if not dominated:
                keep.append((g, lcm, False))
        # chain criterion on existing pairs
        new_heap = []
        for entry in pairs:
            _, _, i, j = entry
            lij = _lcm(eng.elts[i].lm, eng.elts[j].lm)
            if _divides(hl, lij) and _lcm(eng.elts[i].lm, hl) != lij and _lcm(eng.elts[j].lm, hl) != lij:
                continue
            new_heap.append(entry)
        pairs[:] = new_heap
        heapq.heapify(pairs)
        for g, lcm, coprime in keep:
            if coprime:
                continue
            eg = eng.elts[g]
            if eng.normal_selection:
                sugar = 0
            else:
                sugar = max(eg.sugar + sum(lcm) - eg.deg, eh.sugar + sum(lcm) - eh.deg)
            heapq.heappush(pairs, (sugar, eng.sortkey(lcm), min(g, h), max(g, h)))
        eng.active = [g for g in eng.active if not _divides(hl, eng.elts[g].lm)] + [h]
        budget.check_basis(len(eng.active))

    # seed: reduce inputs against one another in increasing order
    inputs = sorted(inputs, key=lambda ts: (ts[1], eng.sortkey(min(ts[0], key=negkey))))
    for terms, sugar in inputs:
        reducers = [eng.elts[g] for g in eng.active]
        rem = eng.reduce(dict(terms), reducers)
        e = eng.make(rem, sugar)
        if e is None:
            continue
        eng.elts.append(e)
        if not any(e.lm):
            eng.active = [len(eng.elts) - 1]
            return [e]
        update(len(eng.elts) - 1)

    while pairs:
        sugar, _, i, j = heapq.heappop(pairs)
        budget.pairs += 1
        terms, s = eng.spoly(i, j)
        reducers = eng.reducers()
        rem = eng.reduce(terms, reducers)
        e = eng.make(rem, s)
        if e is None:
            continue
        eng.elts.append(e)
        if not any(e.lm):
            eng.active = [len(eng.elts) - 1]
            return [e]
        update(len(eng.elts) - 1)
    return [eng.elts[g] for g in eng.active]


def _interreduce(eng: _Engine, elts: list[_Elt]) -> list[dict]:
    negkey = eng.negkey
    # minimal basis: drop elements whose lm is divisible by another lm
    elts = sorted(elts, key=lambda e: negkey(e.lm), reverse=True)
    minimal: list[_Elt] = []
    for e in elts:
        if not any(_divides(f.lm, e.lm) for f in minimal):
            minimal = [f for f in minimal if not _divides(e.lm, f.lm)] + [e]
    out = []
    for e in minimal:
        others = [f for f in minimal if f is not e]
        tail = eng.reduce(dict(e.tail), others)
        tail[e.lm] = mpq(1)
        out.append(tail)
    out.sort(key=lambda t: negkey(min(t, key=negkey)))
    return out


def groebner_basis(I: Ideal, order: MonomialOrder = DEGREVLEX, budget: Budget | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of ``I`` under ``order``."""
    budget = budget if budget is not None else Budget()
    ring = I.ring
    if not I.generators:
        return GroebnerBasis(ring, order, [], budget)
    eng = _Engine(ring.nvars, order, budget)
    inputs = [(dict(g.terms), g.total_degree()) for g in I.generators]
    elts = _buchberger(eng, inputs)
    if len(elts) == 1 and not any(elts[0].lm):
        return GroebnerBasis(ring, order, [ring.one], budget)
    reduced = _interreduce(eng, elts)
    return GroebnerBasis(ring, order, [Polynomial(ring, t) for t in reduced], budget)


def _reducers_of(G: GroebnerBasis) -> tuple[_Engine, list[_Elt]]:
    eng = _Engine(G.ring.nvars, G.order, G.budget or Budget(max_reductions=None))
    elts = [eng.make(dict(p.terms), p.total_degree()) for p in G.basis]
    return eng, elts


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of ``p`` modulo the basis."""
    if p.ring != G.ring:
        raise PolynomialError("polynomial and basis live in different rings")
    if not p.terms or not G.basis:
        return p
    eng, elts = _reducers_of(G)
    return Polynomial(G.ring, eng.reduce(dict(p.terms), elts))


def ideal_membership(p: Polynomial, I: Ideal, radical: bool = False,
                     budget: Budget | None = None) -> bool:
    """Plain membership via normal form, or radical membership via 1 ∈ I + (1 - w p)."""
    if p.ring != I.ring:
        raise PolynomialError("polynomial and ideal live in different rings")
    if not radical:
        if not p.terms:
            return True
        return normal_form(p, I.groebner(DEGREVLEX, budget)).is_zero()
    if not p.terms:
        return True
    wname = _fresh_name(I.ring, "w")
    big = I.ring.extend(back=[wname])
    w = big.var(wname)
    gens = [g.to_ring(big) for g in I.generators] + [big.one - w * p.to_ring(big)]
    gb = groebner_basis(Ideal(gens, big), DEGREVLEX, budget)
    return gb.is_unit()


def _fresh_name(ring: VarRing, stem: str) -> str:
    name = stem
    k = 0
    while name in ring.names:
        k += 1
        name = f"{stem}{k}"
    return name


# ---------------------------------------------------------------------------
# elimination, colon, saturation


def elimination_ideal(I: Ideal, keep: Sequence[str], budget: Budget | None = None,
                      order: MonomialOrder | None = None) -> Ideal:
    """I ∩ Q[keep]; ``keep`` must be a suffix of the ring's variables."""
    names = I.ring.names
    keep = tuple(keep)
    if not keep:
        raise PolynomialError("keep at least one variable")
    if names[len(names) - len(keep):] != keep:
        raise PolynomialError("kept variables must form a suffix of the ring variables")
    sub = VarRing(keep)
    k = len(names) - len(keep)
    if k == 0:
        return Ideal(list(I.generators), sub)
    if order is None:
        order = MonomialOrder.block(k, "degrevlex", "degrevlex")
    gb = groebner_basis(I, order, budget)
    gens = [g.to_ring(sub) for g in gb.basis if not any(any(m[:k]) for m in g.terms)]
    return Ideal(gens, sub)


def intersect(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """I ∩ J via elimination of t from t·I + (1 − t)·J."""
    if I.ring != J.ring:
        raise PolynomialError("ideals live in different rings")
    if I.is_zero() or J.is_zero():
        return Ideal([], I.ring)
    tname = _fresh_name(I.ring, "t_")
    big = I.ring.extend(front=[tname])
    t = big.var(tname)
    gens = [t * g.to_ring(big) for g in I.generators]
    gens += [(big.one - t) * g.to_ring(big) for g in J.generators]
    return elimination_ideal(Ideal(gens, big), I.ring.names, budget)


def colon_ideal(I: Ideal, f: Polynomial, budget: Budget | None = None) -> Ideal:
    """I : f for a single polynomial f."""
    if not f.terms:
        return Ideal([I.ring.one], I.ring)
    if f.is_constant():
        return Ideal(list(I.generators), I.ring)
    inter = intersect(I, Ideal([f], I.ring), budget)
    return Ideal([g.divexact(f) for g in inter.generators], I.ring)


def _same_ideal(gb1: GroebnerBasis, gb2: GroebnerBasis) -> bool:
    return set(gb1.basis) == set(gb2.basis)


def saturate(I: Ideal, J: Ideal | Polynomial, budget: Budget | None = None) -> Ideal:
    """I : J^∞ by iterated colons; non-principal J intersects the saturations by each generator."""
    if isinstance(J, Polynomial):
        J = Ideal([J], I.ring)
    if J.ring != I.ring:
        raise PolynomialError("ideals live in different rings")
    gens = J.generators
    if not gens:
        return Ideal(list(I.generators), I.ring)
    if len(gens) == 1:
        return _saturate_principal(I, gens[0], budget)
    result = None
    for g in gens:
        s = _saturate_principal(I, g, budget)
        result = s if result is None else intersect(result, s, budget)
    return result


def _saturate_principal(I: Ideal, f: Polynomial, budget: Budget | None) -> Ideal:
    if f.is_constant():
        return Ideal(list(I.generators), I.ring)
    current = Ideal(I.groebner(DEGREVLEX, budget).basis, I.ring)
    current_gb = current.groebner(DEGREVLEX, budget)
    while True:
        if current_gb.is_unit():
            return current
        nxt = colon_ideal(current, f, budget)
        nxt_gb = nxt.groebner(DEGREVLEX, budget)
        if _same_ideal(current_gb, nxt_gb):
            return Ideal(nxt_gb.basis, I.ring)
        current, current_gb = Ideal(nxt_gb.basis, I.ring), nxt_gb


# ---------------------------------------------------------------------------
# counting


def vector_space_dimension(I: Ideal, budget: Budget | None = None) -> int | float:
    """dim_Q of Q[vars]/I from the degrevlex staircase; ``INFINITE`` when not finite."""
    n = I.ring.nvars
    if I.is_zero():
        return INFINITE
    gb = I.groebner(DEGREVLEX, budget)
    if gb.is_unit():
        return 0
    lms = gb.leading_monomials
    bounds = [None] * n
    for m in lms:
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) == 1:
            i = nz[0]
            bounds[i] = m[i] if bounds[i] is None else min(bounds[i], m[i])
    if any(b is None for b in bounds):
        return INFINITE
    return _count_standard(lms, bounds)


def _count_standard(lms, bounds) -> int:
    n = len(bounds)
    count = 0
    # depth-first over the box, pruning once a prefix is already divisible
    def rec(i, prefix):
        nonlocal count
        if i == n:
            count += 1
            return
        for e in range(bounds[i]):
            cur = prefix + (e,)
            dead = False
            for m in lms:
                if all(m[k] <= cur[k] for k in range(i + 1)) and not any(m[k] for k in range(i + 1, n)):
                    dead = True
                    break
            if dead:
                break
            rec(i + 1, cur)

    rec(0, ())
    return count


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _minimalize(mons: list[tuple]) -> list[tuple]:
    mons = sorted(set(mons), key=sum)
    out: list[tuple] = []
    for m in mons:
        if not any(_divides(o, m) for o in out):
            out.append(m)
    return out


def hilbert_numerator(monomials: Sequence[tuple]) -> list[int]:
    """Numerator K(t) of the Hilbert series K(t)/(1−t)^n of Q[x]/(monomials)."""
    return _hn(_minimalize(list(monomials)))


def _hn(mons: list[tuple]) -> list[int]:
    if not mons:
        return [1]
    # all generators pure powers in distinct variables: product formula
    if all(sum(1 for e in m if e) == 1 for m in mons):
        vars_seen = set()
        simple = True
        for m in mons:
            i = next(k for k, e in enumerate(m) if e)
            if i in vars_seen:
                simple = False
                break
            vars_seen.add(i)
        if simple:
            out = [1]
            for m in mons:
                d = sum(m)
                out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
            return out
    # split on the last generator: K(I) = K(I') − t^deg(m) K(I' : m)
    if len(mons) == 1:
        d = sum(mons[0])
        return [1] + [0] * (d - 1) + [-1]
    pivot = max(mons, key=sum)
    rest = [m for m in mons if m is not pivot]
    quot = _minimalize([tuple(max(a - b, 0) for a, b in zip(m, pivot)) for m in rest])
    k1 = _hn(rest)
    k2 = _hn(quot)
    shifted = [0] * sum(pivot) + k2
    return _poly_sub(k1, shifted)


@dataclass(frozen=True)
class ProjectiveDegree:
    degree: int
    dimension: int  # projective dimension; -1 for the empty scheme
    empty: bool


def krull_dimension(I: Ideal, budget: Budget | None = None) -> int:
    """Krull dimension of Q[vars]/I (−1 for the unit ideal)."""
    gb = I.groebner(DEGREVLEX, budget)
    if gb.is_unit():
        return -1
    num = hilbert_numerator(gb.leading_monomials)
    n = I.ring.nvars
    k = 0
    while k < n and sum(num) == 0:
        num = _divide_one_minus_t(num)
        k += 1
    return n - k


def _divide_one_minus_t(num: list[int]) -> list[int]:
    # synthetic division by (1 − t), exact when num(1) == 0
    out = []
    acc = 0
    for c in num[:-1]:
        acc += c
        out.append(acc)
    return out or [0]


def projective_degree(I: Ideal, budget: Budget | None = None) -> ProjectiveDegree:
    """Degree and dimension of the projective scheme of a homogeneous ideal."""
    if not I.is_homogeneous():
        raise PolynomialError("projective_degree needs a homogeneous ideal")
    n = I.ring.nvars
    if I.is_zero():
        return ProjectiveDegree(1, n - 1, False)
    gb = I.groebner(DEGREVLEX, budget)
    if gb.is_unit():
        return ProjectiveDegree(0, -1, True)
    num = hilbert_numerator(gb.leading_monomials)
    k = 0
    while k < n and sum(num) == 0:
        num = _divide_one_minus_t(num)
        k += 1
    affine_dim = n - k
    if affine_dim == 0:
        return ProjectiveDegree(0, -1, True)
    return ProjectiveDegree(sum(num), affine_dim - 1, False)
