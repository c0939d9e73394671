"""Sparse exact multivariate polynomials over the rationals.

A :class:`Polynomial` is a map from exponent tuples to ``gmpy2.mpq``
coefficients, living in a :class:`VarRing` of named variables.  Values are
treated as immutable once built.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq, mpz

__all__ = [
    "VarRing",
    "Polynomial",
    "PolynomialError",
    "ParseError",
    "RingMismatch",
    "as_rational",
    "parse_polynomial",
    "gcd",
    "gcd_and_content",
    "lcm",
    "squarefree_decompose",
    "homogeneity_check",
    "evaluate",
    "substitute",
    "determinant",
]

ZERO = mpq(0)
ONE = mpq(1)


class PolynomialError(ValueError):
    pass


class RingMismatch(PolynomialError):
    pass


class ParseError(PolynomialError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def as_rational(value) -> mpq:
    """Coerce ints, strings like ``"3/4"``, Fractions and mpq to ``mpq``."""
    if isinstance(value, type(ONE)):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        value = value.strip()
        if "/" in value:
            num, den = value.split("/")
            return mpq(int(num), int(den))
        return mpq(int(value))
    if isinstance(value, float):
        raise PolynomialError("floating-point coefficients are not supported")
    return mpq(value)


@dataclass(frozen=True)
class VarRing:
    """Polynomial ring Q[v_1, ..., v_k] identified by its variable names."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise PolynomialError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise PolynomialError(f"duplicate variable names in {names}")

    @classmethod
    def of(cls, names: str | Iterable[str]) -> "VarRing":
        if isinstance(names, str):
            names = [n for n in re.split(r"[\s,]+", names) if n]
        return cls(tuple(names))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PolynomialError(f"unknown variable {name!r} in ring {self.names}") from None

    def var(self, name: str | int) -> "Polynomial":
        i = name if isinstance(name, int) else self.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): ONE})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def const(self, c) -> "Polynomial":
        c = as_rational(c)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial.from_terms(self, {tuple(exps): as_rational(coeff)})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def extend(self, front: Sequence[str] = (), back: Sequence[str] = ()) -> "VarRing":
        return VarRing(tuple(front) + self.names + tuple(back))

    def __str__(self):
        return "Q[" + ",".join(self.names) + "]"


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


class Polynomial:
    """Sparse polynomial with rational coefficients.

    ``terms`` maps exponent tuples to nonzero ``mpq`` coefficients.  Use
    :meth:`from_terms` when the dictionary may contain zeros or non-mpq
    values; the plain constructor trusts its input.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: VarRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_terms(cls, ring: VarRing, terms: Mapping) -> "Polynomial":
        clean = {}
        n = ring.nvars
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != n:
                raise PolynomialError(f"monomial {m} has wrong arity for {ring}")
            if any(e < 0 for e in m):
                raise PolynomialError(f"negative exponent in {m}")
            c = as_rational(c)
            if c:
                clean[m] = clean.get(m, ZERO) + c
                if not clean[m]:
                    del clean[m]
        return cls(ring, clean)

    # -- basic predicates -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> mpq:
        return self.terms.get((0,) * self.ring.nvars, ZERO)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, type(ONE))):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = -c
            else:
                v = v - c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        c = as_rational(c)
        if not c:
            return self.ring.zero
        if c == 1:
            return self
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        add = operator.add
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(map(add, ma, mb))
                v = get(m)
                if v is None:
                    out[m] = ca * cb
                else:
                    out[m] = v + ca * cb
        return Polynomial(self.ring, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolynomialError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            return self.divexact(other)
        c = as_rational(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / c)

    def mul_monomial(self, exps: Sequence[int], c=ONE) -> "Polynomial":
        add = operator.add
        return Polynomial(self.ring, {tuple(map(add, m, exps)): v * c for m, v in self.terms.items()})

    # -- degrees and structure --------------------------------------------
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, var: str | int) -> int:
        i = var if isinstance(var, int) else self.ring.index(var)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def variables(self) -> list[int]:
        """Indices of the variables that occur."""
        seen = [False] * self.ring.nvars
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    seen[i] = True
        return [i for i, s in enumerate(seen) if s]

    def coefficients_in(self, var: str | int) -> dict[int, "Polynomial"]:
        """Split as sum_k c_k * var^k; the c_k do not involve ``var``."""
        i = var if isinstance(var, int) else self.ring.index(var)
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            k = m[i]
            parts.setdefault(k, {})[m[:i] + (0,) + m[i + 1:]] = c
        return {k: Polynomial(self.ring, t) for k, t in parts.items()}

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {k: Polynomial(self.ring, t) for k, t in parts.items()}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], mpq]]:
        """Terms in descending graded-reverse-lex order."""
        return sorted(self.terms.items(), key=lambda mc: _grevlex_key(mc[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise PolynomialError("zero polynomial has no leading term")
        m = max(self.terms, key=_grevlex_key)
        return m, self.terms[m]

    def leading_coefficient(self) -> mpq:
        return self.leading_term()[1] if self.terms else ZERO

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def content(self) -> mpq:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return ZERO
        num = mpz(0)
        den = mpz(1)
        for c in self.terms.values():
            num = _gcd_z(num, c.numerator)
            den = den * c.denominator // _gcd_z(den, c.denominator)
        return mpq(num, den)

    def primitive(self) -> "Polynomial":
        """Integer coefficients with gcd 1 and positive grevlex-leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(1 / c)

    def is_homogeneous(self) -> bool:
        return homogeneity_check(self) is not None

    def diff(self, var: str | int) -> "Polynomial":
        i = var if isinstance(var, int) else self.ring.index(var)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Polynomial(self.ring, out)

    def gradient(self) -> list["Polynomial"]:
        return [self.diff(i) for i in range(self.ring.nvars)]

    # -- division ---------------------------------------------------------
    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Multivariate division by a single polynomial (grevlex leading terms)."""
        divisor = self._coerce(divisor)
        if not divisor.terms:
            raise ZeroDivisionError("polynomial division by zero")
        lm, lc = divisor.leading_term()
        rest = [(m, c) for m, c in divisor.terms.items() if m != lm]
        rem = dict(self.terms)
        quo: dict = {}
        out_rem: dict = {}
        sub = operator.sub
        add = operator.add
        while rem:
            m = max(rem, key=_grevlex_key)
            c = rem.pop(m)
            if all(a >= b for a, b in zip(m, lm)):
                shift = tuple(map(sub, m, lm))
                q = c / lc
                quo[shift] = quo.get(shift, ZERO) + q
                for dm, dc in rest:
                    t = tuple(map(add, dm, shift))
                    v = rem.get(t, ZERO) - q * dc
                    if v:
                        rem[t] = v
                    else:
                        rem.pop(t, None)
            else:
                out_rem[m] = c
        return Polynomial(self.ring, quo), Polynomial(self.ring, out_rem)

    def divexact(self, divisor: "Polynomial") -> "Polynomial":
        q, r = self.divmod(divisor)
        if r.terms:
            raise PolynomialError("division is not exact")
        return q

    def divides(self, other: "Polynomial") -> bool:
        """True when self | other."""
        if not self.terms:
            return not other.terms
        return not other.divmod(self)[1].terms

    # -- evaluation and substitution --------------------------------------
    def evaluate(self, point: Sequence) -> mpq:
        return evaluate(self, point)

    def subs(self, assignment: Mapping[str, object]) -> "Polynomial":
        """Partial substitution inside the same ring (values: scalars or polynomials)."""
        images = []
        for name in self.ring.names:
            if name in assignment:
                v = assignment[name]
                images.append(v if isinstance(v, Polynomial) else self.ring.const(v))
            else:
                images.append(self.ring.var(name))
        return self.compose(images)

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.ring.nvars:
            raise PolynomialError("need one image per variable")
        if not self.terms:
            target = next((p.ring for p in images if isinstance(p, Polynomial)), self.ring)
            return target.zero
        target = images[0].ring
        for p in images:
            if p.ring != target:
                raise RingMismatch("substitution images must share one ring")
        powers: list[dict[int, Polynomial]] = [{0: target.one, 1: p} for p in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                k = max(k for k in cache if k <= e)
                val = cache[k]
                while k < e:
                    val = val * images[i]
                    k += 1
                    cache[k] = val
            return cache[e]

        acc: dict = {}
        for m, c in self.terms.items():
            term = None
            for i, e in enumerate(m):
                if e:
                    f = power(i, e)
                    term = f if term is None else term * f
            if term is None:
                key = (0,) * target.nvars
                acc[key] = acc.get(key, ZERO) + c
                continue
            for tm, tc in term.terms.items():
                acc[tm] = acc.get(tm, ZERO) + c * tc
        return Polynomial(target, {m: c for m, c in acc.items() if c})

    def to_ring(self, ring: VarRing) -> "Polynomial":
        """Re-express in another ring containing every variable that occurs."""
        if ring == self.ring:
            return self
        idx = []
        for i, name in enumerate(self.ring.names):
            idx.append(ring.names.index(name) if name in ring.names else None)
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for i, k in enumerate(m):
                if k:
                    j = idx[i]
                    if j is None:
                        raise PolynomialError(
                            f"variable {self.ring.names[i]!r} missing from {ring}")
                    e[j] = k
            out[tuple(e)] = c
        return Polynomial(ring, out)

    # -- printing ---------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            factors = []
            for name, e in zip(self.ring.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = str(a) + "*" + "*".join(factors)
            if i == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, ring={','.join(self.ring.names)})"


def _gcd_z(a, b):
    from gmpy2 import gcd as zgcd
    return zgcd(a, b)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _Parser:
    def __init__(self, text: str, ring: VarRing):
        self.ring = ring
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), m.start(2)))
            else:
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0
        self.end = len(text)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", "", self.end)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected {val!r}", pos)
        return p

    def expr(self) -> Polynomial:
        # a leading sign is accepted so that printed output round-trips
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", pos)
            base = base ** int(val)
        return base

    def base(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "name":
            if val not in self.ring.names:
                raise ParseError(f"unknown variable {val!r}", pos)
            return self.ring.var(val)
        if kind == "int":
            num = int(val)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "int":
                    raise ParseError("expected denominator", p3)
                if int(v3) == 0:
                    raise ParseError("zero denominator", p3)
                return self.ring.const(mpq(num, int(v3)))
            return self.ring.const(num)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_polynomial(text: str, ring: VarRing) -> Polynomial:
    """Parse ``text`` (explicit ``*``, ``^`` powers, rationals ``p/q``) in ``ring``."""
    return _Parser(text, ring).parse()


# ---------------------------------------------------------------------------
# free functions


def homogeneity_check(p: Polynomial) -> int | None:
    """Common total degree of all terms, or None (zero counts as homogeneous of any degree -> None)."""
    if not p.terms:
        return None
    it = iter(p.terms)
    d = sum(next(it))
    for m in it:
        if sum(m) != d:
            return None
    return d


def evaluate(p: Polynomial, point: Sequence) -> mpq:
    if len(point) != p.ring.nvars:
        raise PolynomialError(f"point has {len(point)} coordinates, ring has {p.ring.nvars}")
    pt = [as_rational(v) for v in point]
    total = ZERO
    for m, c in p.terms.items():
        v = c
        for x, e in zip(pt, m):
            if e:
                v = v * x ** e
        total += v
    return total


def substitute(p: Polynomial, assignment: Mapping[str, Polynomial]) -> Polynomial:
    """Replace every variable occurring in ``p`` by a polynomial; all images share one ring."""
    missing = [p.ring.names[i] for i in p.variables() if p.ring.names[i] not in assignment]
    if missing:
        raise PolynomialError(f"incomplete assignment: no image for {missing}")
    images = list(assignment.values())
    if not images:
        return p
    target = images[0].ring
    full = []
    for name in p.ring.names:
        img = assignment.get(name)
        full.append(img if img is not None else target.zero)
    return p.compose(full)


# -- gcd machinery -----------------------------------------------------------


def _main_var(a: Polynomial, b: Polynomial) -> int | None:
    va = set(a.variables())
    vb = set(b.variables())
    both = va | vb
    return max(both) if both else None


def _content_in(p: Polynomial, v: int) -> Polynomial:
    coeffs = list(p.coefficients_in(v).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = gcd(g, c)
    return g.primitive() if not g.is_constant() else p.ring.one


def _lc_in(p: dict, ) -> int:
    return max(p)


def _as_univariate(p: Polynomial, v: int) -> dict[int, Polynomial]:
    return p.coefficients_in(v)


def _from_univariate(u: dict[int, Polynomial], v: int, ring: VarRing) -> Polynomial:
    acc: dict = {}
    for k, c in u.items():
        for m, val in c.terms.items():
            acc[m[:v] + (k,) + m[v + 1:]] = val
    return Polynomial(ring, acc)


def _prem(a: dict[int, Polynomial], b: dict[int, Polynomial]) -> dict[int, Polynomial]:
    """Pseudo-remainder of univariate polynomials with polynomial coefficients."""
    db = max(b)
    lb = b[db]
    r = dict(a)
    dr = max(r) if r else -1
    k = dr - db + 1
    while r and dr >= db:
        lr = r[dr]
        shift = dr - db
        new: dict[int, Polynomial] = {}
        for e, c in r.items():
            if e != dr:
                new[e] = c * lb
        for e, c in b.items():
            if e == db:
                continue
            t = e + shift
            val = new.get(t, None)
            prod = lr * c
            new[t] = (val - prod) if val is not None else -prod
        r = {e: c for e, c in new.items() if c.terms}
        k -= 1
        dr = max(r) if r else -1
    if k > 0 and r:
        f = lb ** k
        r = {e: c * f for e, c in r.items()}
    return r


def _primitive_univariate(u: dict[int, Polynomial], ring: VarRing) -> dict[int, Polynomial]:
    coeffs = list(u.values())
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = gcd(g, c)
    if g.is_constant():
        return u
    return {e: c.divexact(g) for e, c in u.items()}


def _subresultant_gcd(a: Polynomial, b: Polynomial, v: int) -> Polynomial:
    """gcd of two polynomials primitive in variable v, via the subresultant PRS."""
    ring = a.ring
    A = _as_univariate(a, v)
    B = _as_univariate(b, v)
    if max(A) < max(B):
        A, B = B, A
    if max(B) == 0:
        return ring.one
    g = ring.one
    h = ring.one
    while True:
        delta = max(A) - max(B)
        R = _prem(A, B)
        if not R:
            break
        if max(R) == 0:
            return ring.one
        divisor = g * h ** delta
        A, B = B, {e: c.divexact(divisor) for e, c in R.items()}
        g = A[max(A)]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g ** delta).divexact(h ** (delta - 1))
    B = _primitive_univariate(B, ring)
    return _from_univariate(B, v, ring).primitive()


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor, primitive with positive leading coefficient."""
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if not a.terms:
        return b.primitive()
    if not b.terms:
        return a.primitive()
    if a.is_constant() or b.is_constant():
        return a.ring.one
    if len(a.terms) == 1 or len(b.terms) == 1:
        return _gcd_with_monomial(a, b)
    v = _main_var(a, b)
    va = a.degree_in(v)
    vb = b.degree_in(v)
    if va == 0:
        return gcd(a, _content_in(b, v))
    if vb == 0:
        return gcd(_content_in(a, v), b)
    ca = _content_in(a, v)
    cb = _content_in(b, v)
    pa = a.divexact(ca) if not ca.is_constant() else a
    pb = b.divexact(cb) if not cb.is_constant() else b
    c = gcd(ca, cb)
    g = _subresultant_gcd(pa, pb, v)
    return (c * g).primitive()


def _gcd_with_monomial(a: Polynomial, b: Polynomial) -> Polynomial:
    # gcd with a monomial is the monomial gcd of all exponents involved
    n = a.ring.nvars
    low = [None] * n
    for p in (a, b):
        for m in p.terms:
            for i in range(n):
                low[i] = m[i] if low[i] is None else min(low[i], m[i])
    return a.ring.monomial(low, 1)


def lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    g = gcd(a, b)
    return (a.divexact(g) * b).primitive()


def gcd_and_content(ps: Sequence[Polynomial]) -> tuple[Polynomial, list[Polynomial]]:
    """Common divisor of a family and the cofactors ``p_i / gcd``."""
    nonzero = [p for p in ps if p.terms]
    if not nonzero:
        raise PolynomialError("gcd of an all-zero family is undefined")
    g = nonzero[0].primitive()
    for p in nonzero[1:]:
        if g.is_constant():
            break
        g = gcd(g, p)
    if g.is_constant():
        return g.ring.one, list(ps)
    return g, [p.divexact(g) if p.terms else p for p in ps]


def squarefree_decompose(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Coprime squarefree factors with multiplicities, product equal to p up to a scalar.

    Yun's algorithm in the first occurring variable, recursing into the
    content; factors are further split by their contents in each variable.
    """
    if not p.terms:
        raise PolynomialError("cannot decompose the zero polynomial")
    out: list[tuple[Polynomial, int]] = []
    _yun_recursive(p.primitive(), out)
    refined: list[tuple[Polynomial, int]] = []
    for f, k in out:
        for piece in _split_by_contents(f):
            refined.append((piece, k))
    refined.sort(key=lambda fk: (fk[0].total_degree(), str(fk[0])))
    return refined


def _yun_recursive(p: Polynomial, out: list):
    if p.is_constant():
        return
    x = p.variables()[0]
    c = _content_in(p, x)
    pp = p.divexact(c) if not c.is_constant() else p
    for f, k in _yun(pp, x):
        out.append((f, k))
    if not c.is_constant():
        _yun_recursive(c, out)


def _yun(f: Polynomial, x: int) -> list[tuple[Polynomial, int]]:
    df = f.diff(x)
    a = gcd(f, df)
    b = f.divexact(a)
    c = df.divexact(a)
    d = c - b.diff(x)
    result = []
    i = 1
    while not b.is_constant():
        a = gcd(b, d)
        if not a.is_constant():
            result.append((a.primitive(), i))
        b = b.divexact(a)
        c = d.divexact(a)
        d = c - b.diff(x)
        i += 1
    return result


def _split_by_contents(f: Polynomial) -> list[Polynomial]:
    pieces = [f]
    for v in range(f.ring.nvars):
        nxt = []
        for q in pieces:
            if q.degree_in(v) <= 0:
                nxt.append(q)
                continue
            c = _content_in(q, v)
            if c.is_constant():
                nxt.append(q)
            else:
                nxt.append(c.primitive())
                nxt.append(q.divexact(c).primitive())
        pieces = nxt
    return [q.primitive() for q in pieces if not q.is_constant()]


def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by Laplace expansion memoised over column subsets."""
    n = len(matrix)
    if n == 0:
        raise PolynomialError("empty matrix")
    if any(len(row) != n for row in matrix):
        raise PolynomialError("matrix is not square")
    ring = matrix[0][0].ring
    memo: dict[tuple[int, ...], Polynomial] = {}

    def minor(row: int, cols: tuple[int, ...]) -> Polynomial:
        if row == n:
            return ring.one
        got = memo.get(cols)
        if got is not None:
            return got
        acc = ring.zero
        for k, j in enumerate(cols):
            entry = matrix[row][j]
            if not entry.terms:
                continue
            sub = minor(row + 1, cols[:k] + cols[k + 1:])
            if not sub.terms:
                continue
            term = entry * sub
            acc = acc - term if k % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(0, tuple(range(n)))
