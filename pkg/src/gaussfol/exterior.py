"""Differential forms and vector fields with polynomial coefficients."""

from __future__ import annotations

from itertools import combinations
from typing import Mapping, Sequence

from .polyring import Polynomial, PolynomialError, VarRing

__all__ = [
    "DifferentialForm",
    "VectorField",
    "wedge",
    "exterior_derivative",
    "interior_product",
    "lie_bracket",
    "contract_volume",
    "one_form",
    "exact_form",
    "volume_form",
    "radial_field",
]


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sign of the permutation sorting ``idx`` and the sorted tuple; None on repeats."""
    if len(set(idx)) != len(idx):
        return None
    arr = list(idx)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


class DifferentialForm:
    """A k-form Σ c_I dz_I over sorted index tuples I."""

    __slots__ = ("ring", "degree", "coeffs")

    def __init__(self, ring: VarRing, degree: int, coeffs: Mapping[tuple, Polynomial] | None = None):
        self.ring = ring
        self.degree = degree
        clean: dict[tuple[int, ...], Polynomial] = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise PolynomialError(f"index {idx} does not match form degree {degree}")
            if c.ring != ring:
                raise PolynomialError("coefficient ring mismatch")
            if any(i < 0 or i >= ring.nvars for i in idx):
                raise PolynomialError(f"index {idx} out of range")
            s = _sort_sign(idx)
            if s is None or not c.terms:
                continue
            sign, key = s
            prev = clean.get(key)
            val = c if sign > 0 else -c
            val = val if prev is None else prev + val
            if val.terms:
                clean[key] = val
            else:
                clean.pop(key, None)
        self.coeffs = clean

    @classmethod
    def zero(cls, ring: VarRing, degree: int) -> "DifferentialForm":
        return cls(ring, degree, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, idx) -> Polynomial:
        if isinstance(idx, int):
            idx = (idx,)
        s = _sort_sign(idx)
        if s is None:
            return self.ring.zero
        sign, key = s
        c = self.coeffs.get(key)
        if c is None:
            return self.ring.zero
        return c if sign > 0 else -c

    def __add__(self, other: "DifferentialForm") -> "DifferentialForm":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return DifferentialForm(self.ring, self.degree, out)

    def __neg__(self):
        return DifferentialForm(self.ring, self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f) -> "DifferentialForm":
        """Multiply every coefficient by a polynomial or scalar."""
        return DifferentialForm(self.ring, self.degree, {k: c * f for k, c in self.coeffs.items()})

    def __mul__(self, f):
        return self.scale(f)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, DifferentialForm) and self.ring == other.ring
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ring, self.degree, frozenset(self.coeffs.items())))

    def _check(self, other):
        if self.ring != other.ring:
            raise PolynomialError("forms live in different rings")
        if self.degree != other.degree:
            raise PolynomialError("forms have different degrees")

    def coefficient_list(self) -> list[Polynomial]:
        """For a 1-form: the coefficients A_0, ..., A_n in variable order."""
        if self.degree != 1:
            raise PolynomialError("coefficient_list is defined for 1-forms")
        return [self[(i,)] for i in range(self.ring.nvars)]

    def map_coefficients(self, fn) -> "DifferentialForm":
        return DifferentialForm(self.ring, self.degree, {k: fn(c) for k, c in self.coeffs.items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        names = self.ring.names
        parts = []
        for k in sorted(self.coeffs):
            basis = "^".join("d" + names[i] for i in k) or "1"
            parts.append(f"({self.coeffs[k]})*{basis}")
        return " + ".join(parts)

    def __repr__(self):
        return f"DifferentialForm(deg={self.degree}, {self})"


class VectorField:
    """Σ X_j ∂/∂z_j."""

    __slots__ = ("ring", "components")

    def __init__(self, ring: VarRing, components: Sequence[Polynomial]):
        comps = list(components)
        if len(comps) != ring.nvars:
            raise PolynomialError("a vector field needs one component per variable")
        for c in comps:
            if c.ring != ring:
                raise PolynomialError("component ring mismatch")
        self.ring = ring
        self.components = tuple(comps)

    def __add__(self, other):
        return VectorField(self.ring, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return VectorField(self.ring, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return VectorField(self.ring, [-a for a in self.components])

    def scale(self, f):
        return VectorField(self.ring, [a * f for a in self.components])

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.ring == other.ring and self.components == other.components

    def __hash__(self):
        return hash((self.ring, self.components))

    def apply(self, p: Polynomial) -> Polynomial:
        """Derivation X(p)."""
        acc = self.ring.zero
        for i, c in enumerate(self.components):
            if c.terms:
                acc = acc + c * p.diff(i)
        return acc

    def __str__(self):
        return " + ".join(f"({c})*d/d{n}" for c, n in zip(self.components, self.ring.names) if c.terms) or "0"


def one_form(ring: VarRing, coefficients: Sequence[Polynomial]) -> DifferentialForm:
    if len(coefficients) != ring.nvars:
        raise PolynomialError("a 1-form needs one coefficient per variable")
    return DifferentialForm(ring, 1, {(i,): c for i, c in enumerate(coefficients)})


def exact_form(f: Polynomial) -> DifferentialForm:
    """df."""
    return one_form(f.ring, f.gradient())


def volume_form(ring: VarRing) -> DifferentialForm:
    return DifferentialForm(ring, ring.nvars, {tuple(range(ring.nvars)): ring.one})


def radial_field(ring: VarRing) -> VectorField:
    return VectorField(ring, ring.gens())


def wedge(a: DifferentialForm, b: DifferentialForm) -> DifferentialForm:
    if a.ring != b.ring:
        raise PolynomialError("forms live in different rings")
    deg = a.degree + b.degree
    if deg > a.ring.nvars:
        return DifferentialForm.zero(a.ring, deg)
    acc: dict[tuple, Polynomial] = {}
    for ia, ca in a.coeffs.items():
        sa = set(ia)
        for ib, cb in b.coeffs.items():
            if sa.intersection(ib):
                continue
            sign, key = _sort_sign(ia + ib)
            prod = ca * cb
            if sign < 0:
                prod = -prod
            acc[key] = acc[key] + prod if key in acc else prod
    return DifferentialForm(a.ring, deg, acc)


def exterior_derivative(a: DifferentialForm) -> DifferentialForm:
    deg = a.degree + 1
    if deg > a.ring.nvars:
        return DifferentialForm.zero(a.ring, deg)
    acc: dict[tuple, Polynomial] = {}
    for idx, c in a.coeffs.items():
        for j in c.variables():
            if j in idx:
                continue
            sign, key = _sort_sign((j,) + idx)
            dc = c.diff(j)
            if sign < 0:
                dc = -dc
            acc[key] = acc[key] + dc if key in acc else dc
    return DifferentialForm(a.ring, deg, acc)


def interior_product(X: VectorField, a: DifferentialForm) -> DifferentialForm:
    """i_X a; contracting into the first slot."""
    if X.ring != a.ring:
        raise PolynomialError("field and form live in different rings")
    if a.degree == 0:
        return DifferentialForm.zero(a.ring, 0)
    acc: dict[tuple, Polynomial] = {}
    comps = X.components
    for idx, c in a.coeffs.items():
        for pos, j in enumerate(idx):
            xj = comps[j]
            if not xj.terms:
                continue
            rest = idx[:pos] + idx[pos + 1:]
            term = xj * c
            if pos % 2:
                term = -term
            acc[rest] = acc[rest] + term if rest in acc else term
    return DifferentialForm(a.ring, a.degree - 1, acc)


def lie_bracket(X: VectorField, Y: VectorField) -> VectorField:
    """[X, Y] with components X(Y_j) − Y(X_j)."""
    if X.ring != Y.ring:
        raise PolynomialError("fields live in different rings")
    return VectorField(X.ring, [X.apply(yj) - Y.apply(xj) for xj, yj in zip(X.components, Y.components)])


def contract_volume(fields: Sequence[VectorField], ring: VarRing | None = None) -> DifferentialForm:
    """i_{X_1} i_{X_2} ... i_{X_k} ν for the volume form ν of the ring.

    The innermost contraction is with the last field.  Coefficients are
    computed as signed k×k minors, which equals the iterated contraction.
    """
    fields = list(fields)
    if ring is None:
        if not fields:
            raise PolynomialError("need a ring or at least one field")
        ring = fields[0].ring
    n = ring.nvars
    k = len(fields)
    if k > n:
        raise PolynomialError("more fields than variables")
    from .polyring import determinant

    out: dict[tuple, Polynomial] = {}
    allidx = tuple(range(n))
    for cols in combinations(allidx, k):
        rest = tuple(i for i in allidx if i not in cols)
        # ν = sign(cols+rest) dz_cols ∧ dz_rest; i_{X_1}...i_{X_k} dz_cols = det[X_a(col_b)] with
        # the contraction order producing the row order X_1..X_k
        sign, _ = _sort_sign(cols + rest)
        if k:
            mat = [[X.components[c] for c in cols] for X in fields]
            det = determinant(mat)
        else:
            det = ring.one
        if not det.terms:
            continue
        # iterated interior products i_{X_1}(i_{X_2}(...)) pick up (−1)^{k(k−1)/2}
        if (k * (k - 1) // 2) % 2:
            sign = -sign
        out[rest] = det if sign > 0 else -det
    return DifferentialForm(ring, n - k, out)
