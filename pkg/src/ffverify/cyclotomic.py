"""Exact arithmetic in Q(zeta_m) and characters valued there.

Numbers are Fraction coefficient vectors modulo the m-th cyclotomic
polynomial, so every identity check is exact.  The conductor used for a
tower with q = p^e is m = p(q+1); since p and q+1 are coprime this field
contains both zeta_p = zeta_m^{q+1} and zeta_{q+1} = zeta_m^p.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .fields import FieldElement, TowerContext, FieldError


class CycError(ValueError):
    pass


def _intpoly_divexact(num, den):
    """Exact division of integer polynomials (low degree first), den monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[:len(den) - 1]):
        raise CycError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_coeffs(m: int) -> tuple:
    """Integer coefficients of the m-th cyclotomic polynomial, low first."""
    if m < 1:
        raise CycError("conductor must be positive")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _intpoly_divexact(poly, cyclotomic_coeffs(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m: int):
    """x^j mod Phi_m for j = 0 .. m-1, as tuples of ints."""
    phi = cyclotomic_coeffs(m)
    deg = len(phi) - 1
    table = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(m):
        table.append(tuple(cur))
        lead = cur[deg - 1]
        nxt = [0] + cur[:deg - 1]
        if lead:
            for i in range(deg):
                nxt[i] -= lead * phi[i]
        cur = nxt
    return tuple(table)


class CycNumber:
    """An element of Q(zeta_m), exact."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        deg = len(cyclotomic_coeffs(m)) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            raise CycError("coefficient vector too long")
        cs += [Fraction(0)] * (deg - len(cs))
        self.coeffs = tuple(cs)

    @classmethod
    def from_rational(cls, m: int, r) -> "CycNumber":
        return cls(m, [Fraction(r)])

    @classmethod
    def root_of_unity(cls, m: int, k: int) -> "CycNumber":
        return cls(m, _power_table(m)[k % m])

    def _check(self, other):
        if not isinstance(other, CycNumber):
            other = CycNumber.from_rational(self.m, other)
        if other.m != self.m:
            raise CycError("mixed conductors")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CycNumber(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return CycNumber(self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return CycNumber(self.m, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.m, [a * other for a in self.coeffs])
        other = self._check(other)
        deg = len(self.coeffs)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        phi = cyclotomic_coeffs(self.m)
        for k in range(2 * deg - 2, deg - 1, -1):
            c = prod[k]
            if c:
                prod[k] = Fraction(0)
                for i in range(deg):
                    prod[k - deg + i] -= c * phi[i]
        return CycNumber(self.m, prod[:deg])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise CycError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        other = self._check(other)
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNumber.from_rational(self.m, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_rational(self.m, other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        return f"Cyc({self.m}; {[str(c) for c in self.coeffs]})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise CycError("not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def conjugate(self) -> "CycNumber":
        """Complex conjugation, zeta -> zeta^{-1}."""
        table = _power_table(self.m)
        deg = len(self.coeffs)
        out = [Fraction(0)] * deg
        for i, c in enumerate(self.coeffs):
            if c:
                for j, t in enumerate(table[(-i) % self.m]):
                    out[j] += c * t
        return CycNumber(self.m, out)

    def galois_power(self, k: int) -> "CycNumber":
        """zeta -> zeta^k, for gcd(k, m) = 1."""
        table = _power_table(self.m)
        deg = len(self.coeffs)
        out = [Fraction(0)] * deg
        for i, c in enumerate(self.coeffs):
            if c:
                for j, t in enumerate(table[(i * k) % self.m]):
                    out[j] += c * t
        return CycNumber(self.m, out)

    def divide_by_q_power(self, q: int, t: int) -> "CycNumber":
        """Exact division by q^t (a Tate-twist style renormalization)."""
        return self * Fraction(1, q ** t)

    def inverse(self) -> "CycNumber":
        """Inverse via the extended Euclidean algorithm modulo Phi_m."""
        if self.is_zero():
            raise CycError("inverse of zero")
        if self.is_rational():
            return CycNumber.from_rational(self.m, Fraction(1) / self.coeffs[0])
        phi = [Fraction(c) for c in cyclotomic_coeffs(self.m)]
        a = list(self.coeffs)

        def trim(v):
            while v and v[-1] == 0:
                v.pop()
            return v

        def polydivmod(u, v):
            u = list(u)
            quo = [Fraction(0)] * max(len(u) - len(v) + 1, 0)
            inv = Fraction(1) / v[-1]
            for k in range(len(u) - len(v), -1, -1):
                c = u[k + len(v) - 1] * inv
                quo[k] = c
                if c:
                    for i, d in enumerate(v):
                        u[k + i] -= c * d
            return quo, trim(u)

        # extended euclid: s*a + t*phi = gcd
        r0, r1 = trim(list(phi)), trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while r1:
            quo, rem = polydivmod(r0, r1)
            r0, r1 = r1, rem
            ns = list(s0)
            prod = [Fraction(0)] * (len(quo) + len(s1) - 1) if quo and s1 else []
            for i, qc in enumerate(quo):
                if qc:
                    for j, sc in enumerate(s1):
                        prod[i + j] += qc * sc
            ln = max(len(ns), len(prod))
            ns = [
                (ns[i] if i < len(ns) else Fraction(0))
                - (prod[i] if i < len(prod) else Fraction(0))
                for i in range(ln)
            ]
            s0, s1 = s1, trim(ns)
        if len(r0) != 1:
            raise CycError("non-invertible element (unexpected)")
        g = r0[0]
        inv_coeffs = [c / g for c in s0]
        result = CycNumber(self.m, inv_coeffs[:len(self.coeffs)])
        # any overflow degrees were already impossible: deg(s0) < deg(phi)
        if not (result * self == CycNumber.from_rational(self.m, 1)):
            raise CycError("inverse verification failed")
        return result

    def to_json(self):
        return {"conductor": self.m,
                "coeffs": [str(c) for c in self.coeffs]}


# ---------------------------------------------------------------------------
# Characters attached to a tower.

def conductor(ctx: TowerContext) -> int:
    return ctx.p * (ctx.q + 1)


class AdditiveCharacter:
    """psi_a(x) = zeta_p^{Tr_{F_q/F_p}(a x)} on F_q."""

    def __init__(self, ctx: TowerContext, a):
        self.ctx = ctx
        self.a = ctx.project(a if isinstance(a, FieldElement) else ctx.element(1, a), 1)
        self.m = conductor(ctx)

    def __call__(self, x) -> CycNumber:
        ctx = self.ctx
        if not isinstance(x, FieldElement):
            x = ctx.element(1, x)
        x = ctx.project(x, 1)
        tr = ctx.trace_to_prime(self.a * x)
        return CycNumber.root_of_unity(self.m, (ctx.q + 1) * tr)

    def inverse_value(self, x) -> CycNumber:
        return self(x).conjugate()

    def is_trivial(self) -> bool:
        return self.a.is_zero()


class CentralCharacter:
    """chi_k on mu_{q+1}, zeta -> zeta_{q+1}^{k dlog(zeta)}."""

    def __init__(self, ctx: TowerContext, k: int):
        self.ctx = ctx
        self.k = k % (ctx.q + 1)
        self.m = conductor(ctx)

    def __call__(self, zeta: FieldElement) -> CycNumber:
        d = self.ctx.discrete_log_mu(zeta, self.ctx.q + 1)
        return CycNumber.root_of_unity(self.m, self.ctx.p * self.k * d)


def nu_character(ctx: TowerContext) -> CentralCharacter:
    """The order-2 character of mu_{q+1}; needs odd characteristic."""
    if ctx.p == 2:
        raise FieldError("the quadratic character of mu_{q+1} needs p odd")
    return CentralCharacter(ctx, (ctx.q + 1) // 2)


def nu_sign(ctx: TowerContext, zeta: FieldElement) -> int:
    if ctx.p == 2:
        raise FieldError("the quadratic character of mu_{q+1} needs p odd")
    return -1 if ctx.discrete_log_mu(zeta, ctx.q + 1) % 2 else 1


def gauss_sum(ctx: TowerContext, psi: AdditiveCharacter) -> CycNumber:
    """Quadratic Gauss sum sum_{x in F_q^*} (x | F_q) psi(x)."""
    if ctx.p == 2:
        raise FieldError("quadratic Gauss sums need p odd")
    if psi.is_trivial():
        raise FieldError("the additive character must be nontrivial")
    m = conductor(ctx)
    total = CycNumber.from_rational(m, 0)
    for x in ctx.enumerate_level(1):
        if x.is_zero():
            continue
        total = total + ctx.legendre(x) * psi(x)
    return total
