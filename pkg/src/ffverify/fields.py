"""Deterministic finite field towers F_p < F_q < F_{q^2} < F_{q^4}.

Field models are reproducible without external tables: every level is
F_p[x]/(f) where f is the lexicographically least monic irreducible
polynomial of the right degree (coefficients compared low-degree-first).
Elements are coefficient tuples over F_p, low degree first, and the
integer encoding sum(c_i * p^i) fixes a total order used everywhere a
"least" or "sorted" choice is needed.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class FieldError(ValueError):
    """Invalid field construction or element usage."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Dense polynomials over F_p, coefficients low degree first.

def _trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def poly_add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def poly_mod(a, f, p):
    """Remainder of a modulo the monic polynomial f."""
    a = list(a)
    d = len(f) - 1
    while len(a) > d:
        lead = a[-1] % p
        if lead:
            for i in range(d + 1):
                a[len(a) - 1 - d + i] = (a[len(a) - 1 - d + i] - lead * f[i]) % p
        a.pop()
    return _trim(a)


def poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = tuple(c * inv % p for c in b)
        a, b = b, poly_mod(a, bm, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple(c * inv % p for c in a)
    return a


def poly_powmod(a, n, f, p):
    result = (1,)
    a = poly_mod(a, f, p)
    while n:
        if n & 1:
            result = poly_mod(poly_mul(result, a, p), f, p)
        a = poly_mod(poly_mul(a, a, p), f, p)
        n >>= 1
    return result


def _is_irreducible(f, p):
    d = len(f) - 1
    if d == 1:
        return True
    x = (0, 1)
    if poly_powmod(x, p ** d, f, p) != poly_mod(x, f, p):
        return False
    for t in prime_factors(d):
        g = poly_powmod(x, p ** (d // t), f, p)
        if len(poly_gcd(poly_sub(g, x, p), f, p)) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, d: int):
    """Lex-least monic irreducible of degree d over F_p.

    Candidates are ordered by the base-p integer encoding of the
    low-degree coefficient vector (c_0, ..., c_{d-1}).
    """
    for k in range(p ** d):
        coeffs = []
        kk = k
        for _ in range(d):
            coeffs.append(kk % p)
            kk //= p
        f = tuple(coeffs) + (1,)
        if _is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {d} over F_{p}")


# ---------------------------------------------------------------------------
# A single level of the tower.

class Level:
    """F_p[x]/(modulus), elements are coefficient tuples of fixed length."""

    def __init__(self, p: int, degree: int, modulus=None):
        self.p = p
        self.degree = degree
        self.modulus = modulus if modulus is not None else least_irreducible(p, degree)
        if len(self.modulus) != degree + 1 or self.modulus[-1] != 1:
            raise FieldError("modulus must be monic of the stated degree")
        self.size = p ** degree
        self.zero = (0,) * degree
        self.one = self._pad((1,))
        # x^(degree+k) mod modulus for k = 0 .. degree-2, used by mul.
        red = []
        cur = _trim(self.modulus[:-1])
        cur = tuple((-c) % p for c in self.modulus[:-1])
        for _ in range(max(degree - 1, 0)):
            red.append(cur)
            cur = self._shift_reduce(cur)
        self._red = red

    def _shift_reduce(self, c):
        shifted = (0,) + tuple(c)
        if len(shifted) <= self.degree:
            return _trim(shifted)
        lead = shifted[self.degree]
        base = _trim(shifted[:self.degree])
        if lead == 0:
            return base
        head = tuple((-lead * m) % self.p for m in self.modulus[:-1])
        return poly_add(base, head, self.p)

    def _pad(self, c):
        return tuple(c) + (0,) * (self.degree - len(c))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def scalar(self, c, a):
        p = self.p
        c %= p
        return tuple((c * x) % p for x in a)

    def mul(self, a, b):
        p, d = self.p, self.degree
        out = [0] * (2 * d - 1 if d > 0 else 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % p
        low = out[:d]
        for k in range(d, len(out)):
            c = out[k]
            if c:
                for i, r in enumerate(self._red[k - d]):
                    low[i] = (low[i] + c * r) % p
        return self._pad(_trim(low))

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise FieldError("inverse of zero")
        return self.pow(a, self.size - 2)

    def encode(self, a) -> int:
        k = 0
        for c in reversed(a):
            k = k * self.p + c
        return k

    def decode(self, k: int):
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(k % self.p)
            k //= self.p
        return tuple(coeffs)

    def elements(self):
        return (self.decode(k) for k in range(self.size))

    def eval_intpoly(self, f, a):
        """Evaluate a polynomial with F_p integer coefficients at a."""
        acc = self.zero
        for c in reversed(f):
            acc = self.mul(acc, self._pad((0, 1))[:self.degree] or (0,)) if False else acc
        # Horner, kept explicit for clarity.
        acc = self.zero
        for c in reversed(f):
            acc = self.add(self.mul(acc, self.gen()), self._pad((c % self.p,)))
        return acc

    def eval_intpoly_at(self, f, a):
        acc = self.zero
        for c in reversed(f):
            acc = self.add(self.mul(acc, a), self._pad((c % self.p,)))
        return acc

    def gen(self):
        """The residue class of x."""
        if self.degree == 1:
            # F_p model: x is congruent to -c_0.
            return self._pad(((-self.modulus[0]) % self.p,))
        return self._pad((0, 1))


# ---------------------------------------------------------------------------
# The tower and its elements.

class FieldElement:
    """An element at one level of a tower, compared after embedding."""

    __slots__ = ("tower", "key", "coeffs")

    def __init__(self, tower: "TowerContext", key: int, coeffs):
        self.tower = tower
        self.key = key
        self.coeffs = tuple(coeffs)

    def __repr__(self):
        return f"F(q^{self.key}){list(self.coeffs)}"

    def _pair(self, other):
        if not isinstance(other, FieldElement):
            other = self.tower.element(self.key, other)
        if other.tower is not self.tower:
            raise FieldError("elements from different towers")
        key = max(self.key, other.key)
        return self.tower.embed(self, key), self.tower.embed(other, key), key

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, int):
                other = self.tower.element(self.key, other % self.tower.p)
            else:
                return NotImplemented
        a, b, _ = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        top = self.tower.embed(self, 4)
        return hash((id(self.tower), top.coeffs))

    def __add__(self, other):
        a, b, key = self._pair(other)
        return FieldElement(self.tower, key, self.tower.levels[key].add(a.coeffs, b.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        a, b, key = self._pair(other)
        return FieldElement(self.tower, key, self.tower.levels[key].sub(a.coeffs, b.coeffs))

    def __neg__(self):
        return FieldElement(self.tower, self.key, self.tower.levels[self.key].neg(self.coeffs))

    def __mul__(self, other):
        a, b, key = self._pair(other)
        return FieldElement(self.tower, key, self.tower.levels[key].mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b, key = self._pair(other)
        lv = self.tower.levels[key]
        return FieldElement(self.tower, key, lv.mul(a.coeffs, lv.inv(b.coeffs)))

    def __pow__(self, n):
        return FieldElement(self.tower, self.key, self.tower.levels[self.key].pow(self.coeffs, n))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def encoding(self) -> int:
        return self.tower.levels[self.key].encode(self.coeffs)


class TowerContext:
    """The tower F_p < F_q < F_{q^2} < F_{q^4} with cached embeddings.

    Immutable after construction; all operations are pure.  Level keys
    are the degree over F_q: 1, 2 and 4.
    """

    KEYS = (1, 2, 4)
    MAX_Q = 16

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if e < 1:
            raise FieldError("exponent must be positive")
        q = p ** e
        if q > self.MAX_Q:
            raise FieldError(f"q = {q} exceeds the enumeration bound {self.MAX_Q}")
        self.p = p
        self.e = e
        self.q = q
        self.levels = {k: Level(p, e * k) for k in self.KEYS}
        # Embeddings by root-finding: the 1->4 map is the composite
        # through level 2, so commutativity holds by construction.
        r12 = self._find_root(self.levels[1].modulus, self.levels[2])
        r24 = self._find_root(self.levels[2].modulus, self.levels[4])
        self._rootpow = {
            (1, 2): self._powers(r12, self.levels[2], self.levels[1].degree),
            (2, 4): self._powers(r24, self.levels[4], self.levels[2].degree),
        }
        self._down = {}
        self._mu_cache = {}
        self._dlog_cache = {}

    def __repr__(self):
        return f"TowerContext(p={self.p}, e={self.e})"

    @staticmethod
    def _find_root(f, level: Level):
        for k in range(level.size):
            a = level.decode(k)
            if level.eval_intpoly_at(f, a) == level.zero:
                return a
        raise FieldError("modulus has no root in the upper level")

    @staticmethod
    def _powers(r, level: Level, count):
        out = [level.one]
        for _ in range(count - 1):
            out.append(level.mul(out[-1], r))
        return out

    # -- element construction -------------------------------------------------

    def element(self, key: int, value) -> FieldElement:
        lv = self.levels[key]
        if isinstance(value, FieldElement):
            return self.embed(value, key)
        if isinstance(value, int):
            return FieldElement(self, key, lv.decode(value % lv.size) if value >= lv.p
                                else lv._pad((value % self.p,)))
        return FieldElement(self, key, lv._pad(tuple(c % self.p for c in value)))

    def zero(self, key=1):
        return FieldElement(self, key, self.levels[key].zero)

    def one(self, key=1):
        return FieldElement(self, key, self.levels[key].one)

    def from_encoding(self, key: int, k: int) -> FieldElement:
        return FieldElement(self, key, self.levels[key].decode(k))

    # -- embeddings -----------------------------------------------------------

    def _embed_step(self, coeffs, lo, hi):
        pows = self._rootpow[(lo, hi)]
        lv = self.levels[hi]
        acc = lv.zero
        for c, rp in zip(coeffs, pows):
            if c:
                acc = lv.add(acc, lv.scalar(c, rp))
        return acc

    def embed(self, x: FieldElement, key: int) -> FieldElement:
        if x.key == key:
            return x
        if x.key > key:
            return self.project(x, key)
        coeffs = x.coeffs
        cur = x.key
        while cur != key:
            nxt = cur * 2
            coeffs = self._embed_step(coeffs, cur, nxt)
            cur = nxt
        return FieldElement(self, key, coeffs)

    def project(self, x: FieldElement, key: int) -> FieldElement:
        """Inverse of embed; raises FieldError if x is not in the image."""
        if x.key == key:
            return x
        if x.key < key:
            return self.embed(x, key)
        table = self._down_table(key, x.key)
        try:
            coeffs = table[x.coeffs]
        except KeyError:
            raise FieldError("element does not lie in the requested subfield")
        return FieldElement(self, key, coeffs)

    def _down_table(self, lo, hi):
        if (lo, hi) not in self._down:
            table = {}
            for a in self.levels[lo].elements():
                img = FieldElement(self, lo, a)
                table[self.embed(img, hi).coeffs] = a
            self._down[(lo, hi)] = table
        return self._down[(lo, hi)]

    # -- named operations -----------------------------------------------------

    def frobenius_q(self, x: FieldElement) -> FieldElement:
        return x ** self.q

    def trace_to_prime(self, x: FieldElement) -> int:
        lv = self.levels[x.key]
        acc = self.zero(x.key)
        y = x
        for _ in range(lv.degree):
            acc = acc + y
            y = y ** self.p
        if any(acc.coeffs[1:]):
            raise FieldError("trace did not land in the prime field")
        return acc.coeffs[0]

    def norm_map(self, x: FieldElement) -> FieldElement:
        """Norm from F_{q^2} to F_q."""
        x = self.embed(x, 2)
        return self.project(x * self.frobenius_q(x), 1)

    def relative_trace(self, x: FieldElement) -> FieldElement:
        """Trace from F_{q^2} to F_q."""
        x = self.embed(x, 2)
        return self.project(x + self.frobenius_q(x), 1)

    def enumerate_level(self, key: int):
        lv = self.levels[key]
        return [FieldElement(self, key, a) for a in lv.elements()]

    def enumerate_mu(self, m: int) -> list[FieldElement]:
        if m < 1 or (self.q * self.q - 1) % m != 0:
            raise FieldError(f"m = {m} does not divide q^2 - 1")
        if m not in self._mu_cache:
            lv = self.levels[2]
            out = []
            for k in range(lv.size):
                a = lv.decode(k)
                if a != lv.zero and lv.pow(a, m) == lv.one:
                    out.append(FieldElement(self, 2, a))
            if len(out) != m:
                raise FieldError("mu enumeration failed")
            self._mu_cache[m] = out
        return list(self._mu_cache[m])

    def mu_generator(self, m: int) -> FieldElement:
        for a in self.enumerate_mu(m):
            if all((a ** (m // t)).coeffs != self.levels[2].one for t in prime_factors(m)) or m == 1:
                return a
        raise FieldError("no generator found")

    def discrete_log_mu(self, zeta: FieldElement, m: int) -> int:
        if m not in self._dlog_cache:
            g = self.mu_generator(m)
            table = {}
            cur = self.one(2)
            for k in range(m):
                table[cur.coeffs] = k
                cur = cur * g
            self._dlog_cache[m] = table
        z = self.embed(zeta, 2)
        try:
            return self._dlog_cache[m][z.coeffs]
        except KeyError:
            raise FieldError("element is not in mu_m")

    def f_q_epsilon_set(self, eps: int) -> list[FieldElement]:
        if eps not in (1, -1):
            raise FieldError("epsilon must be +1 or -1")
        lv = self.levels[2]
        out = []
        for k in range(lv.size):
            a = FieldElement(self, 2, lv.decode(k))
            if (a + self.element(2, [eps % self.p]) * self.frobenius_q(a)).is_zero():
                out.append(a)
        return out

    def legendre(self, a) -> int:
        if self.p == 2:
            raise FieldError("Legendre symbol undefined in characteristic 2")
        if not isinstance(a, FieldElement):
            a = self.element(1, a)
        a = self.project(a, 1)
        if a.is_zero():
            raise FieldError("Legendre symbol undefined at 0")
        r = a ** ((self.q - 1) // 2)
        if r == self.one(1):
            return 1
        if r == -self.one(1):
            return -1
        raise FieldError("unexpected value of the square indicator")


@lru_cache(maxsize=None)
def build_tower(p: int, e: int) -> TowerContext:
    """Deterministic tower for q = p^e; cached so towers are singletons."""
    return TowerContext(p, e)


# ---------------------------------------------------------------------------
# Artin-Schreier extension K = F_{q^2}[t]/(t^p - t - c), used by the
# fixed-point solver: the twisted fixed points satisfy x^{q^2} = x - 2y
# and therefore live in F_{q^{2p}}, a degree-p extension of F_{q^2}.

class ArtinSchreierExtension:
    """Degree-p extension of the tower's F_{q^2} level.

    Elements are tuples of length p of level-2 coefficient tuples
    (coefficients of powers of t, low degree first).
    """

    def __init__(self, tower: TowerContext):
        self.tower = tower
        self.p = tower.p
        self.base = tower.levels[2]
        c = None
        for k in range(self.base.size):
            cand = FieldElement(tower, 2, self.base.decode(k))
            if tower.trace_to_prime(cand) != 0:
                c = cand
                break
        if c is None:
            raise FieldError("no element of nonzero absolute trace")
        self.c = c.coeffs
        self.dim = self.p * self.base.degree  # F_p-dimension
        self.zero = tuple(self.base.zero for _ in range(self.p))
        self.one = (self.base.one,) + tuple(self.base.zero for _ in range(self.p - 1))

    def from_base(self, x: FieldElement):
        x = self.tower.embed(x, 2)
        return (x.coeffs,) + tuple(self.base.zero for _ in range(self.p - 1))

    def t(self):
        out = [self.base.zero] * self.p
        out[1] = self.base.one
        return tuple(out)

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        p = self.p
        out = [self.base.zero] * (2 * p - 1)
        for i, ai in enumerate(a):
            if ai != self.base.zero:
                for j, bj in enumerate(b):
                    out[i + j] = self.base.add(out[i + j], self.base.mul(ai, bj))
        # reduce with t^p = t + c
        for k in range(2 * p - 2, p - 1, -1):
            coeff = out[k]
            if coeff != self.base.zero:
                out[k] = self.base.zero
                out[k - p + 1] = self.base.add(out[k - p + 1], coeff)
                out[k - p] = self.base.add(out[k - p], self.base.mul(coeff, self.c))
        return tuple(out[:p])

    def pow(self, a, n):
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    # -- F_p-linear algebra ---------------------------------------------------

    def flatten(self, a):
        out = []
        for coeff in a:
            out.extend(coeff)
        return out

    def unflatten(self, vec):
        d = self.base.degree
        return tuple(tuple(vec[i * d:(i + 1) * d]) for i in range(self.p))

    def basis(self):
        for i in range(self.dim):
            vec = [0] * self.dim
            vec[i] = 1
            yield self.unflatten(vec)

    def solve_affine(self, linear_map, rhs):
        """All solutions of linear_map(x) = rhs for an F_p-linear map.

        Returns the (possibly empty) list of solutions, enumerated from a
        particular solution plus the kernel.
        """
        p, n = self.p, self.dim
        cols = [self.flatten(linear_map(b)) for b in self.basis()]
        # rows of the augmented system
        aug = [[cols[j][i] for j in range(n)] + [self.flatten(rhs)[i]]
               for i in range(n)]
        pivots = []
        row = 0
        for col in range(n):
            sel = None
            for r in range(row, n):
                if aug[r][col] % p:
                    sel = r
                    break
            if sel is None:
                continue
            aug[row], aug[sel] = aug[sel], aug[row]
            inv = pow(aug[row][col], p - 2, p)
            aug[row] = [(v * inv) % p for v in aug[row]]
            for r in range(n):
                if r != row and aug[r][col] % p:
                    f = aug[r][col]
                    aug[r] = [(v - f * w) % p for v, w in zip(aug[r], aug[row])]
            pivots.append(col)
            row += 1
        for r in range(row, n):
            if aug[r][n] % p:
                return []  # inconsistent
        particular = [0] * n
        for r, col in enumerate(pivots):
            particular[col] = aug[r][n]
        free = [c for c in range(n) if c not in pivots]
        kernel = []
        for fc in free:
            vec = [0] * n
            vec[fc] = 1
            for r, col in enumerate(pivots):
                vec[col] = (-aug[r][fc]) % p
            kernel.append(vec)
        solutions = []
        for combo in itertools.product(range(p), repeat=len(free)):
            vec = list(particular)
            for coeff, kv in zip(combo, kernel):
                if coeff:
                    for i in range(n):
                        vec[i] = (vec[i] + coeff * kv[i]) % p
            solutions.append(self.unflatten(vec))
        return solutions
