"""Dimension formulas and the character theory of mu_{q+1} x| Z/2.

The semidirect product of mu_{q+1} by the inversion involution is the
rank-2 orthogonal group of minus type over F_q; its ordinary and mod-l
representation theory is small enough to build exactly.  Dimension
formulas for the isotypic pieces of the two cohomology families are
collected here as pure integer arithmetic with divisibility asserts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclotomic import CycNumber, CycError


class CharacterError(ValueError):
    pass


def char_of(q: int) -> int:
    """The prime p with q = p^e."""
    from .fields import prime_factors
    fs = prime_factors(q)
    if len(fs) != 1:
        raise CharacterError(f"q = {q} is not a prime power")
    return fs[0]


def _exact_div(num: int, den: int) -> int:
    if num % den:
        raise CharacterError(f"{num} is not divisible by {den}")
    return num // den


# ---------------------------------------------------------------------------
# Dimension formulas.

def dim_v_isotypic(n: int, q: int, trivial: bool) -> int:
    """Dimension of the chi-isotypic part of the middle cohomology of
    the degree-(q+1) hypersurface complement family, ordinary
    coefficients; n >= 2."""
    if n < 2:
        raise CharacterError("n must be at least 2")
    s = (-1) ** n
    if trivial:
        return _exact_div(q ** n + s * q, q + 1)
    return _exact_div(q ** n - s, q + 1)


@dataclass(frozen=True)
class IsotypicLabel:
    """A character of mu_{q+1} by exponent k, with a Frobenius sign
    kappa ('+' or '-') when the character is inversion-stable."""
    k: int
    kappa: str | None = None


def dim_w_isotypic(n: int, q: int, label: IsotypicLabel) -> int:
    """Dimension of the isotypic piece of the symplectic-side family
    for Sp_{2n}; n >= 1."""
    if n < 1:
        raise CharacterError("n must be at least 1")
    m = q + 1
    k = label.k % m
    if (2 * k) % m == 0:
        if label.kappa not in ("+", "-"):
            raise CharacterError("an inversion-stable character needs kappa")
        if k == 0:
            s = 1 if label.kappa == "+" else -1
            return _exact_div((q ** n + s) * (q ** n + s * q), 2 * m)
        # the order-2 character; only exists for q odd
        if char_of(q) == 2:
            raise CharacterError("no order-2 character when q + 1 is odd")
        return _exact_div(q ** (2 * n) - 1, 2 * m)
    if label.kappa is not None:
        raise CharacterError("kappa only applies to inversion-stable characters")
    return _exact_div(q ** (2 * n) - 1, m)


def ell_parts(q: int, ell: int) -> tuple[int, int]:
    """(l^a, r) with q + 1 = l^a r and l coprime to r."""
    m = q + 1
    la = 1
    while m % ell == 0:
        m //= ell
        la *= ell
    return la, m


def dim_mod_ell_unitary(n: int, q: int, k: int, ell: int) -> int:
    """Mod-l dimension of the k-isotypic part on the unitary side.

    The reduction of chi_k factors through the prime-to-l quotient
    mu_r of mu_{q+1}; only k mod r matters."""
    p = char_of(q)
    if ell == p or ell == 2 or not _is_prime(ell):
        raise CharacterError("ell must be an odd prime different from p")
    if n < 2:
        raise CharacterError("n must be at least 2")
    la, r = ell_parts(q, ell)
    if la == 1:
        return dim_v_isotypic(n, q, trivial=(k % (q + 1) == 0))
    s = (-1) ** n
    base = _exact_div(q ** n - s, q + 1)
    if k % r == 0:
        return base + (1 + s) // 2
    return base


def _is_prime(n: int) -> bool:
    from .fields import is_prime
    return is_prime(n)


# ---------------------------------------------------------------------------
# The dihedral group of order 2(q+1).

@dataclass(frozen=True)
class DihedralClass:
    kind: str          # "rot" or "refl"
    rep: int           # rotation exponent, or reflection parity
    size: int
    element_order: int

    def label(self) -> str:
        if self.kind == "rot":
            return f"r{self.rep}"
        return f"s{self.rep}"


@dataclass(frozen=True)
class DihedralIrrep:
    kind: str          # "one" or "two"
    xi: int            # character exponent mod q+1
    kappa: str | None  # sign for kind == "one"

    @property
    def dim(self) -> int:
        return 1 if self.kind == "one" else 2

    def label(self) -> str:
        if self.kind == "one":
            return f"({self.xi},{self.kappa})"
        return f"sigma{self.xi}"


def conjugacy_classes(q: int) -> list[DihedralClass]:
    m = q + 1
    out = []
    for k in range(m // 2 + 1):
        if k == 0:
            out.append(DihedralClass("rot", 0, 1, 1))
        elif 2 * k == m:
            out.append(DihedralClass("rot", k, 1, 2))
        else:
            out.append(DihedralClass("rot", k, 2, m // gcd(m, k)))
    if m % 2 == 1:
        out.append(DihedralClass("refl", 0, m, 2))
    else:
        out.append(DihedralClass("refl", 0, m // 2, 2))
        out.append(DihedralClass("refl", 1, m // 2, 2))
    assert sum(c.size for c in out) == 2 * m
    return out


def ordinary_irreps(q: int) -> list[DihedralIrrep]:
    m = q + 1
    out = [DihedralIrrep("one", 0, "+"), DihedralIrrep("one", 0, "-")]
    if m % 2 == 0:
        out.append(DihedralIrrep("one", m // 2, "+"))
        out.append(DihedralIrrep("one", m // 2, "-"))
    for xi in range(1, (m + 1) // 2):
        if 2 * xi != m:
            out.append(DihedralIrrep("two", xi, None))
    return out


def brauer_irreps(q: int, ell: int) -> list[DihedralIrrep]:
    """Mod-l irreducibles: characters through the prime-to-l quotient."""
    p = char_of(q)
    if ell == p or ell == 2 or not _is_prime(ell):
        raise CharacterError("ell must be an odd prime different from p")
    m = q + 1
    la, r = ell_parts(q, ell)
    out = [DihedralIrrep("one", 0, "+"), DihedralIrrep("one", 0, "-")]
    if r % 2 == 0:
        out.append(DihedralIrrep("one", m // 2, "+"))
        out.append(DihedralIrrep("one", m // 2, "-"))
    for j in range(1, (r + 1) // 2):
        if 2 * j != r:
            out.append(DihedralIrrep("two", j * la, None))
    return out


def ell_regular_classes(q: int, ell: int) -> list[DihedralClass]:
    return [c for c in conjugacy_classes(q) if c.element_order % ell != 0]


def irrep_value(q: int, irrep: DihedralIrrep, cls: DihedralClass,
                conductor: int | None = None) -> CycNumber:
    """Exact character value; lives in Q(zeta_{p(q+1)}) by default."""
    m_small = q + 1
    m = conductor if conductor is not None else char_of(q) * m_small
    step = m // m_small  # zeta_{q+1} = zeta_m^step
    if irrep.kind == "one":
        sign = 1
        if irrep.xi:  # the order-2 character
            sign = (-1) ** cls.rep if cls.kind == "rot" else (-1) ** cls.rep
        if cls.kind == "refl":
            sign *= 1 if irrep.kappa == "+" else -1
        return CycNumber.from_rational(m, sign)
    if cls.kind == "refl":
        return CycNumber.from_rational(m, 0)
    e = (irrep.xi * cls.rep) % m_small
    return (CycNumber.root_of_unity(m, step * e)
            + CycNumber.root_of_unity(m, (-step * e) % m))


@dataclass
class CharacterTable:
    q: int
    mode: str                      # "ordinary" or "mod-ell"
    ell: int | None
    conductor: int
    classes: list
    irreps: list
    values: list                   # values[i][j] = irreps[i] at classes[j]

    def group_order(self) -> int:
        return 2 * (self.q + 1)

    def row_orthogonality_ok(self) -> bool:
        """Ordinary tables only: <chi_i, chi_j> = delta_ij."""
        n = len(self.irreps)
        order = self.group_order()
        for i in range(n):
            for j in range(n):
                acc = CycNumber.from_rational(self.conductor, 0)
                for c, cls in enumerate(self.classes):
                    acc = acc + cls.size * self.values[i][c] * self.values[j][c].conjugate()
                want = order if i == j else 0
                if acc != CycNumber.from_rational(self.conductor, want):
                    return False
        return True

    def column_orthogonality_ok(self) -> bool:
        order = self.group_order()
        for a, ca in enumerate(self.classes):
            for b, cb in enumerate(self.classes):
                acc = CycNumber.from_rational(self.conductor, 0)
                for i in range(len(self.irreps)):
                    acc = acc + self.values[i][a] * self.values[i][b].conjugate()
                want = Fraction(order, ca.size) if a == b else Fraction(0)
                if acc != CycNumber.from_rational(self.conductor, want):
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "mode": self.mode,
            "ell": self.ell,
            "conductor": self.conductor,
            "group_order": self.group_order(),
            "classes": [
                {"label": c.label(), "kind": c.kind, "rep": c.rep,
                 "size": c.size, "element_order": c.element_order}
                for c in self.classes
            ],
            "irreps": [
                {"label": r.label(), "kind": r.kind, "xi": r.xi,
                 "kappa": r.kappa, "dim": r.dim}
                for r in self.irreps
            ],
            "values": [[v.to_json() for v in row] for row in self.values],
        }


def o_minus_table(q: int, mode: str = "ordinary",
                  ell: int | None = None) -> CharacterTable:
    """Character table of the dihedral group of order 2(q+1).

    mode "ordinary": full table over Q(zeta); mode "mod-ell": Brauer
    character table on l-regular classes."""
    m = char_of(q) * (q + 1)
    if mode == "ordinary":
        classes = conjugacy_classes(q)
        irreps = ordinary_irreps(q)
    elif mode == "mod-ell":
        if ell is None:
            raise CharacterError("mod-ell mode needs ell")
        classes = ell_regular_classes(q, ell)
        irreps = brauer_irreps(q, ell)
        if len(classes) != len(irreps):
            raise CharacterError("Brauer table is not square")
    else:
        raise CharacterError(f"unknown mode {mode!r}")
    values = [[irrep_value(q, r, c, m) for c in classes] for r in irreps]
    return CharacterTable(q, mode, ell if mode == "mod-ell" else None,
                          m, classes, irreps, values)


def brauer_decompose(q: int, ell: int, irrep: DihedralIrrep) -> list:
    """Multiplicities of the mod-l irreducibles in the reduction of an
    ordinary irreducible, by exact linear solve on l-regular classes.

    Returns [(DihedralIrrep, multiplicity), ...] with multiplicity > 0.
    """
    table = o_minus_table(q, "mod-ell", ell)
    classes = table.classes
    cols = table.irreps
    m = table.conductor
    nrow = len(classes)
    # augmented matrix: columns are Brauer rows transposed, rhs is the
    # restricted ordinary character
    aug = [[table.values[j][i] for j in range(len(cols))]
           + [irrep_value(q, irrep, classes[i], m)]
           for i in range(nrow)]
    ncol = len(cols)
    row = 0
    pivots = []
    for col in range(ncol):
        sel = None
        for r in range(row, nrow):
            if not aug[r][col].is_zero():
                sel = r
                break
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [v * inv for v in aug[row]]
        for r in range(nrow):
            if r != row and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, nrow):
        if not aug[r][ncol].is_zero():
            raise CharacterError("restriction is not in the Brauer span")
    mult = [CycNumber.from_rational(m, 0)] * ncol
    for r, col in enumerate(pivots):
        mult[col] = aug[r][ncol]
    out = []
    for irr, v in zip(cols, mult):
        if not v.is_integer():
            raise CharacterError("non-integral Brauer multiplicity")
        n = int(v.as_rational())
        if n < 0:
            raise CharacterError("negative Brauer multiplicity")
        if n:
            out.append((irr, n))
    # sanity: dimensions add up
    total = sum(n * i.dim for i, n in out)
    if total != irrep.dim:
        raise CharacterError("Brauer constituents do not fill the dimension")
    return out
