"""Exact sparse Laurent-polynomial arithmetic over the rationals.

A polynomial is a dict mapping dense exponent tuples to rational
coefficients.  The variable set is fixed by a :class:`VarTable` holding,
in order, the blocks

    x_1 .. x_n,  y_1 .. y_n,  a_1 .. a_amax,  t

x- and y-variables are Laurent (negative exponents allowed, ``x1^-1``
standing for the inverse of ``x1``); a-variables and ``t`` are ordinary
polynomial variables with exponents >= 0.  Coefficients are Python ints
whenever the value is integral and :class:`fractions.Fraction` otherwise;
the two compare and hash identically, so mixed dicts are safe.

The canonical term order is graded lexicographic over the block order
above (total degree first, then the exponent vector, larger first).  All
serialisation sorts terms this way, so output bytes are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
import heapq
import json


class AlgebraError(Exception):
    """Base class for exact-arithmetic failures."""


class VarTableMismatch(AlgebraError):
    """Operands were built over different variable tables."""


class NonExactDivision(AlgebraError):
    """Polynomial division left a remainder; some identity upstream broke."""


class NonInvertibleBinding(AlgebraError):
    """A negative exponent met a substitution that is not a single monomial."""


class AIndexOutOfRange(AlgebraError):
    """A factorial parameter index exceeds the a_max retained in the table."""


# Determinants switch from cofactor expansion to fraction-free elimination
# above this size; cofactor wins on the small sparse symbolic matrices that
# dominate this package, Bareiss bounds intermediate swell beyond that.
COFACTOR_MAX = 6


_VT_CACHE: dict[tuple[int, int], "VarTable"] = {}


class VarTable:
    """Fixed, totally ordered variable set: x-block, y-block, a-block, t.

    ``n`` is the rank (number of x's and of y's), ``a_max`` the highest
    retained factorial-parameter index.  Tables with equal (n, a_max) are
    interchangeable and compare equal.
    """

    __slots__ = ("n", "a_max", "size", "names", "index", "t_pos")

    def __init__(self, n: int, a_max: int):
        if n < 1:
            raise ValueError("rank n must be >= 1")
        if a_max < 0:
            raise ValueError("a_max must be >= 0")
        self.n = n
        self.a_max = a_max
        names = [f"x{i}" for i in range(1, n + 1)]
        names += [f"y{i}" for i in range(1, n + 1)]
        names += [f"a{k}" for k in range(1, a_max + 1)]
        names.append("t")
        self.names = tuple(names)
        self.index = {name: pos for pos, name in enumerate(names)}
        self.size = len(names)
        self.t_pos = self.size - 1

    def x_pos(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"x index {i} out of range 1..{self.n}")
        return i - 1

    def y_pos(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"y index {i} out of range 1..{self.n}")
        return self.n + i - 1

    def a_pos(self, k: int) -> int:
        if not 1 <= k <= self.a_max:
            raise AIndexOutOfRange(
                f"a index {k} exceeds retained range 1..{self.a_max}")
        return 2 * self.n + k - 1

    def is_laurent(self, pos: int) -> bool:
        return pos < 2 * self.n

    def __eq__(self, other):
        return isinstance(other, VarTable) and (self.n, self.a_max) == (other.n, other.a_max)

    def __hash__(self):
        return hash((self.n, self.a_max))

    def __repr__(self):
        return f"VarTable(n={self.n}, a_max={self.a_max})"


def vartable(n: int, a_max: int) -> VarTable:
    """Cached VarTable constructor; tables are immutable and shared."""
    key = (n, a_max)
    vt = _VT_CACHE.get(key)
    if vt is None:
        vt = _VT_CACHE[key] = VarTable(n, a_max)
    return vt


def vartable_for(n: int, lambda1: int) -> VarTable:
    """Table sized for a computation labelled by a partition with largest
    part ``lambda1``: retains a_1..a_{lambda1+2n}, which covers every
    generating-function product and tableau weight this package forms."""
    return vartable(n, lambda1 + 2 * n)


def _cdiv(a, b):
    """Exact coefficient quotient, staying in int when possible."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return Fraction(a) / Fraction(b)


def _order_key(mono):
    return (sum(mono), mono)


class MultiPoly:
    """Immutable sparse multivariate Laurent polynomial.

    ``terms`` maps dense exponent tuples (one slot per VarTable entry) to
    nonzero int/Fraction coefficients.  Instances are never mutated after
    construction; all operations return fresh values, so sharing across
    threads is safe.
    """

    __slots__ = ("vt", "terms")

    def __init__(self, vt: VarTable, terms: dict):
        self.vt = vt
        self.terms = terms

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vt: VarTable) -> "MultiPoly":
        return cls(vt, {})

    @classmethod
    def const(cls, vt: VarTable, c) -> "MultiPoly":
        if isinstance(c, Fraction) and c.denominator == 1:
            c = c.numerator
        if c == 0:
            return cls(vt, {})
        return cls(vt, {(0,) * vt.size: c})

    @classmethod
    def one(cls, vt: VarTable) -> "MultiPoly":
        return cls.const(vt, 1)

    @classmethod
    def var(cls, vt: VarTable, name: str, exp: int = 1) -> "MultiPoly":
        pos = vt.index.get(name)
        if pos is None:
            raise VarTableMismatch(f"unknown variable {name!r}")
        return cls.var_at(vt, pos, exp)

    @classmethod
    def var_at(cls, vt: VarTable, pos: int, exp: int = 1) -> "MultiPoly":
        if exp == 0:
            return cls.one(vt)
        if exp < 0 and not vt.is_laurent(pos):
            raise ValueError("negative exponents are allowed only on x/y variables")
        mono = [0] * vt.size
        mono[pos] = exp
        return cls(vt, {tuple(mono): 1})

    # -- predicates / views -------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def n_terms(self) -> int:
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vt == other.vt and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"MultiPoly({poly_to_text(self)})"

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=_order_key)

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def uses_t(self) -> bool:
        tp = self.vt.t_pos
        return any(m[tp] for m in self.terms)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.vt != other.vt:
            raise VarTableMismatch("operands use different variable tables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vt, other)
        self._check(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MultiPoly(self.vt, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vt, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vt, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultiPoly.zero(self.vt)
            if other == 1:
                return self
            return MultiPoly(self.vt, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly.zero(self.vt)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(map(int.__add__, ma, mb))
                c = ca * cb
                s = get(m)
                if s is None:
                    out[m] = c
                else:
                    s = s + c
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return MultiPoly(self.vt, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers")
        result = MultiPoly.one(self.vt)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result


def poly_arith(op: str, p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Dispatch add/sub/mul; the operator forms are equivalent."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def monomial(vt: VarTable, coeff, exps: dict[str, int] | None = None) -> MultiPoly:
    """Build a single-term polynomial from a name->exponent map."""
    if isinstance(coeff, Fraction) and coeff.denominator == 1:
        coeff = coeff.numerator
    if coeff == 0:
        return MultiPoly.zero(vt)
    mono = [0] * vt.size
    for name, e in (exps or {}).items():
        pos = vt.index.get(name)
        if pos is None:
            raise VarTableMismatch(f"unknown variable {name!r}")
        if e < 0 and not vt.is_laurent(pos):
            raise ValueError("negative exponents are allowed only on x/y variables")
        mono[pos] = e
    return MultiPoly(vt, {tuple(mono): coeff})


# -- convenience generators -------------------------------------------

def xv(vt: VarTable, i: int) -> MultiPoly:
    return MultiPoly.var_at(vt, vt.x_pos(i))


def xbar(vt: VarTable, i: int) -> MultiPoly:
    return MultiPoly.var_at(vt, vt.x_pos(i), -1)


def yv(vt: VarTable, i: int) -> MultiPoly:
    return MultiPoly.var_at(vt, vt.y_pos(i))


def ybar(vt: VarTable, i: int) -> MultiPoly:
    return MultiPoly.var_at(vt, vt.y_pos(i), -1)


def av(vt: VarTable, k: int) -> MultiPoly:
    return MultiPoly.var_at(vt, vt.a_pos(k))


def add_a(base: MultiPoly, k: int, sign: int = 1) -> MultiPoly:
    """base + sign*a_k, with a_k = 0 understood for k <= 0."""
    if k <= 0:
        return base
    vt = base.vt
    return base + sign * av(vt, k)


def factorial_power(vt: VarTable, i: int, m: int, barred: bool = False) -> MultiPoly:
    """Shifted power replacing the ordinary m-th power of x_i (or of its
    inverse when ``barred``): the product of (x_i^{+-1} + a_k) for k=1..m.
    m=0 gives 1."""
    if m < 0:
        raise ValueError("factorial power needs m >= 0")
    if m > vt.a_max:
        raise AIndexOutOfRange(f"factorial power of order {m} needs a_1..a_{m}, "
                               f"table retains a_max={vt.a_max}")
    base = xbar(vt, i) if barred else xv(vt, i)
    out = MultiPoly.one(vt)
    for k in range(1, m + 1):
        out = out * (base + av(vt, k))
    return out


# -- exact division -----------------------------------------------------

def _col_mins(terms, size):
    it = iter(terms)
    first = next(it)
    mins = list(first)
    for m in it:
        for p, e in enumerate(m):
            if e < mins[p]:
                mins[p] = e
    return mins


def _shift(p: MultiPoly, shift) -> MultiPoly:
    if not any(shift):
        return p
    return MultiPoly(p.vt, {tuple(map(int.__add__, m, shift)): c
                            for m, c in p.terms.items()})


def exact_div(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Exact quotient num/den in the Laurent ring; raises NonExactDivision
    if no polynomial quotient exists.

    The inputs are shifted by per-variable monomials so numerator, divisor
    and quotient all become true polynomials (legal because extreme
    per-variable degrees are additive over products), then ordinary
    term-by-leading-term division under the graded-lex order runs to a
    mandatory zero remainder.
    """
    num._check(den)
    vt = num.vt
    if not den.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num.terms:
        return MultiPoly.zero(vt)

    nlaurent = 2 * vt.n
    mnum = _col_mins(num.terms, vt.size)
    mden = _col_mins(den.terms, vt.size)
    shift_den = [0] * vt.size
    shift_q = [0] * vt.size
    for p in range(nlaurent):
        if mden[p] < 0:
            shift_den[p] = -mden[p]
        gap = mnum[p] - mden[p]
        if gap < 0:
            shift_q[p] = -gap
    shift_num = tuple(a + b for a, b in zip(shift_den, shift_q))

    P = _shift(num, shift_num).terms
    D = _shift(den, tuple(shift_den)).terms
    dlead = max(D, key=_order_key)
    dcoef = D[dlead]
    drest = [(dm, dc) for dm, dc in D.items() if dm != dlead]

    # Lazy max-heap over the running remainder: every key currently in r
    # is on the heap (possibly with stale duplicates), and subtracting a
    # quotient term only introduces monomials below the removed lead, so
    # popping in decreasing order always yields the true leading term.
    def hkey(m):
        return (-sum(m), tuple(-e for e in m), m)

    r = dict(P)
    heap = [hkey(m) for m in r]
    heapq.heapify(heap)
    q: dict = {}
    while heap:
        m = heapq.heappop(heap)[2]
        c = r.get(m)
        if c is None:
            continue
        del r[m]
        qm = tuple(map(int.__sub__, m, dlead))
        if any(e < 0 for e in qm):
            raise NonExactDivision("nonzero remainder in exact division")
        qc = _cdiv(c, dcoef)
        q[qm] = qc
        for dm, dc in drest:
            mm = tuple(map(int.__add__, qm, dm))
            s = r.get(mm)
            if s is None:
                r[mm] = -qc * dc
                heapq.heappush(heap, hkey(mm))
            else:
                s = s - qc * dc
                if s:
                    r[mm] = s
                else:
                    del r[mm]
    unshift = tuple(-s for s in shift_q)
    return _shift(MultiPoly(vt, q), unshift)


# -- determinants --------------------------------------------------------

def determinant(rows, *, vt: VarTable | None = None, method: str = "auto") -> MultiPoly:
    """Exact determinant of a square matrix of MultiPoly.

    Cofactor expansion along the sparsest row up to COFACTOR_MAX, Bareiss
    fraction-free elimination beyond.  The empty matrix has determinant 1
    (pass ``vt`` so the result knows its ring).
    """
    k = len(rows)
    for row in rows:
        if len(row) != k:
            raise ValueError("determinant needs a square matrix")
    if k == 0:
        if vt is None:
            raise ValueError("empty matrix: pass vt to fix the ring")
        return MultiPoly.one(vt)
    v0 = rows[0][0].vt
    for row in rows:
        for e in row:
            if e.vt != v0:
                raise VarTableMismatch("matrix entries use different variable tables")
    if method == "auto":
        method = "cofactor" if k <= COFACTOR_MAX else "bareiss"
    if method == "cofactor":
        return _det_cofactor(rows, v0)
    if method == "bareiss":
        return _det_bareiss(rows, v0)
    raise ValueError(f"unknown determinant method {method!r}")


def _det_cofactor(rows, vt) -> MultiPoly:
    k = len(rows)
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    weights = [sum(e.n_terms() for e in row) for row in rows]
    r = weights.index(min(weights))
    rest = [row for idx, row in enumerate(rows) if idx != r]
    total = MultiPoly.zero(vt)
    for c, entry in enumerate(rows[r]):
        if entry.is_zero():
            continue
        minor = [[row[j] for j in range(k) if j != c] for row in rest]
        cof = entry * _det_cofactor(minor, vt)
        total = total + cof if (r + c) % 2 == 0 else total - cof
    return total


def _det_bareiss(rows, vt) -> MultiPoly:
    k = len(rows)
    m = [list(row) for row in rows]
    sign = 1
    prev = MultiPoly.one(vt)
    for p in range(k - 1):
        pivot_row = next((r for r in range(p, k) if not m[r][p].is_zero()), None)
        if pivot_row is None:
            return MultiPoly.zero(vt)
        if pivot_row != p:
            m[p], m[pivot_row] = m[pivot_row], m[p]
            sign = -sign
        piv = m[p][p]
        for r in range(p + 1, k):
            for c in range(p + 1, k):
                m[r][c] = exact_div(piv * m[r][c] - m[r][p] * m[p][c], prev)
            m[r][p] = MultiPoly.zero(vt)
        prev = piv
    det = m[k - 1][k - 1]
    return det if sign == 1 else -det


# -- substitution --------------------------------------------------------

def _invert_monomial(p: MultiPoly) -> MultiPoly:
    [(mono, coeff)] = p.terms.items()
    vt = p.vt
    for pos, e in enumerate(mono):
        if e and not vt.is_laurent(pos):
            raise NonInvertibleBinding("cannot invert a monomial in a/t variables")
    inv_c = _cdiv(1, coeff)
    return MultiPoly(vt, {tuple(-e for e in mono): inv_c})


def specialize(p: MultiPoly, bindings: dict[str, MultiPoly]) -> MultiPoly:
    """Simultaneous substitution of whole polynomials for variables.

    Unbound variables pass through.  A variable occurring with negative
    exponents may only be bound to a single invertible monomial
    (NonInvertibleBinding otherwise).
    """
    vt = p.vt
    bound: dict[int, MultiPoly] = {}
    for name, b in bindings.items():
        pos = vt.index.get(name)
        if pos is None:
            raise VarTableMismatch(f"unknown variable {name!r}")
        if b.vt != vt:
            raise VarTableMismatch("binding value uses a different variable table")
        if any(m[pos] for m in b.terms):
            raise ValueError(f"binding for {name} must not contain {name}")
        bound[pos] = b
    if not bound or not p.terms:
        return p

    pow_cache: dict[tuple[int, int], MultiPoly] = {}

    def power(pos: int, e: int) -> MultiPoly:
        got = pow_cache.get((pos, e))
        if got is not None:
            return got
        b = bound[pos]
        if e >= 0:
            val = b ** e
        else:
            if len(b.terms) != 1:
                raise NonInvertibleBinding(
                    f"negative exponent of {vt.names[pos]} needs a monomial binding")
            val = _invert_monomial(b) ** (-e)
        pow_cache[(pos, e)] = val
        return val

    positions = sorted(bound)
    total = MultiPoly.zero(vt)
    for mono, c in p.terms.items():
        base = list(mono)
        factors = []
        for pos in positions:
            e = mono[pos]
            if e:
                base[pos] = 0
                factors.append(power(pos, e))
        term = MultiPoly(vt, {tuple(base): c})
        for f in factors:
            term = term * f
        total = total + term
    return total


def project_away_a(p: MultiPoly) -> MultiPoly:
    """Rebuild a polynomial that no longer involves any a-variable over
    the table with a_max = 0 (same rank)."""
    vt = p.vt
    small = vartable(vt.n, 0)
    lo, hi = 2 * vt.n, 2 * vt.n + vt.a_max
    out = {}
    for mono, c in p.terms.items():
        if any(mono[lo:hi]):
            raise ValueError("polynomial still involves a-variables")
        out[mono[:lo] + (mono[vt.t_pos],)] = c
    return MultiPoly(small, out)


def permute_variables(p: MultiPoly, mapping: dict[str, str]) -> MultiPoly:
    """Relabel variables by permuting exponent slots (exact, no expansion).

    ``mapping`` sends old names to new names and must be injective; names
    not mentioned stay put.
    """
    vt = p.vt
    perm = list(range(vt.size))
    for old, new in mapping.items():
        if old not in vt.index or new not in vt.index:
            raise VarTableMismatch("unknown variable in permutation")
        perm[vt.index[old]] = vt.index[new]
    if len(set(perm)) != vt.size:
        raise ValueError("variable permutation must be injective")
    out = {}
    for mono, c in p.terms.items():
        new_mono = [0] * vt.size
        for pos, e in enumerate(mono):
            if e:
                new_mono[perm[pos]] = e
        out[tuple(new_mono)] = c
    return MultiPoly(vt, out)


# -- truncated series in t -----------------------------------------------

class TruncatedSeries:
    """Polynomial in t with t-free MultiPoly coefficients, cut at ``order``.

    Coefficient k of a product depends only on coefficients 0..k of the
    factors, so truncation commutes with everything this package does.
    """

    __slots__ = ("vt", "order", "coeffs")

    def __init__(self, vt: VarTable, order: int, coeffs):
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.vt = vt
        self.order = order
        self.coeffs = list(coeffs)

    @classmethod
    def one(cls, vt: VarTable, order: int) -> "TruncatedSeries":
        coeffs = [MultiPoly.one(vt)] + [MultiPoly.zero(vt) for _ in range(order)]
        return cls(vt, order, coeffs)

    def coeff(self, m: int) -> MultiPoly:
        if m < 0 or m > self.order:
            return MultiPoly.zero(self.vt)
        return self.coeffs[m]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.vt != other.vt or self.order != other.order:
            raise VarTableMismatch("series mismatch in add")
        return TruncatedSeries(self.vt, self.order,
                               [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.vt != other.vt or self.order != other.order:
            raise VarTableMismatch("series mismatch in mul")
        zero = MultiPoly.zero(self.vt)
        out = [zero] * (self.order + 1)
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            for j in range(self.order + 1 - i):
                cj = other.coeffs[j]
                if cj.is_zero():
                    continue
                out[i + j] = out[i + j] + ci * cj
        return TruncatedSeries(self.vt, self.order, out)

    def mul_linear(self, v: MultiPoly) -> "TruncatedSeries":
        """Multiply by (1 + t*v) in one pass."""
        out = [self.coeffs[0]]
        for k in range(1, self.order + 1):
            out.append(self.coeffs[k] + v * self.coeffs[k - 1])
        return TruncatedSeries(self.vt, self.order, out)

    def mul_geometric(self, v: MultiPoly) -> "TruncatedSeries":
        """Multiply by 1/(1 - t*v) via r_k = c_k + v*r_{k-1}."""
        out = [self.coeffs[0]]
        for k in range(1, self.order + 1):
            out.append(self.coeffs[k] + v * out[k - 1])
        return TruncatedSeries(self.vt, self.order, out)


def series_inverse_linear(vt: VarTable, v: MultiPoly, sign: int, order: int) -> TruncatedSeries:
    """Expansion of 1/(1-tv) for sign=-1 (all powers of v up to t^order),
    or the two-term series 1+tv for sign=+1."""
    if sign == -1:
        return TruncatedSeries.one(vt, order).mul_geometric(v)
    if sign == +1:
        return TruncatedSeries.one(vt, order).mul_linear(v)
    raise ValueError("sign must be +1 or -1")


def coeff_of_t(s: TruncatedSeries, m: int) -> MultiPoly:
    return s.coeff(m)


# -- canonical serialisation ---------------------------------------------

def sorted_terms(p: MultiPoly):
    """Terms in canonical order: graded-lex, leading term first."""
    return sorted(p.terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)


def _coeff_str(c) -> str:
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}"


def poly_to_obj(p: MultiPoly) -> dict:
    vt = p.vt
    terms = []
    for mono, c in sorted_terms(p):
        e = {vt.names[pos]: exp for pos, exp in enumerate(mono) if exp}
        terms.append({"c": _coeff_str(c), "e": e})
    return {"vars": list(vt.names), "terms": terms}


def poly_to_json(p: MultiPoly) -> str:
    return json.dumps(poly_to_obj(p), separators=(",", ":"))


def poly_from_obj(vt: VarTable, obj: dict) -> MultiPoly:
    if list(obj.get("vars", [])) != list(vt.names):
        raise VarTableMismatch("serialised variable list does not match table")
    terms = {}
    for t in obj["terms"]:
        num, _, den = t["c"].partition("/")
        coeff = Fraction(int(num), int(den or "1"))
        if coeff.denominator == 1:
            coeff = coeff.numerator
        mono = [0] * vt.size
        for name, e in t["e"].items():
            pos = vt.index.get(name)
            if pos is None:
                raise VarTableMismatch(f"unknown variable {name!r}")
            mono[pos] = int(e)
        if coeff:
            terms[tuple(mono)] = coeff
    return MultiPoly(vt, terms)


def poly_from_json(vt: VarTable, text: str) -> MultiPoly:
    return poly_from_obj(vt, json.loads(text))


def poly_to_text(p: MultiPoly) -> str:
    """Human-readable canonical rendering: `c * x1^2 * a3` terms joined
    with ' + ', leading term first."""
    if not p.terms:
        return "0"
    vt = p.vt
    chunks = []
    for mono, c in sorted_terms(p):
        f = Fraction(c)
        cs = str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
        factors = [cs]
        for pos, e in enumerate(mono):
            if not e:
                continue
            name = vt.names[pos]
            factors.append(name if e == 1 else f"{name}^{e}")
        chunks.append(" * ".join(factors))
    return " + ".join(chunks)
