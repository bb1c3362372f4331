"""Factorial Q-functions: primed-tableau sums, determinantal sums over
diagonal supports, the auxiliary generating-function families, and the
Tokuyama-type factorisation check.

Kinds mirror the tableau families: glQ in x, y; spQ and soQ additionally
in the inverses xbar, ybar (and soQ carries the fixed eigenvalue 1).
Everywhere a_0 = 0, so diagonal cells weigh bare variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .algebra import (AIndexOutOfRange, MultiPoly, TruncatedSeries, VarTable,
                      av, coeff_of_t, determinant, xbar, xv, ybar, yv)
from .characters import char_flagged_jt
from .partitions import as_parts, is_strict
from .tableaux import tableau_weight_sum

QFUNC_KINDS = ("glQ", "spQ", "soQ")

_CHAR_KIND = {"glQ": "gl", "spQ": "sp", "soQ": "so"}


def _check_kind(kind: str):
    if kind not in QFUNC_KINDS:
        raise ValueError(f"unknown Q-function kind {kind!r}")


def _check_strict(kind: str, lam, vt: VarTable) -> tuple[int, ...]:
    parts = as_parts(lam)
    if not is_strict(parts):
        raise ValueError(f"{parts} is not a strict partition")
    if len(parts) > vt.n:
        raise ValueError(f"partition {parts} longer than rank n={vt.n}")
    first = parts[0] if parts else 0
    if vt.a_max < first + 2 * vt.n:
        raise AIndexOutOfRange(
            f"table retains a_max={vt.a_max} but this computation is sized "
            f"for a_max >= {first + 2 * vt.n}")
    return parts


# -- tableau route -----------------------------------------------------------


def q_tableaux(kind: str, lam, vt: VarTable) -> MultiPoly:
    """Sum of cell-weight products over all primed shifted tableaux of the
    given strict shape."""
    _check_kind(kind)
    parts = _check_strict(kind, lam, vt)
    return tableau_weight_sum(kind, parts, vt.n, vt)


# -- generating-function families --------------------------------------------


def qtilde(m: int, us, vs, vt: VarTable) -> MultiPoly:
    """[t^m] of prod 1/(1-t u) * prod (1+t v) * prod_{k=1}^{m+r-s-1} (1+t a_k),
    for arbitrary lists of Laurent polynomials u (geometric factors) and v
    (linear factors) with r = len(u), s = len(v); parameter factors with
    k <= 0 are skipped.  The odd-orthogonal families pass the constant 1
    as one of the v entries, which costs a parameter slot like any other
    linear factor."""
    if m < 0:
        return MultiPoly.zero(vt)
    us = list(us)
    vs = list(vs)
    limit = m + len(us) - len(vs) - 1
    if limit > vt.a_max:
        raise AIndexOutOfRange(
            f"needs a_1..a_{limit}, table retains a_max={vt.a_max}")
    s = TruncatedSeries.one(vt, m)
    for u in us:
        s = s.mul_geometric(u)
    for v in vs:
        s = s.mul_linear(v)
    for k in range(1, limit + 1):
        s = s.mul_linear(av(vt, k))
    return coeff_of_t(s, m)


@lru_cache(maxsize=None)
def _q_md_cached(kind: str, m: int, d: int, vt: VarTable) -> MultiPoly:
    n = vt.n
    s = TruncatedSeries.one(vt, m)
    for i in range(d, n + 1):
        s = s.mul_geometric(xv(vt, i))
        if kind in ("spQ", "soQ"):
            s = s.mul_geometric(xbar(vt, i))
    for j in range(d + 1, n + 1):
        s = s.mul_linear(yv(vt, j))
        if kind in ("spQ", "soQ"):
            s = s.mul_linear(ybar(vt, j))
    limit = m - 1 if kind == "soQ" else m
    if kind == "soQ":
        s = s.mul_linear(MultiPoly.one(vt))
    for k in range(1, limit + 1):
        s = s.mul_linear(av(vt, k))
    return coeff_of_t(s, m)


def q_md(kind: str, m: int, d: int, vt: VarTable) -> MultiPoly:
    """[t^m] of the kind's row generating function at flag d: geometric
    factors in x_d..x_n (and inverses), linear factors in y_{d+1}..y_n
    (and inverses), and parameter factors a_1..a_m.  For soQ the fixed
    eigenvalue contributes an extra (1+t) linear factor that consumes one
    parameter slot, so its parameter product stops at a_{m-1}; this is the
    form the primed-tableau sums actually satisfy (see test suite)."""
    _check_kind(kind)
    if not 1 <= d <= vt.n:
        raise ValueError(f"flag d={d} out of range 1..{vt.n}")
    if m < 0:
        return MultiPoly.zero(vt)
    if m > vt.a_max:
        raise AIndexOutOfRange(f"needs a_1..a_{m}, table retains a_max={vt.a_max}")
    return _q_md_cached(kind, m, d, vt)


def f_mpqn(kind: str, m: int, p: int, q: int, vt: VarTable) -> MultiPoly:
    """Two-flag interpolant between the q family (p = q) and the character
    h family (q = n): geometric factors in x_p..x_n (and inverses), linear
    factors in y_{q+1}..y_n (and inverses), and parameters a_1..a_{m+q-p}.
    For soQ the extra (1+t) factor again consumes one parameter slot, so
    the product stops at a_{m+q-p-1}, matching q_md at p = q."""
    _check_kind(kind)
    n = vt.n
    if not 1 <= p <= q <= n:
        raise ValueError(f"need 1 <= p <= q <= n, got p={p}, q={q}, n={n}")
    if m < 0:
        return MultiPoly.zero(vt)
    limit = m + q - p - 1 if kind == "soQ" else m + q - p
    if limit > vt.a_max:
        raise AIndexOutOfRange(f"needs a_1..a_{limit}, table retains a_max={vt.a_max}")
    s = TruncatedSeries.one(vt, m)
    for i in range(p, n + 1):
        s = s.mul_geometric(xv(vt, i))
        if kind in ("spQ", "soQ"):
            s = s.mul_geometric(xbar(vt, i))
    for j in range(q + 1, n + 1):
        s = s.mul_linear(yv(vt, j))
        if kind in ("spQ", "soQ"):
            s = s.mul_linear(ybar(vt, j))
    if kind == "soQ":
        s = s.mul_linear(MultiPoly.one(vt))
    for k in range(1, limit + 1):
        s = s.mul_linear(av(vt, k))
    return coeff_of_t(s, m)


def shift_a_down(p: MultiPoly, vt: VarTable) -> MultiPoly:
    """Substitute a_k -> a_{k-1} (with a_0 = 0) throughout."""
    from .algebra import specialize
    bindings = {"a1": MultiPoly.zero(vt)}
    for k in range(2, vt.a_max + 1):
        bindings[f"a{k}"] = av(vt, k - 1)
    return specialize(p, bindings)


# -- determinantal route ------------------------------------------------------


def diagonal_prefactor(kind: str, d: int, vt: VarTable) -> MultiPoly:
    if kind == "glQ":
        return xv(vt, d) + yv(vt, d)
    return xv(vt, d) + yv(vt, d) + xbar(vt, d) + ybar(vt, d)


def q_determinantal(kind: str, lam, vt: VarTable) -> MultiPoly:
    """Sum over all strictly increasing diagonal supports d of the l x l
    determinant with (i, j) entry prefactor(d_i) * q_{lam_j - 1} at flag
    d_i.  Supports that contribute zero are still enumerated."""
    _check_kind(kind)
    parts = _check_strict(kind, lam, vt)
    n = vt.n
    ell = len(parts)
    if ell == 0:
        return MultiPoly.one(vt)
    total = MultiPoly.zero(vt)
    for d in combinations(range(1, n + 1), ell):
        rows = []
        for di in d:
            pref = diagonal_prefactor(kind, di, vt)
            rows.append([pref * q_md(kind, parts[j] - 1, di, vt)
                         for j in range(ell)])
        total = total + determinant(rows, vt=vt)
    return total


Q_ROUTES = {"tab": q_tableaux, "det": q_determinantal}


def qfunction(kind: str, lam, vt: VarTable, method: str = "det") -> MultiPoly:
    try:
        route = Q_ROUTES[method]
    except KeyError:
        raise ValueError(f"unknown Q-function method {method!r}") from None
    return route(kind, lam, vt)


# -- Tokuyama factorisation ---------------------------------------------------


@dataclass(frozen=True)
class TokuyamaReport:
    kind: str
    mu: tuple[int, ...]
    n: int
    lhs: MultiPoly
    rhs: MultiPoly
    equal: bool

    def to_obj(self) -> dict:
        return {"identity": "tokuyama", "kind": self.kind, "mu": list(self.mu),
                "n": self.n, "equal": self.equal,
                "lhs_terms": self.lhs.n_terms(), "rhs_terms": self.rhs.n_terms()}


def staircase(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def verify_tokuyama(kind: str, mu, vt: VarTable) -> TokuyamaReport:
    """Compare the Q-function at shape mu+delta (delta the staircase, so
    the shape is strict of full length n) with the product of linear
    prefactors times the matching factorial character of mu.  The
    character factor uses the division-free flagged determinant route; in
    the odd-orthogonal case it enters with its parameter sequence shifted
    down one slot (a_k -> a_{k-1}), which is the factorisation the
    primed-tableau definition actually admits: the fixed eigenvalue
    absorbs the first parameter of every row."""
    _check_kind(kind)
    n = vt.n
    mu_parts = as_parts(mu)
    if len(mu_parts) > n:
        raise ValueError(f"mu {mu_parts} longer than rank n={n}")
    if any(mu_parts[i] < mu_parts[i + 1] for i in range(len(mu_parts) - 1)):
        raise ValueError(f"{mu_parts} is not a partition")
    padded = mu_parts + (0,) * (n - len(mu_parts))
    lam = tuple(padded[i] + (n - i) for i in range(n))
    lhs = q_tableaux(kind, lam, vt)
    rhs = char_flagged_jt(_CHAR_KIND[kind], mu_parts, vt)
    if kind == "soQ":
        rhs = shift_a_down(rhs, vt)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if kind == "glQ":
                rhs = rhs * (xv(vt, i) + yv(vt, j))
            else:
                rhs = rhs * (xv(vt, i) + yv(vt, j) + xbar(vt, i) + ybar(vt, j))
    return TokuyamaReport(kind, mu_parts, n, lhs, rhs, lhs == rhs)
