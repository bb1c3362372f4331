"""Identity suites: exhaustive checks over bounded parameter grids.

Each suite enumerates its grid in a fixed order, evaluates every case
exactly (zero tolerance), and returns a SuiteReport whose case list is
ordered by case index regardless of how the work was scheduled.  Suites
never sample at the default bounds; the seed parameter is reserved for
future randomised variants and is accepted but unused today.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .algebra import MultiPoly, vartable_for, xbar, xv, ybar, yv
from .characters import (CHAR_ROUTES, GROUP_KINDS, h_factorial, h_range,
                         one_part_expansion)
from .lattice import tableau_to_paths
from .partitions import enumerate_partitions
from .qfunctions import (QFUNC_KINDS, f_mpqn, q_determinantal, q_md,
                         q_tableaux, qtilde, shift_a_down, verify_tokuyama)
from .tableaux import (ALL_KINDS, CHAR_KINDS, Q_KINDS, enumerate_tableaux,
                       tableau_weight)

SUITES = ("routes", "jt-vs-def", "q-routes", "tokuyama", "h-diff", "f-diff", "lgv")


@dataclass
class CaseResult:
    index: int
    inputs: dict
    equal: bool
    detail: dict = field(default_factory=dict)
    ms: float = 0.0

    def to_obj(self) -> dict:
        obj = {"case": self.index, "inputs": self.inputs, "equal": self.equal}
        obj.update(self.detail)
        obj["ms"] = round(self.ms, 1)
        return obj


@dataclass
class SuiteReport:
    suite: str
    cases: list[CaseResult]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.equal)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if not c.equal)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def first_failure(self) -> CaseResult | None:
        for c in self.cases:
            if not c.equal:
                return c
        return None

    def to_obj(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "failed": self.failed,
                "cases": [c.to_obj() for c in self.cases]}


def _run_cases(suite: str, cases, jobs: int = 1) -> SuiteReport:
    """cases: list of (inputs_dict, thunk) where thunk() -> (equal, detail)."""

    def run_one(item):
        index, (inputs, thunk) = item
        t0 = time.perf_counter()
        equal, detail = thunk()
        return CaseResult(index, inputs, equal, detail,
                          (time.perf_counter() - t0) * 1000.0)

    indexed = list(enumerate(cases))
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_one, indexed))
    else:
        results = [run_one(item) for item in indexed]
    results.sort(key=lambda c: c.index)
    return SuiteReport(suite, results)


def _char_kinds(kind_filter):
    if kind_filter is None:
        return GROUP_KINDS
    if kind_filter not in GROUP_KINDS:
        raise ValueError(f"character suite kind must be one of {GROUP_KINDS}")
    return (kind_filter,)


def _q_kinds(kind_filter):
    if kind_filter is None:
        return QFUNC_KINDS
    if kind_filter not in QFUNC_KINDS:
        raise ValueError(f"Q suite kind must be one of {QFUNC_KINDS}")
    return (kind_filter,)


# -- character route suites -------------------------------------------------


def suite_routes(n_max: int = 2, lambda_max: int = 3, kind: str | None = None,
                 jobs: int = 1, methods=("def", "hdet", "jt", "tab")) -> SuiteReport:
    """All requested character routes agree on every (kind, n, shape)."""
    cases = []
    for k in _char_kinds(kind):
        for n in range(1, n_max + 1):
            for lam in enumerate_partitions(lambda_max, n):
                cases.append(_route_case(k, n, lam.parts, methods))
    return _run_cases("routes", cases, jobs)


def suite_jt_vs_def(n_max: int = 2, lambda_max: int = 3, kind: str | None = None,
                    jobs: int = 1) -> SuiteReport:
    report = suite_routes(n_max, lambda_max, kind, jobs, methods=("jt", "def"))
    return SuiteReport("jt-vs-def", report.cases)


def _route_case(kind, n, parts, methods):
    inputs = {"kind": kind, "n": n, "lambda": list(parts),
              "routes": list(methods)}

    def thunk():
        vt = vartable_for(n, parts[0] if parts else 0)
        values = {m: CHAR_ROUTES[m](kind, parts, vt) for m in methods}
        first = values[methods[0]]
        equal = all(v == first for v in values.values())
        return equal, {"terms": first.n_terms()}

    return inputs, thunk


# -- Q-function suites --------------------------------------------------------


def suite_q_routes(n_max: int = 2, lambda_max: int = 3, kind: str | None = None,
                   jobs: int = 1) -> SuiteReport:
    cases = []
    for k in _q_kinds(kind):
        for n in range(1, n_max + 1):
            for lam in enumerate_partitions(lambda_max, n, strict=True):
                cases.append(_q_route_case(k, n, lam.parts))
    return _run_cases("q-routes", cases, jobs)


def _q_route_case(kind, n, parts):
    inputs = {"identity": "q-routes", "kind": kind, "n": n, "lambda": list(parts)}

    def thunk():
        vt = vartable_for(n, parts[0] if parts else 0)
        lhs = q_tableaux(kind, parts, vt)
        rhs = q_determinantal(kind, parts, vt)
        return lhs == rhs, {"lhs_terms": lhs.n_terms(), "rhs_terms": rhs.n_terms()}

    return inputs, thunk


def suite_tokuyama(n_max: int = 2, mu_max: int = 2, kind: str | None = None,
                   jobs: int = 1) -> SuiteReport:
    """Tokuyama factorisation over all mu with |mu| <= mu_max."""
    cases = []
    for k in _q_kinds(kind):
        for n in range(1, n_max + 1):
            for mu in enumerate_partitions(mu_max, n):
                if mu.size > mu_max:
                    continue
                cases.append(_tokuyama_case(k, n, mu.parts))
    return _run_cases("tokuyama", cases, jobs)


def _tokuyama_case(kind, n, mu):
    inputs = {"identity": "tokuyama", "kind": kind, "mu": list(mu), "n": n}

    def thunk():
        vt = vartable_for(n, (mu[0] if mu else 0) + n)
        rep = verify_tokuyama(kind, mu, vt)
        return rep.equal, {"lhs_terms": rep.lhs.n_terms(),
                           "rhs_terms": rep.rhs.n_terms()}

    return inputs, thunk


# -- h-family lemma suite -----------------------------------------------------


def suite_h_diff(n_max: int = 2, m_max: int = 4, kind: str | None = None,
                 jobs: int = 1) -> SuiteReport:
    """One-variable-block difference relations, the last-variable
    recursion, the closed-form denominator determinants, and the one-part
    expansions."""
    cases = []
    for k in _char_kinds(kind):
        for n in range(1, n_max + 1):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    for m in range(0, m_max + 1):
                        cases.append(_h_diff_case(k, n, i, j, m))
            for m in range(0, m_max + 1):
                if k == "gl":
                    cases.append(_h_recursion_case(k, n, m))
                cases.append(_one_part_case(k, n, m))
            cases.append(_h_denominator_case(k, n))
    return _run_cases("h-diff", cases, jobs)


def _h_diff_case(kind, n, i, j, m):
    inputs = {"identity": "h-diff", "kind": kind, "n": n, "i": i, "j": j, "m": m}

    def thunk():
        vt = vartable_for(n, m)
        lhs = h_range(kind, m, i, j - 1, vt) - h_range(kind, m, i + 1, j, vt)
        factor = xv(vt, i) - xv(vt, j)
        if kind in ("sp", "so"):
            factor = factor * (MultiPoly.one(vt) - xbar(vt, i) * xbar(vt, j))
        rhs = factor * h_range(kind, m - 1, i, j, vt)
        return lhs == rhs, {}

    return inputs, thunk


def _h_recursion_case(kind, n, m):
    inputs = {"identity": "h-recursion", "kind": kind, "n": n, "m": m}

    def thunk():
        from .algebra import add_a
        vt = vartable_for(n, m)
        full = h_range(kind, m, 1, n, vt)
        head = h_range(kind, m, 1, n - 1, vt)
        rhs = head + add_a(xv(vt, n), m + n - 1) * h_range(kind, m - 1, 1, n, vt)
        return full == rhs, {}

    return inputs, thunk


def _one_part_case(kind, n, m):
    inputs = {"identity": "one-part", "kind": kind, "n": n, "m": m}

    def thunk():
        vt = vartable_for(n, m)
        return one_part_expansion(kind, m, vt) == h_factorial(kind, m, 1, vt), {}

    return inputs, thunk


def _h_denominator_case(kind, n):
    inputs = {"identity": "h-denominator", "kind": kind, "n": n}

    def thunk():
        from .algebra import determinant
        from .characters import h_one_var, _def_entry
        vt = vartable_for(n, 0 if kind == "gl" else 1)
        hd = determinant([[h_one_var(kind, n - j, i, vt) for j in range(1, n + 1)]
                          for i in range(1, n + 1)], vt=vt)
        expect = MultiPoly.one(vt)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                expect = expect * (xv(vt, i) - xv(vt, j))
                if kind in ("sp", "so"):
                    expect = expect * (MultiPoly.one(vt)
                                       - xbar(vt, i) * xbar(vt, j))
        ok = hd == expect
        # the defining denominator differs by the per-row scaling factor
        dd = determinant([[_def_entry(kind, i, n - j, vt) for j in range(1, n + 1)]
                          for i in range(1, n + 1)], vt=vt)
        scale = MultiPoly.one(vt)
        for i in range(1, n + 1):
            if kind == "sp":
                scale = scale * (xv(vt, i) - xbar(vt, i))
            elif kind == "so":
                scale = scale * (xv(vt, i) - MultiPoly.one(vt))
        ok = ok and dd == scale * expect
        return ok, {}

    return inputs, thunk


# -- f / qtilde lemma suite ----------------------------------------------------


def suite_f_diff(n_max: int = 2, m_max: int = 4, kind: str | None = None,
                 jobs: int = 1) -> SuiteReport:
    """f difference relations and reductions, the qtilde recursions, and
    the diagonal-prefactor bridge identities."""
    cases = []
    for k in _q_kinds(kind):
        for n in range(1, n_max + 1):
            for p in range(1, n + 1):
                for q in range(p, n + 1):
                    for m in range(0, m_max + 1):
                        if p < q:
                            cases.append(_f_diff_case(k, n, p, q, m))
                        cases.append(_f_reduction_case(k, n, p, q, m))
            for i in range(1, n + 1):
                for m in range(0, min(m_max, 3) + 1):
                    if k in ("spQ", "soQ"):
                        cases.append(_bridge_case(k, n, i, m))
    for n in range(1, n_max + 1):
        for r in range(1, 2 * n + 1):
            for s in range(0, 2 * n + 1):
                for m in range(1, min(m_max, 3) + 1):
                    cases.append(_qtilde_recursion_case(n, r, s, m))
    return _run_cases("f-diff", cases, jobs)


def _f_diff_case(kind, n, p, q, m):
    inputs = {"identity": "f-diff", "kind": kind, "n": n, "p": p, "q": q, "m": m}

    def thunk():
        vt = vartable_for(n, m + n)
        lhs = f_mpqn(kind, m, p, q - 1, vt) - f_mpqn(kind, m, p + 1, q, vt)
        pref = xv(vt, p) + yv(vt, q)
        if kind in ("spQ", "soQ"):
            pref = pref + xbar(vt, p) + ybar(vt, q)
        rhs = pref * f_mpqn(kind, m - 1, p, q, vt)
        return lhs == rhs, {}

    return inputs, thunk


def _f_reduction_case(kind, n, p, q, m):
    inputs = {"identity": "f-reduction", "kind": kind, "n": n, "p": p, "q": q, "m": m}

    def thunk():
        vt = vartable_for(n, m + n)
        ok = True
        if p == q:
            ok = f_mpqn(kind, m, p, p, vt) == q_md(kind, m, p, vt)
        if q == n:
            h = h_factorial({"glQ": "gl", "spQ": "sp", "soQ": "so"}[kind], m, p, vt)
            if kind == "soQ":
                h = shift_a_down(h, vt)
            ok = ok and f_mpqn(kind, m, p, n, vt) == h
        return ok, {}

    return inputs, thunk


def _bridge_case(kind, n, i, m):
    inputs = {"identity": "bridge", "kind": kind, "n": n, "i": i, "m": m}

    def thunk():
        vt = vartable_for(n, m + 2)
        xs = [xv(vt, k) for k in range(i, n + 1)]
        xs1 = [xv(vt, k) for k in range(i + 1, n + 1)]
        xb = [xbar(vt, k) for k in range(i, n + 1)]
        ys1 = [yv(vt, k) for k in range(i + 1, n + 1)]
        yb = [ybar(vt, k) for k in range(i, n + 1)]
        yb1 = [ybar(vt, k) for k in range(i + 1, n + 1)]
        extra = [MultiPoly.one(vt)] if kind == "soQ" else []
        lhs = (xv(vt, i) + yv(vt, i)) * qtilde(m, xs + xb, ys1 + yb + extra, vt) \
            + (xbar(vt, i) + ybar(vt, i)) * qtilde(m, xs1 + xb, ys1 + yb1 + extra, vt)
        rhs = (xv(vt, i) + yv(vt, i) + xbar(vt, i) + ybar(vt, i)) * q_md(kind, m, i, vt)
        return lhs == rhs, {}

    return inputs, thunk


def _qtilde_recursion_case(n, r, s, m):
    inputs = {"identity": "qtilde-recursion", "n": n, "r": r, "s": s, "m": m}

    def thunk():
        vt = vartable_for(n, m + r + 1)
        us = [xv(vt, (k % n) + 1) for k in range(r)]
        vs = [yv(vt, (k % n) + 1) for k in range(s)]
        from .algebra import add_a
        ok = True
        if r >= 1:
            lhs = qtilde(m, us, vs, vt)
            rhs = qtilde(m, us[:-1], vs, vt) + \
                add_a(us[-1], m + r - s - 1) * qtilde(m - 1, us, vs, vt)
            ok = lhs == rhs
        if s >= 1:
            lhs = qtilde(m, us, vs, vt)
            rhs = qtilde(m, us, vs[:-1], vt) + \
                add_a(vs[-1], m + r - s, sign=-1) * qtilde(m - 1, us, vs[:-1], vt)
            ok = ok and lhs == rhs
        return ok, {}

    return inputs, thunk


# -- lattice-path suite ---------------------------------------------------------


def suite_lgv(n_max: int = 2, lambda_max: int = 3, kind: str | None = None,
              shapes=None, jobs: int = 1, size_max: int | None = None) -> SuiteReport:
    """Per-family checks of the tableau-to-path map: edge-weight products
    reproduce tableau weights, images are pairwise vertex-disjoint, and
    the map is injective.  ``shapes`` may pin an explicit list of
    (kind, parts, n); otherwise the grid runs over partitions with parts
    <= lambda_max (optionally |shape| <= size_max)."""
    kinds = ALL_KINDS if kind is None else (kind,)
    for k in kinds:
        if k not in ALL_KINDS:
            raise ValueError(f"unknown tableau kind {k!r}")
    cases = []
    if shapes is not None:
        for k, parts, n in shapes:
            cases.append(_lgv_case(k, tuple(parts), n))
    else:
        for k in kinds:
            strict = k in Q_KINDS
            for n in range(1, n_max + 1):
                for lam in enumerate_partitions(lambda_max, n, strict=strict):
                    if size_max is not None and lam.size > size_max:
                        continue
                    cases.append(_lgv_case(k, lam.parts, n))
    return _run_cases("lgv", cases, jobs)


def _lgv_case(kind, parts, n):
    inputs = {"identity": "lgv", "kind": kind, "lambda": list(parts), "n": n}

    def thunk():
        vt = vartable_for(n, parts[0] if parts else 0)
        seen = set()
        count = 0
        for t in enumerate_tableaux(kind, parts, n):
            count += 1
            pt = tableau_to_paths(t, vt)
            if parts and pt.weight() != tableau_weight(t, vt):
                return False, {"count": count, "reason": "weight mismatch"}
            if not pt.non_intersecting():
                return False, {"count": count, "reason": "paths intersect"}
            # curved variants can share geometry (x_k vs y_k starts), so
            # the identity of a tuple includes its edge weights
            sig = tuple(tuple((e.frm, e.to, e.kind,
                               tuple(sorted(e.weight.terms.items())))
                              for e in p.edges)
                        for p in pt.paths)
            if sig in seen:
                return False, {"count": count, "reason": "not injective"}
            seen.add(sig)
            if kind in CHAR_KINDS:
                for p, row in zip(pt.paths, t.rows):
                    diag_steps = sum(1 for e in p.edges if e.kind == "D")
                    zeros = sum(1 for e in row if e.zero)
                    if diag_steps != zeros or diag_steps > 1:
                        return False, {"count": count, "reason": "diagonal steps"}
        return True, {"count": count}

    return inputs, thunk


def run_suite(name: str, **kw) -> SuiteReport:
    if name == "routes":
        return suite_routes(kw.get("n_max", 2), kw.get("lambda_max", 3),
                            kw.get("kind"), kw.get("jobs", 1))
    if name == "jt-vs-def":
        return suite_jt_vs_def(kw.get("n_max", 2), kw.get("lambda_max", 3),
                               kw.get("kind"), kw.get("jobs", 1))
    if name == "q-routes":
        return suite_q_routes(kw.get("n_max", 2), kw.get("lambda_max", 3),
                              kw.get("kind"), kw.get("jobs", 1))
    if name == "tokuyama":
        return suite_tokuyama(kw.get("n_max", 2), kw.get("mu_max", 2),
                              kw.get("kind"), kw.get("jobs", 1))
    if name == "h-diff":
        return suite_h_diff(kw.get("n_max", 2), kw.get("m_max", 4),
                            kw.get("kind"), kw.get("jobs", 1))
    if name == "f-diff":
        return suite_f_diff(kw.get("n_max", 2), kw.get("m_max", 4),
                            kw.get("kind"), kw.get("jobs", 1))
    if name == "lgv":
        return suite_lgv(kw.get("n_max", 2), kw.get("lambda_max", 3),
                         kw.get("kind"), kw.get("shapes"), kw.get("jobs", 1))
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES} or 'all'")
