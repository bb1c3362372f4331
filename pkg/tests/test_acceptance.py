"""Acceptance criteria, one test per criterion, each at its stated grid
and zero tolerance (every comparison is exact polynomial or integer
equality).  Each test prints one pass line with its wall time; expected
budgets are generous on a laptop-class machine.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import time

import pytest

from charq.algebra import (MultiPoly, av, specialize, vartable_for, xbar, xv,
                           ybar, yv)
from charq.characters import (char_combinatorial, char_definitional,
                              char_flagged_jt, char_hdet, h_factorial,
                              one_part_expansion)
from charq.partitions import enumerate_partitions
from charq.qfunctions import q_determinantal, q_tableaux, verify_tokuyama
from charq.tableaux import (Tableau, cell_weight, count_tableaux,
                            entry_from_token, validate_tableau)
from charq.verify import suite_f_diff, suite_h_diff, suite_lgv

from oracles import dim_gl, dim_so_odd, dim_sp


def _report(num, name, t0, extra=""):
    print(f"[acceptance] criterion {num} ({name}): PASS "
          f"({time.time() - t0:.1f} s{', ' + extra if extra else ''})")


def test_criterion_1_four_route_character_agreement():
    t0 = time.time()
    cases = 0
    for kind in ("gl", "sp", "so"):
        for n in (1, 2, 3):
            for lam in enumerate_partitions(3, n):
                vt = vartable_for(n, lam.first)
                a = char_definitional(kind, lam, vt)
                b = char_hdet(kind, lam, vt)
                c = char_flagged_jt(kind, lam, vt)
                d = char_combinatorial(kind, lam, vt)
                assert a == b == c == d, (kind, n, lam.parts)
                cases += 1
    _report(1, "four-route character agreement", t0, f"{cases} cases")


FIGURES = [
    # (kind, n, rows, printed per-cell factors as (base, a-index, sign))
    ("glChar", 4,
     [("1", "1", "2", "4"), ("2", "3", "3"), ("4", "4", "4")],
     [[("x", 1, 1, 1), ("x", 1, 2, 1), ("x", 2, 4, 1), ("x", 4, 7, 1)],
      [("x", 2, 1, 1), ("x", 3, 3, 1), ("x", 3, 4, 1)],
      [("x", 4, 2, 1), ("x", 4, 3, 1), ("x", 4, 4, 1)]]),
    ("spChar", 4,
     [("1", "1bar", "2", "4bar"), ("3bar", "4", "4"), ("4", "4bar", "4bar")],
     [[("x", 1, 0, 1), ("xbar", 1, 0, 1), ("x", 2, 1, 1), ("xbar", 4, 7, 1)],
      [("xbar", 3, 1, 1), ("x", 4, 3, 1), ("x", 4, 4, 1)],
      [("x", 4, 1, 1), ("xbar", 4, 3, 1), ("xbar", 4, 4, 1)]]),
    ("soChar", 4,
     [("1", "1bar", "2", "4bar"), ("3", "4", "0"), ("4", "4bar", "0")],
     [[("x", 1, 0, 1), ("xbar", 1, 0, 1), ("x", 2, 2, 1), ("xbar", 4, 8, 1)],
      [("x", 3, 1, 1), ("x", 4, 4, 1), ("one", 0, 6, -1)],
      [("x", 4, 2, 1), ("xbar", 4, 4, 1), ("one", 0, 5, -1)]]),
    ("glQ", 4,
     [("1prime", "1", "2prime", "2", "3prime", "4"),
      ("2", "3prime", "3", "3"), ("4prime", "4", "4")],
     [[("y", 1, 0, 1), ("x", 1, 1, 1), ("y", 2, 2, -1), ("x", 2, 3, 1),
       ("y", 3, 4, -1), ("x", 4, 5, 1)],
      [("x", 2, 0, 1), ("y", 3, 1, -1), ("x", 3, 2, 1), ("x", 3, 3, 1)],
      [("y", 4, 0, 1), ("x", 4, 1, 1), ("x", 4, 2, 1)]]),
]


def _factor(vt, spec):
    base, idx, aidx, sign = spec
    if base == "x":
        b = xv(vt, idx)
    elif base == "xbar":
        b = xbar(vt, idx)
    elif base == "y":
        b = yv(vt, idx)
    elif base == "ybar":
        b = ybar(vt, idx)
    else:
        b = MultiPoly.one(vt)
    return b + sign * av(vt, aidx) if aidx else b


def test_criterion_2_figure_regressions():
    t0 = time.time()
    for kind, n, rows, weights in FIGURES:
        shape = tuple(len(r) for r in rows)
        t = Tableau(kind, n, shape,
                    tuple(tuple(entry_from_token(tok) for tok in row)
                          for row in rows))
        assert validate_tableau(t), kind
        vt = vartable_for(n, shape[0])
        for (i, j), e in t.cells():
            printed = _factor(vt, weights[i - 1][j - t.col_start(i)])
            got = cell_weight(vt, kind, n, e, i, j)
            assert got == printed, (kind, i, j)
    _report(2, "figure weight regressions", t0, "4 figures, cell-by-cell")


def test_criterion_3_q_route_agreement():
    t0 = time.time()
    cases = 0
    for kind in ("glQ", "spQ", "soQ"):
        for n in (1, 2, 3):
            for lam in enumerate_partitions(4, n, strict=True):
                vt = vartable_for(n, lam.first)
                assert q_tableaux(kind, lam, vt) == \
                    q_determinantal(kind, lam, vt), (kind, n, lam.parts)
                cases += 1
    _report(3, "Q-function route agreement", t0, f"{cases} cases")


def test_criterion_4_tokuyama():
    t0 = time.time()
    cases = 0
    for kind in ("glQ", "spQ", "soQ"):
        for n in (1, 2, 3):
            for mu in enumerate_partitions(3, n):
                if mu.size > 3:
                    continue
                vt = vartable_for(n, mu.first + n)
                rep = verify_tokuyama(kind, mu, vt)
                assert rep.equal, (kind, n, mu.parts)
                cases += 1
    _report(4, "Tokuyama factorisations", t0, f"{cases} cases")


def test_criterion_5_lemma_suites():
    t0 = time.time()
    h = suite_h_diff(n_max=3, m_max=4)
    assert h.failed == 0, h.first_failure()
    f = suite_f_diff(n_max=3, m_max=4)
    assert f.failed == 0, f.first_failure()
    _report(5, "difference/recursion lemma suites", t0,
            f"{h.passed + f.passed} cases")


def test_criterion_6_lgv():
    t0 = time.time()
    rep = suite_lgv(n_max=3, lambda_max=6, size_max=6)
    assert rep.failed == 0, rep.first_failure()
    checked = sum(c.detail.get("count", 0) for c in rep.cases)
    _report(6, "lattice-path bijection checks", t0,
            f"{len(rep.cases)} families, {checked} tableaux")


def test_criterion_7_classical_dimensions():
    t0 = time.time()
    dims = {"glChar": dim_gl, "spChar": dim_sp, "soChar": dim_so_odd}
    cases = 0
    for kind, dim in dims.items():
        for n in (1, 2, 3):
            for lam in enumerate_partitions(4, n):
                if lam.size > 4:
                    continue
                assert count_tableaux(kind, lam.parts, n) == dim(lam.parts, n), \
                    (kind, n, lam.parts)
                cases += 1
    assert count_tableaux("spChar", (1, 1), 2) == 5
    # spot-check that the full character also collapses to the dimension
    for kind, group, lam, n in [("glChar", "gl", (2, 1), 2),
                                ("spChar", "sp", (1, 1), 2),
                                ("soChar", "so", (2,), 1)]:
        vt = vartable_for(n, lam[0])
        p = char_combinatorial(group, lam, vt)
        zero = MultiPoly.zero(vt)
        one = MultiPoly.one(vt)
        p = specialize(p, {f"a{k}": zero for k in range(1, vt.a_max + 1)})
        p = specialize(p, {f"x{i}": one for i in range(1, n + 1)})
        assert p == MultiPoly.const(vt, dims[kind](lam, n))
    _report(7, "classical dimension oracles", t0, f"{cases} count checks")


def test_criterion_8_one_part_expansions():
    t0 = time.time()
    cases = 0
    for kind in ("gl", "sp", "so"):
        for n in (1, 2, 3):
            for m in range(0, 5):
                vt = vartable_for(n, m)
                assert one_part_expansion(kind, m, vt) == \
                    h_factorial(kind, m, 1, vt), (kind, n, m)
                cases += 1
    _report(8, "one-part expansions", t0, f"{cases} cases")
