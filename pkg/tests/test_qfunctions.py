"""Q-function routes, generating families, recursions, Tokuyama."""

import pytest

from charq.algebra import (MultiPoly, add_a, av, specialize, vartable_for,
                           xbar, xv, ybar, yv)
from charq.characters import h_factorial
from charq.partitions import enumerate_partitions
from charq.qfunctions import (diagonal_prefactor, f_mpqn, q_determinantal,
                              q_md, q_tableaux, qfunction, qtilde,
                              shift_a_down, staircase, verify_tokuyama)

from oracles import classical_q_brute


def _zero_a(p, vt):
    zero = MultiPoly.zero(vt)
    return specialize(p, {f"a{k}": zero for k in range(1, vt.a_max + 1)})


# -- tableau route examples -----------------------------------------------------


def test_glq_single_box():
    vt = vartable_for(1, 1)
    assert q_tableaux("glQ", (1,), vt) == xv(vt, 1) + yv(vt, 1)


def test_spq_single_box():
    vt = vartable_for(1, 1)
    want = xv(vt, 1) + yv(vt, 1) + xbar(vt, 1) + ybar(vt, 1)
    assert q_tableaux("spQ", (1,), vt) == want
    assert q_determinantal("spQ", (1,), vt) == want


def test_empty_shape():
    vt = vartable_for(2, 0)
    for kind in ("glQ", "spQ", "soQ"):
        assert q_tableaux(kind, (), vt) == MultiPoly.one(vt)
        assert q_determinantal(kind, (), vt) == MultiPoly.one(vt)


def test_strictness_guard():
    vt = vartable_for(2, 2)
    with pytest.raises(ValueError):
        q_tableaux("glQ", (2, 2), vt)


# -- qtilde -----------------------------------------------------------------------


def test_qtilde_base_and_small():
    vt = vartable_for(2, 3)
    assert qtilde(0, [xv(vt, 1)], [], vt) == MultiPoly.one(vt)
    assert qtilde(-1, [xv(vt, 1)], [], vt).is_zero()
    # one u, one v: the parameter product is empty (m + 1 - 1 - 1 = 0)
    assert qtilde(1, [xv(vt, 1)], [yv(vt, 1)], vt) == xv(vt, 1) + yv(vt, 1)
    # two u, one v: a single parameter survives
    assert qtilde(1, [xv(vt, 1), xv(vt, 2)], [yv(vt, 1)], vt) == \
        xv(vt, 1) + xv(vt, 2) + yv(vt, 1) + av(vt, 1)


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("s", [0, 1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_qtilde_recursions(r, s, m):
    vt = vartable_for(3, m + r + 1)
    us = [xv(vt, (k % 3) + 1) for k in range(r)]
    vs = [yv(vt, (k % 3) + 1) for k in range(s)]
    # dropping the last geometric factor
    lhs = qtilde(m, us, vs, vt)
    rhs = qtilde(m, us[:-1], vs, vt) + \
        add_a(us[-1], m + r - s - 1) * qtilde(m - 1, us, vs, vt)
    assert lhs == rhs
    # dropping the last linear factor
    if s:
        rhs = qtilde(m, us, vs[:-1], vt) + \
            add_a(vs[-1], m + r - s, sign=-1) * qtilde(m - 1, us, vs[:-1], vt)
        assert lhs == rhs


# -- q_md and f --------------------------------------------------------------------


def test_q_md_examples():
    vt = vartable_for(2, 2)
    assert q_md("glQ", 0, 1, vt) == MultiPoly.one(vt)
    assert q_md("glQ", 1, 1, vt) == \
        xv(vt, 1) + xv(vt, 2) + yv(vt, 2) + av(vt, 1)
    vt1 = vartable_for(1, 2)
    # the soQ unit factor consumes the first parameter slot: no a_1 here
    assert q_md("soQ", 1, 1, vt1) == \
        xv(vt1, 1) + xbar(vt1, 1) + MultiPoly.one(vt1)
    assert q_md("soQ", 2, 1, vt1) == shift_a_down(
        _so_printed_q(2, 1, vt1), vt1)


def _so_printed_q(m, d, vt):
    """The odd-orthogonal row function with parameter product running to
    a_m; shifting its parameters down once yields the tableau-consistent
    form, which is what q_md returns."""
    from charq.algebra import TruncatedSeries, coeff_of_t
    s = TruncatedSeries.one(vt, m)
    for i in range(d, vt.n + 1):
        s = s.mul_geometric(xv(vt, i)).mul_geometric(xbar(vt, i))
    for j in range(d + 1, vt.n + 1):
        s = s.mul_linear(yv(vt, j)).mul_linear(ybar(vt, j))
    s = s.mul_linear(MultiPoly.one(vt))
    for k in range(1, m + 1):
        s = s.mul_linear(av(vt, k))
    return coeff_of_t(s, m)


def test_f_examples():
    vt = vartable_for(2, 2)
    # order-1 coefficient of the two-flag family: both parameters survive
    assert f_mpqn("glQ", 1, 1, 2, vt) == \
        xv(vt, 1) + xv(vt, 2) + av(vt, 1) + av(vt, 2)
    with pytest.raises(ValueError):
        f_mpqn("glQ", 1, 2, 1, vt)


@pytest.mark.parametrize("kind", ["glQ", "spQ", "soQ"])
def test_f_reduces_to_q_and_h(kind):
    char_kind = {"glQ": "gl", "spQ": "sp", "soQ": "so"}[kind]
    for n in (1, 2, 3):
        for d in range(1, n + 1):
            for m in range(0, 4):
                vt = vartable_for(n, m + n)
                assert f_mpqn(kind, m, d, d, vt) == q_md(kind, m, d, vt)
                h = h_factorial(char_kind, m, d, vt)
                if kind == "soQ":
                    h = shift_a_down(h, vt)
                assert f_mpqn(kind, m, d, n, vt) == h


@pytest.mark.parametrize("kind", ["glQ", "spQ", "soQ"])
def test_f_difference_relations(kind):
    for n in (2, 3):
        for p in range(1, n):
            for q in range(p + 1, n + 1):
                for m in range(0, 5):
                    vt = vartable_for(n, m + n)
                    lhs = f_mpqn(kind, m, p, q - 1, vt) - \
                        f_mpqn(kind, m, p + 1, q, vt)
                    pref = xv(vt, p) + yv(vt, q)
                    if kind != "glQ":
                        pref = pref + xbar(vt, p) + ybar(vt, q)
                    assert lhs == pref * f_mpqn(kind, m - 1, p, q, vt)


@pytest.mark.parametrize("kind", ["spQ", "soQ"])
def test_diagonal_bridge(kind):
    for n in (1, 2, 3):
        for i in range(1, n + 1):
            for m in range(0, 4):
                vt = vartable_for(n, m + 2)
                xs = [xv(vt, k) for k in range(i, n + 1)]
                xs1 = [xv(vt, k) for k in range(i + 1, n + 1)]
                xb = [xbar(vt, k) for k in range(i, n + 1)]
                ys1 = [yv(vt, k) for k in range(i + 1, n + 1)]
                yb = [ybar(vt, k) for k in range(i, n + 1)]
                yb1 = [ybar(vt, k) for k in range(i + 1, n + 1)]
                extra = [MultiPoly.one(vt)] if kind == "soQ" else []
                lhs = (xv(vt, i) + yv(vt, i)) * \
                    qtilde(m, xs + xb, ys1 + yb + extra, vt) + \
                    (xbar(vt, i) + ybar(vt, i)) * \
                    qtilde(m, xs1 + xb, ys1 + yb1 + extra, vt)
                rhs = diagonal_prefactor(kind, i, vt) * q_md(kind, m, i, vt)
                assert lhs == rhs, (kind, n, i, m)


# -- route agreement ------------------------------------------------------------------


@pytest.mark.parametrize("kind", ["glQ", "spQ", "soQ"])
@pytest.mark.parametrize("n", [1, 2])
def test_routes_agree(kind, n):
    for lam in enumerate_partitions(3, n, strict=True):
        vt = vartable_for(n, lam.first)
        assert q_tableaux(kind, lam, vt) == q_determinantal(kind, lam, vt), \
            (kind, n, lam.parts)


def test_glq_221_route_example():
    vt = vartable_for(2, 2)
    lhs = q_tableaux("glQ", (2, 1), vt)
    assert lhs == q_determinantal("glQ", (2, 1), vt)
    want = (xv(vt, 1) + yv(vt, 1)) * (xv(vt, 2) + yv(vt, 2)) * \
        (xv(vt, 1) + yv(vt, 2))
    assert lhs == want


def test_qfunction_dispatcher():
    vt = vartable_for(1, 1)
    assert qfunction("glQ", (1,), vt) == qfunction("glQ", (1,), vt, method="tab")
    with pytest.raises(ValueError):
        qfunction("glQ", (1,), vt, method="zzz")


# -- Schur-Q specialisation -------------------------------------------------------------


def test_schur_q_specialisation_single_box():
    for n in (1, 2, 3):
        vt = vartable_for(n, 1)
        p = q_tableaux("glQ", (1,), vt)
        p = _zero_a(p, vt)
        p = specialize(p, {f"y{i}": xv(vt, i) for i in range(1, n + 1)})
        want = MultiPoly.zero(vt)
        for i in range(1, n + 1):
            want = want + 2 * xv(vt, i)
        assert p == want


@pytest.mark.parametrize("lam,n", [((1,), 2), ((2,), 2), ((2, 1), 2), ((2, 1), 3)])
def test_schur_q_specialisation_matches_brute_force(lam, n):
    vt = vartable_for(n, lam[0])
    p = _zero_a(q_tableaux("glQ", lam, vt), vt)
    p = specialize(p, {f"y{i}": xv(vt, i) for i in range(1, n + 1)})
    assert p == classical_q_brute(lam, n, vt)


# -- Tokuyama ------------------------------------------------------------------------------


def test_staircase():
    assert staircase(3) == (3, 2, 1)


def test_tokuyama_trivial_gl():
    vt = vartable_for(1, 1)
    rep = verify_tokuyama("glQ", (), vt)
    assert rep.equal
    assert rep.lhs == xv(vt, 1) + yv(vt, 1)
    assert rep.rhs == rep.lhs


def test_tokuyama_sp_empty_mu():
    vt = vartable_for(1, 1)
    rep = verify_tokuyama("spQ", (), vt)
    assert rep.equal
    assert rep.lhs == xv(vt, 1) + yv(vt, 1) + xbar(vt, 1) + ybar(vt, 1)


def test_tokuyama_gl_mu1_n2():
    vt = vartable_for(2, 3)
    rep = verify_tokuyama("glQ", (1,), vt)
    assert rep.equal
    assert rep.lhs.n_terms() == rep.rhs.n_terms()


@pytest.mark.parametrize("kind", ["glQ", "spQ", "soQ"])
def test_tokuyama_small_grid(kind):
    for n in (1, 2):
        for mu in enumerate_partitions(2, n):
            if mu.size > 2:
                continue
            vt = vartable_for(n, mu.first + n)
            rep = verify_tokuyama(kind, mu, vt)
            assert rep.equal, (kind, n, mu.parts)
            obj = rep.to_obj()
            assert obj["identity"] == "tokuyama" and obj["equal"] is True


def test_tokuyama_report_guards():
    vt = vartable_for(1, 2)
    with pytest.raises(ValueError):
        verify_tokuyama("glQ", (1, 1), vt)
    with pytest.raises(ValueError):
        verify_tokuyama("gl", (1,), vt)
