"""The six tableau families carrying characters and Q-functions.

Character-side fillings live on ordinary Young diagrams F^shape (row i
occupies columns 1..shape_i); Q-side fillings live on shifted diagrams
SF^shape of strict shapes (row i occupies columns i..i+shape_i-1).  Each
kind draws entries from its own ordered alphabet:

    glChar   1 < 2 < ... < n
    spChar   1 < 1bar < 2 < 2bar < ... < n < nbar
    soChar   spChar alphabet followed by 0
    glQ      1' < 1 < 2' < 2 < ... < n' < n
    spQ      1' < 1 < 1bar' < 1bar < ... < n' < n < nbar' < nbar
    soQ      spQ alphabet followed by 0'

Filling rules, weights and the diagram geometry follow the conventions
listed with each public function.  Everything here is exact: weights are
MultiPoly values over a shared VarTable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .algebra import MultiPoly, VarTable, add_a, xbar, xv, ybar, yv
from .partitions import as_parts, is_strict

CHAR_KINDS = ("glChar", "spChar", "soChar")
Q_KINDS = ("glQ", "spQ", "soQ")
ALL_KINDS = CHAR_KINDS + Q_KINDS


class ShapeKindMismatch(ValueError):
    """Shape is invalid for the requested tableau kind."""


@dataclass(frozen=True)
class Entry:
    """One alphabet letter: letter index k (0 for the zero letters),
    barred/primed markers, and the zero flag."""

    k: int
    barred: bool = False
    primed: bool = False
    zero: bool = False

    @property
    def token(self) -> str:
        if self.zero:
            return "0prime" if self.primed else "0"
        s = str(self.k)
        if self.barred:
            s += "bar"
        if self.primed:
            s += "prime"
        return s

    def __repr__(self):
        return self.token


_ALPHABETS: dict[tuple[str, int], tuple[Entry, ...]] = {}


def alphabet(kind: str, n: int) -> tuple[Entry, ...]:
    """The ordered alphabet of ``kind`` at rank n; index = rank in the order."""
    key = (kind, n)
    got = _ALPHABETS.get(key)
    if got is not None:
        return got
    letters: list[Entry] = []
    if kind == "glChar":
        letters = [Entry(k) for k in range(1, n + 1)]
    elif kind == "spChar":
        for k in range(1, n + 1):
            letters += [Entry(k), Entry(k, barred=True)]
    elif kind == "soChar":
        for k in range(1, n + 1):
            letters += [Entry(k), Entry(k, barred=True)]
        letters.append(Entry(0, zero=True))
    elif kind == "glQ":
        for k in range(1, n + 1):
            letters += [Entry(k, primed=True), Entry(k)]
    elif kind == "spQ":
        for k in range(1, n + 1):
            letters += [Entry(k, primed=True), Entry(k),
                        Entry(k, barred=True, primed=True), Entry(k, barred=True)]
    elif kind == "soQ":
        for k in range(1, n + 1):
            letters += [Entry(k, primed=True), Entry(k),
                        Entry(k, barred=True, primed=True), Entry(k, barred=True)]
        letters.append(Entry(0, primed=True, zero=True))
    else:
        raise ValueError(f"unknown tableau kind {kind!r}")
    got = tuple(letters)
    _ALPHABETS[key] = got
    return got


def entry_from_token(token: str) -> Entry:
    s = token
    primed = s.endswith("prime")
    if primed:
        s = s[: -len("prime")]
    barred = s.endswith("bar")
    if barred:
        s = s[: -len("bar")]
    k = int(s)
    if k == 0:
        if barred:
            raise ValueError(f"bad entry token {token!r}")
        return Entry(0, primed=primed, zero=True)
    return Entry(k, barred=barred, primed=primed)


def _row_repeat_ok(kind: str, e: Entry) -> bool:
    """May this letter immediately repeat within a row?"""
    if kind in CHAR_KINDS:
        return not e.zero          # at most one 0 per row
    return not e.primed            # no two identical primed letters in a row


def _col_stack_ok(kind: str, e: Entry) -> bool:
    """May this letter sit directly below an identical one?"""
    if kind in CHAR_KINDS:
        return e.zero              # only 0 escapes the column-distinctness rule
    return e.primed                # only unprimed letters are column-distinct


def _row_min_rank(kind: str, i: int) -> int:
    """Smallest admissible rank in row i (letters k and kbar may not appear
    below row k in the sp/so character families)."""
    if kind in ("spChar", "soChar"):
        return 2 * (i - 1)
    return 0


def check_shape(kind: str, shape, n: int) -> tuple[int, ...]:
    parts = as_parts(shape)
    if kind not in ALL_KINDS:
        raise ValueError(f"unknown tableau kind {kind!r}")
    if any(p < 0 for p in parts) or any(
            parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ShapeKindMismatch(f"{parts} is not a partition")
    if kind in Q_KINDS and not is_strict(parts):
        raise ShapeKindMismatch(f"{kind} needs a strict shape, got {parts}")
    if len(parts) > n:
        raise ShapeKindMismatch(f"shape {parts} has more than n={n} rows")
    return parts


@dataclass(frozen=True)
class Tableau:
    """A filling of F^shape (character kinds) or SF^shape (Q kinds).

    ``rows[i-1]`` lists the entries of row i left to right; in the shifted
    families row i starts at column i, so ``rows[i-1][c]`` sits in cell
    (i, i+c).
    """

    kind: str
    n: int
    shape: tuple[int, ...]
    rows: tuple[tuple[Entry, ...], ...]

    @property
    def shifted(self) -> bool:
        return self.kind in Q_KINDS

    def col_start(self, i: int) -> int:
        return i if self.shifted else 1

    def cell(self, i: int, j: int) -> Entry:
        return self.rows[i - 1][j - self.col_start(i)]

    def cells(self):
        """Yield ((i, j), entry) in row-major scan order, 1-based."""
        for i, row in enumerate(self.rows, start=1):
            start = self.col_start(i)
            for c, e in enumerate(row):
                yield (i, start + c), e

    def to_obj(self) -> dict:
        return {"kind": self.kind, "shape": list(self.shape), "n": self.n,
                "cells": [[e.token for e in row] for row in self.rows]}


def tableau_from_obj(obj: dict) -> Tableau:
    kind = obj["kind"]
    n = int(obj["n"])
    shape = check_shape(kind, obj["shape"], n)
    rows = tuple(tuple(entry_from_token(tok) for tok in row) for row in obj["cells"])
    if tuple(len(r) for r in rows) != shape:
        raise ShapeKindMismatch("cell rows do not match the shape")
    return Tableau(kind, n, shape, rows)


# -- validation -----------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    rule: str | None = None
    cell: tuple[int, int] | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def validate_tableau(t: Tableau) -> ValidationReport:
    """Check every filling rule of t's kind; on failure report the first
    violated rule (scanning cells row-major, local rules first)."""
    kind = t.kind
    parts = check_shape(kind, t.shape, t.n)
    if tuple(len(r) for r in t.rows) != parts:
        return ValidationReport(False, "shape", None, "rows do not match shape")
    alpha = alphabet(kind, t.n)
    rank_of = {e: r for r, e in enumerate(alpha)}
    qkind = kind in Q_KINDS
    labels = _RULE_LABELS[kind]

    for (i, j), e in t.cells():
        r = rank_of.get(e)
        if r is None:
            return ValidationReport(False, "alphabet", (i, j),
                                    f"{e.token} not in the {kind} alphabet")
        start = t.col_start(i)
        if j > start:
            left = t.cell(i, j - 1)
            lr = rank_of[left]
            if r < lr:
                return ValidationReport(False, labels["row_weak"], (i, j),
                                        "entries must weakly increase across rows")
            if r == lr and not _row_repeat_ok(kind, e):
                return ValidationReport(False, labels["row_repeat"], (i, j),
                                        f"{e.token} may not repeat within a row")
        above_exists = i > 1 and (j - t.col_start(i - 1)) < len(t.rows[i - 2])
        if above_exists:
            up = t.cell(i - 1, j)
            ur = rank_of[up]
            if r < ur:
                return ValidationReport(False, labels["col_weak"], (i, j),
                                        "entries must weakly increase down columns")
            if r == ur and not _col_stack_ok(kind, e):
                return ValidationReport(False, labels["col_repeat"], (i, j),
                                        f"{e.token} may not repeat within a column")
        if not qkind and kind in ("spChar", "soChar") and not e.zero and e.k < i:
            return ValidationReport(False, "T4", (i, j),
                                    f"{e.token} may not appear below row {e.k}")
        if qkind and j == i:
            if e.zero:
                return ValidationReport(False, "Q6", (i, j),
                                        "0prime may not sit on the main diagonal")
            if i > 1 and kind in ("spQ", "soQ"):
                prev = t.cell(i - 1, i - 1)
                if prev.k == e.k:
                    return ValidationReport(
                        False, "Q5", (i, j),
                        f"two letters of group {e.k} on the main diagonal")
    return ValidationReport(True)


_RULE_LABELS = {
    "glChar": {"row_weak": "T1", "col_weak": "T2", "col_repeat": "T3", "row_repeat": "T1"},
    "spChar": {"row_weak": "T1", "col_weak": "T2", "col_repeat": "T3", "row_repeat": "T1"},
    "soChar": {"row_weak": "T1", "col_weak": "T2", "col_repeat": "T3", "row_repeat": "T5"},
    "glQ": {"row_weak": "Q1", "col_weak": "Q2", "col_repeat": "Q3", "row_repeat": "Q4"},
    "spQ": {"row_weak": "Q1", "col_weak": "Q2", "col_repeat": "Q3", "row_repeat": "Q4"},
    "soQ": {"row_weak": "Q1", "col_weak": "Q2", "col_repeat": "Q3", "row_repeat": "Q4"},
}


# -- enumeration ----------------------------------------------------------


def enumerate_tableaux(kind: str, shape, n: int) -> Iterator[Tableau]:
    """All valid fillings, each exactly once, in lexicographic row-major
    scan order of entry ranks.  The empty shape yields one empty tableau."""
    parts = check_shape(kind, shape, n)
    alpha = alphabet(kind, n)
    A = len(alpha)
    qkind = kind in Q_KINDS
    spso_q = kind in ("spQ", "soQ")
    ell = len(parts)
    if ell == 0:
        yield Tableau(kind, n, parts, ())
        return

    rows: list[list[Entry]] = [[] for _ in range(ell)]

    def fill(i: int, c: int) -> Iterator[Tableau]:
        # cell (i, j): c is the 0-based offset within row i
        if c == parts[i - 1]:
            if i == ell:
                yield Tableau(kind, n, parts,
                              tuple(tuple(row) for row in rows))
                return
            yield from fill(i + 1, 0)
            return
        j = (i if qkind else 1) + c
        lo = _row_min_rank(kind, i)
        left = rows[i - 1][c - 1] if c > 0 else None
        up = None
        if i > 1:
            up_off = j - (i - 1 if qkind else 1)
            if 0 <= up_off < len(rows[i - 2]):
                up = rows[i - 2][up_off]
        if left is not None:
            lr = _rank(kind, n, left)
            lo = max(lo, lr if _row_repeat_ok(kind, left) else lr + 1)
        if up is not None:
            ur = _rank(kind, n, up)
            lo = max(lo, ur if _col_stack_ok(kind, up) else ur + 1)
        diag = qkind and c == 0
        prev_group = rows[i - 2][0].k if (diag and i > 1) else None
        for r in range(lo, A):
            e = alpha[r]
            if kind in ("spChar", "soChar") and not e.zero and e.k < i:
                continue
            if diag:
                if e.zero:
                    continue
                if spso_q and prev_group is not None and e.k == prev_group:
                    continue
            rows[i - 1].append(e)
            yield from fill(i, c + 1)
            rows[i - 1].pop()

    yield from fill(1, 0)


def _rank(kind: str, n: int, e: Entry) -> int:
    if kind == "glChar":
        return e.k - 1
    if kind == "spChar":
        return 2 * (e.k - 1) + (1 if e.barred else 0)
    if kind == "soChar":
        if e.zero:
            return 2 * n
        return 2 * (e.k - 1) + (1 if e.barred else 0)
    if kind == "glQ":
        return 2 * (e.k - 1) + (0 if e.primed else 1)
    # spQ / soQ
    if e.zero:
        return 4 * n
    return 4 * (e.k - 1) + 2 * (1 if e.barred else 0) + (0 if e.primed else 1)


def count_tableaux(kind: str, shape, n: int) -> int:
    return sum(1 for _ in enumerate_tableaux(kind, shape, n))


# -- weights --------------------------------------------------------------


def cell_weight(vt: VarTable, kind: str, n: int, e: Entry, i: int, j: int) -> MultiPoly:
    """Weight of entry e in cell (i, j), with a_m = 0 for m <= 0.

    Character kinds shift the parameter index by the letter and the cell
    diagonal; Q kinds use the bare diagonal offset j-i on every letter.
    """
    if kind == "glChar":
        return add_a(xv(vt, e.k), e.k + j - i)
    if kind == "spChar":
        if e.barred:
            return add_a(xbar(vt, e.k), 2 * e.k - n + j - i)
        return add_a(xv(vt, e.k), 2 * e.k - 1 - n + j - i)
    if kind == "soChar":
        if e.zero:
            return add_a(MultiPoly.one(vt), n + 1 + j - i, sign=-1)
        if e.barred:
            return add_a(xbar(vt, e.k), 2 * e.k + 1 - n + j - i)
        return add_a(xv(vt, e.k), 2 * e.k - n + j - i)
    off = j - i
    if e.zero:
        return add_a(MultiPoly.one(vt), off, sign=-1)
    if e.primed:
        base = ybar(vt, e.k) if e.barred else yv(vt, e.k)
        return add_a(base, off, sign=-1)
    base = xbar(vt, e.k) if e.barred else xv(vt, e.k)
    return add_a(base, off)


def tableau_weight(t: Tableau, vt: VarTable) -> MultiPoly:
    """Product of the cell weights of a valid tableau."""
    report = validate_tableau(t)
    if not report:
        raise ValueError(f"invalid tableau: {report.rule} at {report.cell}: "
                         f"{report.message}")
    out = MultiPoly.one(vt)
    for (i, j), e in t.cells():
        out = out * cell_weight(vt, t.kind, t.n, e, i, j)
    return out


# -- fused weighted summation ---------------------------------------------
#
# Summing tableau_weight over enumerate_tableaux is correct but revisits
# shared row prefixes once per tableau.  The sum factorises row by row:
# the rules coupling row i+1 to row i only read, per cell, the entry
# directly above, and the admissibility threshold each top entry imposes
# on the cell below it depends on the top entry alone.  So we sweep rows
# top to bottom keeping, for each candidate row content r, the polynomial
# H_i(r) = sum of weights of all fillings of rows 1..i ending in r, bucket
# the H_i by the threshold vector their row imposes, accumulate the
# buckets with a multidimensional prefix sum, and read each H_{i+1}(r')
# off with a single lookup.  test_tableaux pins this against the naive
# per-tableau sum.

_DENSE_TABLE_CAP = 500_000


def _row_candidates(kind, alpha, n, i, length, vt):
    """All admissible contents for row i in isolation, as (ranks, weight)
    pairs; within-row rules applied, cross-row rules left to the caller."""
    qkind = kind in Q_KINDS
    A = len(alpha)
    base_lo = _row_min_rank(kind, i)
    out = []
    ranks: list[int] = []

    def rec(c: int, lo: int, w: MultiPoly):
        if c == length:
            out.append((tuple(ranks), w))
            return
        j = (i if qkind else 1) + c
        for r in range(lo, A):
            e = alpha[r]
            if kind in ("spChar", "soChar") and not e.zero and e.k < i:
                continue
            if qkind and c == 0 and e.zero:
                continue
            nxt_lo = r if _row_repeat_ok(kind, e) else r + 1
            ranks.append(r)
            rec(c + 1, nxt_lo, w * cell_weight(vt, kind, n, e, i, j))
            ranks.pop()

    rec(0, base_lo, MultiPoly.one(vt))
    return out


def tableau_weight_sum(kind: str, shape, n: int, vt: VarTable) -> MultiPoly:
    """Sum of tableau_weight over every tableau of the given kind/shape."""
    parts = check_shape(kind, shape, n)
    if len(parts) == 0:
        return MultiPoly.one(vt)
    alpha = alphabet(kind, n)
    A = len(alpha)
    qkind = kind in Q_KINDS
    spso_q = kind in ("spQ", "soQ")
    zero_p = MultiPoly.zero(vt)

    def thresholds(row_ranks, width):
        """Admissibility thresholds the given top row imposes on the
        aligned cells of the next row (shifted rows align one step over)."""
        src = row_ranks[1:1 + width] if qkind else row_ranks[:width]
        return tuple(r if _col_stack_ok(kind, alpha[r]) else r + 1 for r in src)

    # H for row 1
    level = _row_candidates(kind, alpha, n, 1, parts[0], vt)
    H = {ranks: w for ranks, w in level}

    for i in range(2, len(parts) + 1):
        width = parts[i - 1]
        # bucket previous level by threshold vector (plus the diagonal
        # group dimension for the sp/so Q kinds)
        buckets: dict[tuple, MultiPoly] = {}
        for ranks, h in H.items():
            th = thresholds(ranks, width)
            if spso_q:
                th = (alpha[ranks[0]].k + 1,) + th
            got = buckets.get(th)
            buckets[th] = h if got is None else got + h

        dims = ((n + 2,) if spso_q else ()) + (A + 1,) * width
        total_cells = 1
        for d in dims:
            total_cells *= d
        nxt_level = _row_candidates(kind, alpha, n, i, width, vt)

        if total_cells <= _DENSE_TABLE_CAP:
            # dense cumulative table over threshold space
            table = [zero_p] * total_cells
            strides = [0] * len(dims)
            s = 1
            for d in range(len(dims) - 1, -1, -1):
                strides[d] = s
                s *= dims[d]
            for th, poly in buckets.items():
                idx = sum(c * s for c, s in zip(th, strides))
                table[idx] = table[idx] + poly
            for d in range(len(dims)):
                sd = strides[d]
                dd = dims[d]
                for idx in range(total_cells):
                    c = (idx // sd) % dd
                    if c:
                        cur = table[idx]
                        prev = table[idx - sd]
                        if prev.terms:
                            table[idx] = cur + prev if cur.terms else prev

            def dominated_sum(coords):
                idx = sum(c * s for c, s in zip(coords, strides))
                return table[idx]
        else:
            items = list(buckets.items())

            def dominated_sum(coords, items=items):
                tot = zero_p
                for th, poly in items:
                    if all(t <= c for t, c in zip(th, coords)):
                        tot = tot + poly
                return tot

        newH: dict[tuple, MultiPoly] = {}
        for ranks, w in nxt_level:
            coords = ranks
            if spso_q:
                coords = (alpha[ranks[0]].k,) + coords
            acc = dominated_sum(coords)
            if acc.terms:
                newH[ranks] = w * acc
        H = newH
        if not H:
            return zero_p

    total = zero_p
    for h in H.values():
        total = total + h
    return total
