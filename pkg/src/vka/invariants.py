"""Module invariants: minors, characteristic polynomials, determinants,
Smith normal form, colorings, homomorphism counts and the winding-family
transfer criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .alexander import (
    PresentationMatrix,
    abelianize,
    extended_presentation,
    one_var_matrix,
    quotient_kill,
    tietze_eliminate,
    under_arc_classes,
)
from .diagram import LONG, arc_structure
from .laurent import UV, TVAR, LaurentPoly, divexact, gcd_many

DEFAULT_MINOR_BUDGET = 200000


class BudgetExceeded(RuntimeError):
    """A computation would exceed the configured resource budget."""


# -- exact determinants and minors -------------------------------------


def _ring_ops(ring):
    if ring == "L2":
        vars = UV
    elif ring == "L1":
        vars = TVAR
    elif ring == "Z":
        return 0, 1, lambda a, b: a // b
    else:
        raise ValueError(f"no exact division over ring {ring}")
    zero = LaurentPoly.zero(vars)
    one = LaurentPoly.const(vars, 1)
    return zero, one, divexact


def det_exact(rows, ring):
    """Fraction-free determinant of a square matrix over Z or a Laurent ring."""
    zero, one, div = _ring_ops(ring)
    n = len(rows)
    if n == 0:
        return one
    M = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not M[k][k]:
            pivot = next((i for i in range(k + 1, n) if M[i][k]), None)
            if pivot is None:
                return zero
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev)
            M[i][k] = zero
        prev = M[k][k]
    out = M[n - 1][n - 1]
    return out if sign > 0 else -out


def elementary_minors(m, k, max_minors=DEFAULT_MINOR_BUDGET):
    """All minors of size (columns - k); the generators of the k-th ideal.

    Size zero (k >= columns) yields [1]; a size exceeding either dimension
    yields the empty list (the zero ideal).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    nrows, ncols = m.shape
    size = ncols - k
    _, one, _ = _ring_ops(m.ring)
    if size <= 0:
        return [one]
    if size > nrows or size > ncols:
        return []
    count = math.comb(nrows, size) * math.comb(ncols, size)
    if count > max_minors:
        raise BudgetExceeded(f"{count} minors of size {size} exceed budget {max_minors}")
    out = []
    for rs in combinations(range(nrows), size):
        for cs in combinations(range(ncols), size):
            sub = [[m.rows[i][j] for j in cs] for i in rs]
            out.append(det_exact(sub, m.ring))
    return out


def char_poly(m, k, max_minors=DEFAULT_MINOR_BUDGET):
    """Canonical gcd of the k-th ideal's minors (0 for the empty list)."""
    if m.ring not in ("L1", "L2"):
        raise ValueError("char_poly expects a Laurent presentation matrix")
    vars = UV if m.ring == "L2" else TVAR
    minors = elementary_minors(m, k, max_minors=max_minors)
    return gcd_many(minors, vars=vars)


# -- matrix specializations --------------------------------------------


def matrix_int_at(m, t0):
    """Evaluate an L1 matrix at t = t0 in {1, -1}, over Z."""
    if m.ring != "L1":
        raise ValueError("expected an L1 matrix")
    rows = tuple(tuple(e.subs_int((t0,)) for e in row) for row in m.rows)
    return PresentationMatrix("Z", m.cols, rows)


def matrix_mod(m, p, images):
    """Reduce a Laurent matrix mod p at the given unit images."""
    rows = tuple(tuple(e.subs_mod(images, p) for e in row) for row in m.rows)
    return PresentationMatrix(f"Z/{p}", m.cols, rows)


# -- integer linear algebra --------------------------------------------


def smith_normal_form(rows, transforms=False):
    """Smith invariants d1 | d2 | ... >= 0 of an integer matrix.

    With transforms=True also returns unimodular L, R with L A R diagonal.
    """
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    L = [[int(i == j) for j in range(m)] for i in range(m)] if transforms else None
    R = [[int(i == j) for j in range(n)] for i in range(n)] if transforms else None

    def row_op(i, j, q):  # row i -= q * row j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        if transforms:
            L[i] = [a - q * b for a, b in zip(L[i], L[j])]

    def col_op(i, j, q):  # col i -= q * col j
        for r in A:
            r[i] -= q * r[j]
        if transforms:
            for r in R:
                r[i] -= q * r[j]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        if transforms:
            L[i], L[j] = L[j], L[i]

    def col_swap(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        if transforms:
            for r in R:
                r[i], r[j] = r[j], r[i]

    t = 0
    limit = min(m, n)
    while t < limit:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < best):
                    best = abs(A[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])
        dirty = False
        for i in range(t + 1, m):
            if A[i][t]:
                q = A[i][t] // A[t][t]
                row_op(i, t, q)
                if A[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if A[t][j]:
                q = A[t][j] // A[t][t]
                col_op(j, t, q)
                if A[t][j]:
                    dirty = True
        if dirty:
            continue
        # pivot must divide the rest of the submatrix for the divisor chain
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % A[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)
            continue
        t += 1
    diag = []
    for i in range(limit):
        d = A[i][i] if i < m and i < n else 0
        if d < 0:
            d = -d
            if transforms:
                L[i] = [-x for x in L[i]]
        diag.append(d)
    if transforms:
        return tuple(diag), L, R
    return tuple(diag)


def rank_mod(rows, p):
    """Rank of an integer matrix over the field Z/p (p prime)."""
    A = [[x % p for x in row] for row in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    rank = 0
    col = 0
    while rank < m and col < n:
        pivot = next((i for i in range(rank, m) if A[i][col]), None)
        if pivot is None:
            col += 1
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        inv = pow(A[rank][col], -1, p)
        A[rank] = [x * inv % p for x in A[rank]]
        for i in range(m):
            if i != rank and A[i][col]:
                f = A[i][col]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[rank])]
        rank += 1
        col += 1
    return rank


def in_rowspan_mod(rows, vec, p):
    """True when vec lies in the Z/p row space of the matrix."""
    base = rank_mod(rows, p)
    return rank_mod(list(rows) + [vec], p) == base


def is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# -- knot determinant and colorings ------------------------------------


def determinant_long(d, max_minors=DEFAULT_MINOR_BUDGET):
    """gcd of the maximal minors of the merged arc matrix at t = -1."""
    if d.kind != LONG:
        raise ValueError("determinant is defined for long diagrams")
    mat = matrix_int_at(one_var_matrix(d).matrix, -1)
    nrows, ncols = mat.shape
    size = ncols - 1
    if size == 0:
        return 1
    if math.comb(nrows, size) * math.comb(ncols, size) > max_minors:
        raise BudgetExceeded("determinant minor budget exceeded")
    g = 0
    for rs in combinations(range(nrows), size):
        for cs in combinations(range(ncols), size):
            sub = [[mat.rows[i][j] for j in cs] for i in rs]
            g = math.gcd(g, det_exact(sub, "Z"))
            if g == 1:
                return 1
    return abs(g)


def unit_minor_check(d, max_minors=DEFAULT_MINOR_BUDGET):
    """True when every maximal minor of the merged matrix at t = 1 is +-1."""
    mat = matrix_int_at(one_var_matrix(d).matrix, 1)
    nrows, ncols = mat.shape
    size = ncols - 1
    if size == 0:
        return True
    if size > nrows:
        return False
    if math.comb(nrows, size) * math.comb(ncols, size) > max_minors:
        raise BudgetExceeded("unit minor budget exceeded")
    for rs in combinations(range(nrows), size):
        for cs in combinations(range(ncols), size):
            sub = [[mat.rows[i][j] for j in cs] for i in rs]
            if det_exact(sub, "Z") not in (1, -1):
                return False
    return True


def coloring_matrix(d):
    """Integer crossing/arc matrix: +2 on the over arc, -1 on each under arc.

    Arcs are divided at undercrossings only (over-arc halves merged).
    """
    classes, count = under_arc_classes(d)
    arcs = arc_structure(d)
    rows = []
    for cid in sorted(arcs.crossings):
        inc = arcs.crossings[cid]
        row = [0] * count
        row[classes[inc.over_in]] += 2
        row[classes[inc.under_in]] -= 1
        row[classes[inc.under_out]] -= 1
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class ColoringReport:
    p: int
    matrix: tuple
    count: int
    nontrivial: bool


def coloring_count(d, p):
    """Number of arc labelings over Z/p satisfying 2*over = under + under."""
    if p < 2:
        raise ValueError("modulus must be at least 2")
    matrix = coloring_matrix(d)
    ncols = len(matrix[0]) if matrix else under_arc_classes(d)[1]
    inv = smith_normal_form(matrix)
    count = p ** (ncols - len(inv))
    for s in inv:
        count *= math.gcd(s, p) if s else p
    return ColoringReport(p=p, matrix=matrix, count=count, nontrivial=count > p)


def hom_count_to_cyclic(m, p, s):
    """Number of module maps to Z/p with t acting as the unit s."""
    if m.ring != "L1":
        raise ValueError("hom counting expects an L1 matrix")
    if not is_prime(p):
        raise ValueError("p must be prime")
    if s % p == 0:
        raise ValueError("s must be invertible mod p")
    reduced = matrix_mod(m, p, (s,))
    rank = rank_mod([list(r) for r in reduced.rows], p)
    return p ** (len(m.cols) - rank)


# -- winding-family transfer criterion ----------------------------------

TRANSFER_S = ((1, 2), (0, -1))
TRANSFER_T = ((-1, 0), (2, 1))
TRANSFER_U = ((0, -1), (1, 2))


def _mat2_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def transfer_matrix(n):
    """S (T S)^(n-1) U, the color propagation matrix of the n-th winding."""
    m = TRANSFER_S
    ts = _mat2_mul(TRANSFER_T, TRANSFER_S)
    for _ in range(n - 1):
        m = _mat2_mul(m, ts)
    return _mat2_mul(m, TRANSFER_U)


def transfer_condition(n, p):
    """True when distinct colors alpha, beta solve (a, b) M = (d, b) mod p.

    Computed both from the matrix equation and from its closed-form
    reduction (2n+1)(alpha - beta) = 0; the two routes must agree.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    m = transfer_matrix(n)
    by_matrix = any(
        (a * m[0][1] + b * m[1][1] - b) % p == 0
        for a in range(p)
        for b in range(p)
        if a != b
    )
    by_reduction = math.gcd(2 * n + 1, p) > 1
    if by_matrix != by_reduction:
        raise AssertionError(f"transfer routes disagree at n={n}, p={p}")
    return by_matrix


# -- aggregate profile (move-invariance fuzzing) -------------------------


def quotient_pipeline(d, quotient="none"):
    """Presentation matrix over L2 after the requested end quotient."""
    pres = extended_presentation(d)
    if quotient != "none":
        if pres.end_minus is None:
            raise ValueError("end quotients require a long diagram")
        victims = set()
        if quotient in ("end-minus", "ends"):
            victims.add(pres.end_minus[0].gen)
        if quotient in ("end-plus", "ends"):
            victims.add(pres.end_plus[0].gen)
        if not victims:
            raise ValueError(f"unknown quotient {quotient!r}")
        pres = quotient_kill(pres, victims)
    return abelianize(tietze_eliminate(pres))


def invariant_profile(d, ps=(3, 5, 7), max_minors=DEFAULT_MINOR_BUDGET):
    """The invariants expected to survive Reidemeister moves, as one dict."""
    profile = {}
    quotients = ["none"] + (["end-minus"] if d.kind == LONG else [])
    for quotient in quotients:
        mat = quotient_pipeline(d, quotient)
        for k in (0, 1):
            value = char_poly(mat, k, max_minors=max_minors)
            profile[f"charpoly k={k} quotient={quotient}"] = str(value)
    if d.kind == LONG:
        profile["determinant"] = determinant_long(d, max_minors=max_minors)
        profile["unit minors"] = unit_minor_check(d, max_minors=max_minors)
    for p in ps:
        profile[f"colorings p={p}"] = coloring_count(d, p).count
    return profile
