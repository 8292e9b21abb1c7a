"""Dense exact linear algebra over the rationals.

Small systems (kernel cells, primitive solving) go through a plain
fraction-valued reduced row echelon form.  Rank certificates for the larger
change-of-basis matrices clear denominators first and eliminate over the
integers with per-row gcd reduction, which keeps entries small and avoids
fraction overhead.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def rref(rows):
    """Reduced row echelon form.  Returns (new_rows, pivot_columns); the
    input is not modified."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = Fraction(1) / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def nullspace(rows, ncols):
    """Basis of the right nullspace, one vector per free column in column
    order; the chosen free coordinate is 1 and all other free coordinates 0."""
    if not rows:
        return [
            [Fraction(1) if j == f else Fraction(0) for j in range(ncols)]
            for f in range(ncols)
        ]
    mat, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -mat[i][f]
        basis.append(vec)
    return basis


def solve_with_free_zero(rows, rhs):
    """Particular solution of M x = rhs with every free variable set to 0.

    Returns (solution, nullity), or (None, nullity) when inconsistent.
    """
    if not rows:
        raise ValueError("empty system")
    ncols = len(rows[0])
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    mat, pivots = rref(augmented)
    if ncols in pivots:
        return None, ncols - len([p for p in pivots if p < ncols])
    sol = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        sol[p] = mat[i][ncols]
    return sol, ncols - len(pivots)


def rank(rows) -> int:
    """Exact rank of a rational matrix."""
    mat = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        den = lcm(*(f.denominator for f in fracs)) if fracs else 1
        ints = [int(f * den) for f in fracs]
        g = gcd(*ints) if any(ints) else 0
        if g:
            mat.append([x // g for x in ints])
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for col in range(ncols):
        # choose the nonzero pivot of least magnitude to limit growth
        best = None
        for i in range(r, len(mat)):
            v = abs(mat[i][col])
            if v and (best is None or v < abs(mat[best][col])):
                best = i
        if best is None:
            continue
        mat[r], mat[best] = mat[best], mat[r]
        p = mat[r][col]
        for i in range(r + 1, len(mat)):
            v = mat[i][col]
            if not v:
                continue
            new = [p * a - v * b for a, b in zip(mat[i], mat[r])]
            g = gcd(*new) if any(new) else 0
            mat[i] = [x // g for x in new] if g else new
        r += 1
        if r == len(mat):
            break
    return r
