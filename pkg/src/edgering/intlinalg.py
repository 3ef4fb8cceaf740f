"""Exact rank of integer matrices by fraction-free (Bareiss) elimination.

No floating point: all updates stay in Z, dividing by the previous pivot,
which is an exact division for any row/column pivot choice.  Pivots are
chosen with smallest absolute value to limit coefficient growth.
"""

from __future__ import annotations


def rank(matrix: list[list[int]]) -> int:
    """Rank over Q of an integer matrix given as a list of rows."""
    rows = [row[:] for row in matrix if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot_row = -1
        pivot_abs = 0
        for i in range(r, len(rows)):
            v = rows[i][c]
            if v and (pivot_row < 0 or abs(v) < pivot_abs):
                pivot_row = i
                pivot_abs = abs(v)
                if pivot_abs == 1:
                    break
        if pivot_row < 0:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        p = rows[r][c]
        base = rows[r]
        for i in range(r + 1, len(rows)):
            row = rows[i]
            f = row[c]
            if f == 0:
                if p != prev:
                    for j in range(c + 1, ncols):
                        row[j] = row[j] * p // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (row[j] * p - base[j] * f) // prev
            row[c] = 0
        r += 1
        prev = p
        if r == len(rows):
            break
    return r
