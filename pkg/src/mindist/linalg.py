"""Exact matrix rank: fraction-free (Bareiss) over Z, Gaussian over F_p."""
from __future__ import annotations

from typing import Sequence


def rank_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            ai = a[i]
            f = ai[c]
            ar = a[r]
            for j in range(c + 1, cols):
                # exact: Sylvester's identity guarantees divisibility
                ai[j] = (p * ai[j] - f * ar[j]) // prev
            ai[c] = 0
        prev = p
        r += 1
        if r == rows:
            break
    return r


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    a = [[x % p for x in row] for row in matrix]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        ar = [(x * inv) % p for x in a[r]]
        a[r] = ar
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                ai = a[i]
                for j in range(c, cols):
                    ai[j] = (ai[j] - f * ar[j]) % p
        r += 1
        if r == rows:
            break
    return r


def rank_gf2(rows: Sequence[int]) -> int:
    """Rank over F_2 of a matrix whose rows are packed into ints."""
    basis: dict[int, int] = {}  # leading bit -> row
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            b = basis.get(lead)
            if b is None:
                basis[lead] = row
                break
            row ^= b
    return len(basis)
