"""Partitions, tableau counting, and Schur P/Q polynomials.

Partitions are tuples of weakly decreasing nonnegative integers; most
functions strip zero parts.  Schur P and Q polynomials are computed in a
fixed number of variables by enumerating marked shifted tableaux.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .polynomials import Polynomial, _trim, flagged_schur


def strip_zeros(lam):
    return tuple(x for x in lam if x)


def is_partition(lam):
    lam = tuple(lam)
    return all(x >= 0 for x in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


def is_strict_partition(lam):
    lam = strip_zeros(lam)
    return is_partition(lam) and all(
        lam[i] > lam[i + 1] for i in range(len(lam) - 1)
    )


def conjugate_partition(lam):
    lam = strip_zeros(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def complement_partition(lam, rows, cols):
    """The complement of lam inside a rows x cols box, read upside down."""
    lam = strip_zeros(lam)
    if len(lam) > rows or any(x > cols for x in lam):
        raise ValueError("partition does not fit in the box")
    padded = tuple(lam) + (0,) * (rows - len(lam))
    return tuple(cols - padded[rows - 1 - i] for i in range(rows))


def partitions_in_box(rows, cols):
    """All partitions with at most rows parts, each at most cols."""
    out = []

    def rec(prefix, maxpart):
        if len(prefix) == rows:
            out.append(strip_zeros(tuple(prefix)))
            return
        for x in range(maxpart, -1, -1):
            rec(prefix + [x], x)

    rec([], cols)
    return sorted(set(out))


def staircase(p, q):
    """The strict partition (p+q-1, p+q-3, ..., p-q+1) with q parts; needs p >= q."""
    if p < q:
        raise ValueError("need p >= q")
    return tuple(p + q - 2 * i + 1 for i in range(1, q + 1))


def count_syt(lam):
    """Standard tableaux of straight shape, by the hook length formula."""
    lam = strip_zeros(lam)
    if not is_partition(lam):
        raise ValueError("not a partition")
    if not lam:
        return 1
    conj = conjugate_partition(lam)
    hooks = 1
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i - 1] + 1):
            hooks *= lam[i - 1] - j + conj[j - 1] - i + 1
    total = math.factorial(sum(lam))
    assert total % hooks == 0
    return total // hooks


@lru_cache(maxsize=None)
def count_syt_enum(lam):
    """The same count by recursive corner removal."""
    lam = strip_zeros(lam)
    if not lam:
        return 1
    total = 0
    for i in range(len(lam)):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if lam[i] > nxt:
            total += count_syt_enum(lam[:i] + (lam[i] - 1,) + lam[i + 1 :])
    return total


def shifted_cells(lam):
    """Cells of the shifted diagram: row i uses columns i..i+lam_i-1, 1-based."""
    lam = strip_zeros(lam)
    return [(i, j) for i in range(1, len(lam) + 1) for j in range(i, i + lam[i - 1])]


def doubled_cells(lam):
    """The shifted diagram glued to its transpose, shifted copy one column right."""
    shifted = shifted_cells(lam)
    cells = {(j, i) for i, j in shifted} | {(i, j + 1) for i, j in shifted}
    return cells


def count_shifted_syt(lam):
    """Standard shifted tableaux of a strict partition, by hook lengths taken
    in the doubled diagram at the cells of the shifted copy."""
    lam = strip_zeros(lam)
    if not is_strict_partition(lam):
        raise ValueError("not a strict partition")
    if not lam:
        return 1
    cells = doubled_cells(lam)
    row_len = {}
    col_len = {}
    for i, j in cells:
        row_len[i] = max(row_len.get(i, 0), j)
        col_len[j] = max(col_len.get(j, 0), i)
    hooks = 1
    for i, j in shifted_cells(lam):
        cell = (i, j + 1)
        arm = row_len[cell[0]] - cell[1]
        leg = col_len[cell[1]] - cell[0]
        hooks *= arm + leg + 1
    total = math.factorial(sum(lam))
    assert total % hooks == 0
    return total // hooks


@lru_cache(maxsize=None)
def count_shifted_syt_enum(lam):
    """The same count by removing corners while keeping the parts strict."""
    lam = strip_zeros(lam)
    if not lam:
        return 1
    total = 0
    for i in range(len(lam)):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        new_part = lam[i] - 1
        if new_part > nxt or (new_part == 0 and i == len(lam) - 1):
            total += count_shifted_syt_enum(lam[:i] + (new_part,) + lam[i + 1 :])
    return total


def schur_truncated(lam, num_vars):
    """Schur polynomial s_lam(x_1..x_num_vars)."""
    lam = strip_zeros(lam)
    if not is_partition(lam):
        raise ValueError("not a partition")
    return flagged_schur(lam, (num_vars,) * len(lam))


def _marked_key(val, primed):
    # total order 1' < 1 < 2' < 2 < ...
    return 2 * val - 1 if primed else 2 * val


def schur_p_truncated(lam, num_vars):
    """Schur P polynomial in num_vars variables, by enumerating marked
    shifted tableaux.

    Fillings of the shifted diagram by 1' < 1 < 2' < 2 < ... weakly increase
    along rows and columns, repeat no primed entry in a row and no unprimed
    entry in a column, and carry no primes on the main diagonal.
    """
    lam = strip_zeros(lam)
    if not is_strict_partition(lam):
        raise ValueError("Schur P needs a strict partition")
    if not lam:
        return Polynomial.one()
    ell = len(lam)
    rows = [list(range(i, i + lam[i - 1])) for i in range(1, ell + 1)]
    cols_of = [{} for _ in range(ell)]
    for r in range(ell):
        for idx, col in enumerate(rows[r]):
            cols_of[r][col] = idx
    out = {}
    filling = [[None] * lam[r] for r in range(ell)]
    content = [0] * num_vars

    def cell(r, idx):
        if r == ell:
            e = _trim(content)
            out[e] = out.get(e, 0) + 1
            return
        if idx == lam[r]:
            cell(r + 1, 0)
            return
        col = rows[r][idx]
        left = filling[r][idx - 1] if idx > 0 else None
        above = None
        if r > 0 and col in cols_of[r - 1]:
            above = filling[r - 1][cols_of[r - 1][col]]
        on_diagonal = col == r + 1
        for val in range(1, num_vars + 1):
            for primed in (True, False):
                if primed and on_diagonal:
                    continue
                k = _marked_key(val, primed)
                if left is not None:
                    lk = _marked_key(*left)
                    if k < lk or (k == lk and primed):
                        continue
                if above is not None:
                    ak = _marked_key(*above)
                    if k < ak or (k == ak and not primed):
                        continue
                filling[r][idx] = (val, primed)
                content[val - 1] += 1
                cell(r, idx + 1)
                content[val - 1] -= 1
                filling[r][idx] = None
    cell(0, 0)
    return Polynomial(out)


def schur_q_truncated(lam, num_vars):
    """Schur Q polynomial: 2^(number of parts) times Schur P."""
    lam = strip_zeros(lam)
    return schur_p_truncated(lam, num_vars) * (2 ** len(lam))


def schur_pq_truncated(lam, num_vars, kind):
    if kind == "P":
        return schur_p_truncated(lam, num_vars)
    if kind == "Q":
        return schur_q_truncated(lam, num_vars)
    raise ValueError("kind must be 'P' or 'Q'")


def verify_pq_identity(p, q, num_vars):
    """Check that summing s_lam times the transposed complement Schur
    polynomial over partitions in the p x q box gives the Schur Q polynomial
    of the staircase.  Returns (ok, left, right)."""
    a, b = max(p, q), min(p, q)
    left = Polynomial.zero()
    for lam in partitions_in_box(a, b):
        comp = complement_partition(lam, a, b)
        left = left + schur_truncated(lam, num_vars) * schur_truncated(
            conjugate_partition(comp), num_vars
        )
    right = schur_q_truncated(staircase(a, b), num_vars)
    return left == right, left, right
