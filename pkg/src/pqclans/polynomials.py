"""Exact polynomial arithmetic and Schubert-type polynomials.

Polynomials live in Z[x1, x2, ...], stored sparsely as a map from trimmed
exponent tuples to nonzero integer coefficients.  Display order is graded
lex, highest degree first.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import permutations as perms
from .clans import Clan, profile
from .weak_order import down_covers, up_covers, reduced_words as clan_reduced_words


def _trim(e):
    e = tuple(e)
    while e and e[-1] == 0:
        e = e[:-1]
    return e


class Polynomial:
    """Sparse integer polynomial in countably many variables x1, x2, ..."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if not c:
                    continue
                e = _trim(e)
                c2 = data.get(e, 0) + c
                if c2:
                    data[e] = c2
                elif e in data:
                    del data[e]
        self.terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls({_trim(exps): coeff})

    @classmethod
    def variable(cls, i):
        return cls({(0,) * (i - 1) + (1,): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            c2 = out.get(e, 0) + c
            if c2:
                out[e] = c2
            elif e in out:
                del out[e]
        res = Polynomial.zero()
        res.terms = out
        return res

    def __neg__(self):
        res = Polynomial.zero()
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial.zero()
            res = Polynomial.zero()
            res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                if len(e1) < len(e2):
                    e = tuple(
                        (e1[i] if i < len(e1) else 0) + e2[i] for i in range(len(e2))
                    )
                else:
                    e = tuple(
                        e1[i] + (e2[i] if i < len(e2) else 0) for i in range(len(e1))
                    )
                c = out.get(e, 0) + c1 * c2
                if c:
                    out[e] = c
                elif e in out:
                    del out[e]
        res = Polynomial.zero()
        res.terms = out
        return res

    __rmul__ = __mul__

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def num_variables(self):
        return max((len(e) for e in self.terms), default=0)

    def coefficient(self, exps):
        return self.terms.get(_trim(exps), 0)

    def restrict(self, num_vars):
        """Drop every term using a variable beyond x_{num_vars}."""
        res = Polynomial.zero()
        res.terms = {e: c for e, c in self.terms.items() if len(e) <= num_vars}
        return res

    def __repr__(self):
        return f"Polynomial({poly_str(self)!r})"


def _term_sort_key(e):
    return (sum(e), e)


def poly_str(f):
    """Text form, graded lex with highest terms first: "x1^3*x2 + 2*x2^2"."""
    if not f.terms:
        return "0"
    bits = []
    for e in sorted(f.terms, key=_term_sort_key, reverse=True):
        c = f.terms[e]
        mono = "*".join(
            f"x{i + 1}^{a}" if a > 1 else f"x{i + 1}" for i, a in enumerate(e) if a
        )
        if not mono:
            core = str(abs(c))
        elif abs(c) == 1:
            core = mono
        else:
            core = f"{abs(c)}*{mono}"
        if not bits:
            bits.append(core if c > 0 else "-" + core)
        else:
            bits.append(("+ " if c > 0 else "- ") + core)
    return " ".join(bits)


def poly_json_list(f):
    """JSON form: [[exponent list, coefficient string], ...] in display order."""
    return [
        [list(e), str(f.terms[e])]
        for e in sorted(f.terms, key=_term_sort_key, reverse=True)
    ]


def swap_variables(f, i):
    """Exchange x_i and x_{i+1}."""
    out = {}
    for e, c in f.terms.items():
        a = e[i - 1] if len(e) >= i else 0
        b = e[i] if len(e) >= i + 1 else 0
        ee = list(e) + [0] * (max(i + 1, len(e)) - len(e))
        ee[i - 1], ee[i] = b, a
        key = _trim(ee)
        out[key] = out.get(key, 0) + c
    return Polynomial(out)


def divided_difference(f, i):
    """(f - s_i f) / (x_i - x_{i+1}), computed exactly term by term."""
    out = {}
    for e, c in f.terms.items():
        a = e[i - 1] if len(e) >= i else 0
        b = e[i] if len(e) >= i + 1 else 0
        if a == b:
            continue
        sign = 1 if a > b else -1
        base = list(e) + [0] * (max(i + 1, len(e)) - len(e))
        for t in range(min(a, b), max(a, b)):
            ee = base.copy()
            ee[i - 1] = t
            ee[i] = a + b - 1 - t
            key = _trim(ee)
            c2 = out.get(key, 0) + sign * c
            if c2:
                out[key] = c2
            elif key in out:
                del out[key]
    res = Polynomial.zero()
    res.terms = out
    return res


def isobaric_divided_difference(f, i):
    """pi_i f = divided difference of x_i * f."""
    return divided_difference(Polynomial.variable(i) * f, i)


def is_symmetric_in(f, i):
    return not divided_difference(f, i)


def apply_isobaric_longest(f, num_vars):
    """Apply the isobaric operator of the longest element of S_{num_vars}.

    Uses the reduced word built from the blocks (i, i+1, ..., num_vars - 1)
    for i = num_vars - 1 down to 1, letters applied last first.  The result
    is symmetric in x_1..x_{num_vars}.
    """
    seq = []
    for i in range(num_vars - 1, 0, -1):
        seq.extend(range(i, num_vars))
    for letter in reversed(seq):
        f = isobaric_divided_difference(f, letter)
    return f


def compatible_sequences(a, bound=None):
    """Weakly increasing b with b_k <= a_k, strictly increasing where a does.

    With bound set, b_k <= bound replaces the b_k <= a_k cap; this is the
    stable regime where the word has been shifted far up.
    """
    out = []
    b = []

    def rec(k):
        if k == len(a):
            out.append(tuple(b))
            return
        lo = 1
        if k > 0:
            lo = b[-1] + (1 if a[k - 1] < a[k] else 0)
        hi = a[k] if bound is None else bound
        for val in range(lo, hi + 1):
            b.append(val)
            rec(k + 1)
            b.pop()

    rec(0)
    return out


def _content_monomial(b):
    if not b:
        return ()
    e = [0] * max(b)
    for val in b:
        e[val - 1] += 1
    return tuple(e)


@lru_cache(maxsize=None)
def schubert_perm(w):
    """Schubert polynomial of a permutation, summed over reduced words and
    their compatible sequences."""
    out = {}
    for a in perms.reduced_words(w):
        for b in compatible_sequences(a):
            e = _content_monomial(b)
            out[e] = out.get(e, 0) + 1
    return Polynomial(out)


@lru_cache(maxsize=None)
def schubert_perm_descent(w):
    """Schubert polynomial by the descent recursion, as an independent check.

    The longest element maps to x1^{n-1} x2^{n-2} ... x_{n-1}; any ascent i
    gives the polynomial as a divided difference of the one for w s_i.
    """
    n = len(w)
    if w == perms.longest_element(n):
        return Polynomial.monomial(tuple(range(n - 1, 0, -1)))
    for i in range(1, n):
        if w[i - 1] < w[i]:
            return divided_difference(schubert_perm_descent(perms.apply_right(w, i)), i)
    raise AssertionError("unreachable")


_SCHUBERT_CLAN_CACHE = {}


def schubert_clan(c):
    """Clan Schubert polynomial: sum over reduced words of the clan and the
    compatible sequences of each word."""
    cached = _SCHUBERT_CLAN_CACHE.get(c)
    if cached is not None:
        return cached
    out = {}
    for a in clan_reduced_words(c):
        for b in compatible_sequences(a):
            e = _content_monomial(b)
            out[e] = out.get(e, 0) + 1
    f = Polynomial(out)
    _SCHUBERT_CLAN_CACHE[c] = f
    return f


def schubert_clan_atoms(c):
    """Same polynomial as a sum of Schubert polynomials over the atoms."""
    from .atoms_shapes import atoms

    total = Polynomial.zero()
    for w in atoms(c):
        total = total + schubert_perm(w)
    return total


@lru_cache(maxsize=None)
def complete_homogeneous(d, k):
    """h_d(x_1..x_k)."""
    if d == 0:
        return Polynomial.one()
    if d < 0 or k == 0:
        return Polynomial.zero()
    return complete_homogeneous(d, k - 1) + Polynomial.variable(k) * complete_homogeneous(
        d - 1, k
    )


def flagged_schur(lam, phi):
    """Flagged Schur polynomial: tableaux of shape lam with row i entries <= phi_i.

    Rows are filled weakly increasing, columns strictly; zero parts are
    allowed and contribute nothing.
    """
    lam = tuple(lam)
    phi = tuple(phi)
    if len(lam) != len(phi):
        raise ValueError("flag list must match the partition length")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("partition parts must weakly decrease")
    rows = [(lam[i], phi[i]) for i in range(len(lam)) if lam[i] > 0]
    out = {}

    def fill(r, prev_row, content):
        if r == len(rows):
            e = _trim(content)
            out[e] = out.get(e, 0) + 1
            return
        size, cap = rows[r]
        row = [0] * size

        def cell(j):
            if j == size:
                fill(r + 1, row[:], content)
                return
            lo = row[j - 1] if j > 0 else 1
            if r > 0 and j < len(prev_row):
                lo = max(lo, prev_row[j] + 1)
            for val in range(lo, cap + 1):
                row[j] = val
                content[val - 1] += 1
                cell(j + 1)
                content[val - 1] -= 1

        cell(0)

    max_var = max(phi, default=0)
    fill(0, (), [0] * max_var)
    return Polynomial(out)


def flagged_schur_determinant(lam, phi):
    """The same flagged Schur polynomial as a determinant of complete
    homogeneous pieces h_{lam_i - i + j}(x_1..x_{phi_i})."""
    lam = tuple(lam)
    phi = tuple(phi)
    ell = len(lam)
    if ell == 0:
        return Polynomial.one()
    entry = {}
    for i in range(ell):
        for j in range(ell):
            entry[i, j] = complete_homogeneous(lam[i] - i + j, phi[i])
    total = Polynomial.zero()
    for sigma in itertools.permutations(range(ell)):
        inv = sum(
            1
            for i in range(ell)
            for j in range(i + 1, ell)
            if sigma[i] > sigma[j]
        )
        prod = Polynomial.one()
        for i in range(ell):
            prod = prod * entry[i, sigma[i]]
            if not prod:
                break
        total = total + (prod if inv % 2 == 0 else -prod)
    return total


_FLAGGED_CACHE = {}


def schubert_clan_flagged(c):
    """Clan Schubert polynomial by the flagged recurrence.

    A matchless clan gets the product of the two flagged Schur polynomials
    cut out by its sign pattern; any other clan is a divided difference of
    the polynomial of a clan covering it.
    """
    cached = _FLAGGED_CACHE.get(c)
    if cached is not None:
        return cached
    if c.is_matchless:
        phi_plus, lam_plus, phi_minus, lam_minus = profile(c)
        f = flagged_schur(lam_plus, phi_plus) * flagged_schur(lam_minus, phi_minus)
    else:
        i, up = up_covers(c)[0]
        f = divided_difference(schubert_clan_flagged(up), i)
    _FLAGGED_CACHE[c] = f
    return f


def schubert_clan_flagged_all_chains(c, _memo=None):
    """Flagged recurrence along every cover at once; raises RuntimeError if
    two chains ever disagree."""
    if _memo is None:
        _memo = {}
    cached = _memo.get(c)
    if cached is not None:
        return cached
    if c.is_matchless:
        phi_plus, lam_plus, phi_minus, lam_minus = profile(c)
        f = flagged_schur(lam_plus, phi_plus) * flagged_schur(lam_minus, phi_minus)
    else:
        vals = [
            divided_difference(schubert_clan_flagged_all_chains(up, _memo), i)
            for i, up in up_covers(c)
        ]
        f = vals[0]
        if any(v != f for v in vals[1:]):
            raise RuntimeError(f"cover chains disagree above {c!r}")
    _memo[c] = f
    return f


def stanley_truncated(c, num_vars):
    """Stable limit of the clan Schubert polynomial, cut to x_1..x_num_vars.

    Shifting every word up by num_vars - 1 letters puts the compatible
    sequence caps out of reach, so each word contributes all weakly
    increasing sequences bounded by num_vars that rise at its ascents.
    """
    out = {}
    for a in clan_reduced_words(c):
        for b in compatible_sequences(a, bound=num_vars):
            e = _content_monomial(b)
            out[e] = out.get(e, 0) + 1
    return Polynomial(out)


def stanley_truncated_operator(c, num_vars):
    """The same truncation via the longest-element isobaric operator applied
    to the clan Schubert polynomial in max(num_vars, n) variables."""
    m = max(num_vars, c.n)
    return apply_isobaric_longest(schubert_clan(c), m).restrict(num_vars)


def clear_caches():
    _SCHUBERT_CLAN_CACHE.clear()
    _FLAGGED_CACHE.clear()
    schubert_perm.cache_clear()
    schubert_perm_descent.cache_clear()
    complete_homogeneous.cache_clear()
