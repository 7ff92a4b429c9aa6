"""Counting formulas: reduced words of clans, involution words, chain counts.

The number of reduced words of a matchless clan has a product formula over
its sign positions and an equivalent form as a pair of standard tableau
counts.  Maximal chains of the whole weak order are counted through
involution words of the longest fixed-point-free-as-possible involution,
with a factor of two for every arc opened along the way.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .clans import Clan, all_clans, minimal_clan, profile, perfect_matchings
from .permutations import apply_left, apply_right, descents, identity, length
from .symfun import count_syt, staircase
from .weak_order import up_covers


def product_formula_count(c):
    """Number of reduced words of a matchless clan:
    (pq)! divided by |i - j| over all pairs of a plus position i and a minus
    position j."""
    phi_plus, lam_plus, phi_minus, lam_minus = profile(c)
    p, q = c.p, c.q
    total = Fraction(math.factorial(p * q))
    for i in phi_plus:
        for j in phi_minus:
            total /= abs(i - j)
    assert total.denominator == 1
    return int(total)


def product_formula_count_tableaux(c):
    """The same count as binomial(pq, |lam+|) times the two standard tableau
    counts of the profile partitions."""
    phi_plus, lam_plus, phi_minus, lam_minus = profile(c)
    p, q = c.p, c.q
    size = sum(lam_plus)
    assert size + sum(lam_minus) == p * q
    return (
        math.comb(p * q, size) * count_syt(lam_plus) * count_syt(lam_minus)
    )


def involution_star(z, i):
    """z * s_i: multiply on the right when s_i commutes with z, conjugate
    otherwise.  The same formula moves up from an ascent and down from a
    descent."""
    zs = apply_right(z, i)
    sz = apply_left(i, z)
    return zs if zs == sz else apply_left(i, zs)


@lru_cache(maxsize=None)
def involution_words(z):
    """All involution words of z: label sequences of saturated chains from
    the identity in the weak order on involutions, last letter applied first."""
    if not descents(z):
        return ((),)
    out = []
    for i in descents(z):
        for b in involution_words(involution_star(z, i)):
            out.append(b + (i,))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def count_involution_words(z):
    if not descents(z):
        return 1
    return sum(count_involution_words(involution_star(z, i)) for i in descents(z))


def two_cycles(z):
    return sum(1 for k, v in enumerate(z, start=1) if v != k) // 2


def longest_involution(p, q):
    """(1 n)(2 n-1)...(m n-m+1) with m = min(p, q): the image of the minimal
    clan, and the top of the involutions with at most m two-cycles."""
    n = p + q
    m = min(p, q)
    z = list(range(1, n + 1))
    for k in range(m):
        z[k], z[n - 1 - k] = z[n - 1 - k], z[k]
    return tuple(z)


def in_involution_set(z, p, q):
    return len(z) == p + q and two_cycles(z) <= min(p, q)


def all_involutions(n):
    """Every involution of S_n."""
    out = []
    for k in range(n // 2 + 1):
        for support in itertools.combinations(range(1, n + 1), 2 * k):
            for matching in perfect_matchings(list(support)):
                z = list(range(1, n + 1))
                for i, j in matching:
                    z[i - 1], z[j - 1] = j, i
                out.append(tuple(z))
    return out


def underlying_involution_of(c):
    from .clans import underlying_involution

    return underlying_involution(c)


def maximal_chain_formula(p, q):
    """Closed form for the number of maximal chains in the weak order:
    2^{pq} times the multinomial of pq over the staircase parts, divided by
    the product of central binomial-type factors."""
    a, b = max(p, q), min(p, q)
    parts = staircase(a, b)
    assert sum(parts) == a * b
    value = Fraction(2 ** (a * b)) * math.factorial(a * b)
    for part in parts:
        value /= math.factorial(part)
    for i in range(1, b + 1):
        value /= math.comb(a + b - 2 * i, a - i)
    assert value.denominator == 1
    return int(value)


def maximal_chain_formula_factorials(p, q):
    """The same count written with factorials only."""
    a, b = max(p, q), min(p, q)
    value = Fraction(2 ** (a * b)) * math.factorial(a * b)
    for i in range(1, b + 1):
        value *= Fraction(
            math.factorial(a - i) * math.factorial(b - i),
            math.factorial(a + b - 2 * i) * math.factorial(a + b - 2 * i + 1),
        )
    assert value.denominator == 1
    return int(value)


def iota_fiber_size(z, p, q):
    """Number of clans over an involution: choose which of the n - 2k fixed
    points are plus signs, k the number of two-cycles."""
    n = p + q
    k = two_cycles(z)
    if not in_involution_set(z, p, q):
        return 0
    return math.comb(n - 2 * k, p - k)


def lift_count(c, word):
    """Number of saturated chains in the clan order starting at c whose
    labels, read from the top of the word down, follow the word.

    Walking up, the cover label determines the involution step, so the walk
    only branches where an arc opens into signed fixed points.
    """
    frontier = [c]
    for letter in reversed(word):
        nxt = []
        for delta in frontier:
            for i, up in up_covers(delta):
                if i == letter:
                    nxt.append(up)
        frontier = nxt
        if not frontier:
            return 0
    return len(frontier)


def chain_lift_check(p, q):
    """Every involution word of every involution in range lifts to exactly
    2^(two-cycle count) chains from each clan in its fiber."""
    n = p + q
    for z in all_involutions(n):
        if not in_involution_set(z, p, q):
            continue
        fiber = [
            c for c in all_clans(p, q) if underlying_involution_of(c) == z
        ]
        if len(fiber) != iota_fiber_size(z, p, q):
            return False
        expect = 2 ** two_cycles(z)
        for word in involution_words(z):
            for c in fiber:
                if lift_count(c, word) != expect:
                    return False
    return True


def count_maximal_chains_via_involutions(p, q):
    """2^{min(p,q)} times the involution word count of the longest element."""
    return 2 ** min(p, q) * count_involution_words(longest_involution(p, q))
