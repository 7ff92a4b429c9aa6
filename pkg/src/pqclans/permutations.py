"""Permutations in one-line notation.

A permutation of {1..n} is a tuple of the 1-based values (w(1), ..., w(n)).
Simple transpositions are indexed 1..n-1; s_i swaps i and i+1.
"""

from __future__ import annotations

from functools import lru_cache


def identity(n):
    return tuple(range(1, n + 1))


def inverse(w):
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def length(w):
    """Number of inversions of w."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descents(w):
    """Positions i with w(i) > w(i+1), 1-based."""
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def apply_right(w, i):
    """w * s_i: swap the entries in positions i and i+1."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def apply_left(i, w):
    """s_i * w: swap the values i and i+1 wherever they occur."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def word_to_perm(word, n):
    """Evaluate the product s_{a_1} s_{a_2} ... s_{a_l} of a word a in S_n.

    Letters act by successive right multiplication: start from the identity
    and swap positions a_k, a_k + 1 reading the word left to right.
    """
    w = list(range(1, n + 1))
    for a in word:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter {a} out of range for S_{n}")
        w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def is_reduced(word, n):
    return length(word_to_perm(word, n)) == len(word)


@lru_cache(maxsize=None)
def reduced_words(w):
    """All reduced words of w, as a sorted tuple of tuples.

    Built by the descent recursion: a word for w is a word for w*s_i with the
    letter i appended, one family per descent i of w.
    """
    if not descents(w):
        return ((),)
    out = []
    for i in descents(w):
        for b in reduced_words(apply_right(w, i)):
            out.append(b + (i,))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def count_reduced_words(w):
    if not descents(w):
        return 1
    return sum(count_reduced_words(apply_right(w, i)) for i in descents(w))


def longest_element(n):
    return tuple(range(n, 0, -1))


def one_line(w):
    """Compact display: digits glued together for n <= 9, else comma separated."""
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)
