"""Closed-form counts: words of a matchless clan, involution words, chains."""

import itertools
import math

import pytest

from pqclans.clans import all_clans, minimal_clan, parse_clan
from pqclans.counting import (
    all_involutions,
    chain_lift_check,
    count_involution_words,
    count_maximal_chains_via_involutions,
    in_involution_set,
    involution_star,
    involution_words,
    iota_fiber_size,
    lift_count,
    longest_involution,
    maximal_chain_formula,
    maximal_chain_formula_factorials,
    product_formula_count,
    product_formula_count_tableaux,
    two_cycles,
)
from pqclans.symfun import count_shifted_syt, staircase
from pqclans.weak_order import count_maximal_chains, count_reduced_words


def inv_count(w):
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def twisted_step(z, i):
    """One upward step in the involution weak order, or z itself if stuck."""
    s = list(range(1, len(z) + 1))
    s[i - 1], s[i] = s[i], s[i - 1]
    conj = tuple(s[z[s[k] - 1] - 1] for k in range(len(z)))
    if conj == z:
        return tuple(z[s[k] - 1] for k in range(len(z)))
    return conj


def brute_involution_words(z):
    """All minimal-length letter sequences reaching z from the identity."""
    n = len(z)
    ident = tuple(range(1, n + 1))
    found = set()

    def walk(cur, word):
        if cur == z:
            found.add(word)
            return
        if inv_count(cur) >= inv_count(z):
            return
        for i in range(1, n):
            nxt = twisted_step(cur, i)
            if inv_count(nxt) > inv_count(cur):
                walk(nxt, word + (i,))

    walk(ident, ())
    return found


class TestProductFormula:
    @pytest.mark.parametrize(
        "text, expect",
        [
            ("+ -", 1),
            ("+ - -", 1),
            ("- + -", 2),
            ("+ - - +", 6),
            ("- + - +", 8),
            ("+ + - -", 2),
        ],
    )
    def test_goldens(self, text, expect):
        c = parse_clan(text)
        assert product_formula_count(c) == expect
        assert product_formula_count_tableaux(c) == expect

    def test_matches_enumeration(self):
        for p, q in [(1, 1), (1, 2), (2, 2), (1, 4), (3, 2)]:
            for c in all_clans(p, q):
                if c.is_matchless:
                    assert product_formula_count(c) == count_reduced_words(c)

    def test_two_forms_agree(self):
        for p, q in [(3, 3), (2, 4), (1, 6)]:
            for c in all_clans(p, q):
                if c.is_matchless:
                    assert product_formula_count(c) == product_formula_count_tableaux(c)

    def test_rejects_arcs(self):
        with pytest.raises(ValueError):
            product_formula_count(parse_clan("2 1"))


class TestInvolutionWords:
    def test_goldens(self):
        assert involution_words((1, 2)) == ((),)
        assert involution_words((2, 1, 3)) == ((1,),)
        assert count_involution_words((4, 3, 2, 1)) == 8
        assert (1, 2, 3, 2) in involution_words((4, 3, 2, 1))

    def test_longest_involution(self):
        assert longest_involution(2, 2) == (4, 3, 2, 1)
        assert longest_involution(2, 1) == (3, 2, 1)
        assert longest_involution(3, 1) == (4, 2, 3, 1)
        assert two_cycles(longest_involution(3, 2)) == 2

    def test_matches_brute_force(self):
        for n in (2, 3, 4):
            for z in all_involutions(n):
                assert set(involution_words(z)) == brute_involution_words(z)

    def test_large_count(self):
        assert count_involution_words(longest_involution(3, 3)) == 2688

    def test_staircase_tableau_formula(self):
        # |words(longest)| = 2^(pq - q) * (shifted tableaux of the staircase)
        for p, q in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1)]:
            expected = 2 ** (p * q - q) * count_shifted_syt(staircase(p, q))
            assert count_involution_words(longest_involution(p, q)) == expected


class TestIotaFibers:
    def test_fibers_partition_the_clans(self):
        for p, q in [(1, 1), (1, 2), (2, 2), (1, 3)]:
            n = p + q
            members = [z for z in all_involutions(n) if in_involution_set(z, p, q)]
            assert sum(iota_fiber_size(z, p, q) for z in members) == len(all_clans(p, q))

    def test_excluded_involution(self):
        # an involution with more two-cycles than min(p, q) has no clans above it
        assert not in_involution_set((2, 1, 4, 3), 3, 1)
        assert in_involution_set((2, 1, 4, 3), 2, 2)

    def test_small_fibers(self):
        assert iota_fiber_size((1, 2, 3), 1, 2) == 3
        assert iota_fiber_size((2, 1, 3), 1, 2) == 1
        assert iota_fiber_size((3, 2, 1), 1, 2) == 1


class TestMaximalChains:
    @pytest.mark.parametrize(
        "p, q, expect",
        [
            (1, 1, 2),
            (2, 1, 4),
            (1, 2, 4),
            (2, 2, 32),
            (3, 1, 8),
            (2, 3, 320),
            (3, 3, 21504),
            (4, 2, 3584),
        ],
    )
    def test_formula_goldens(self, p, q, expect):
        assert maximal_chain_formula(p, q) == expect

    def test_factorial_form_agrees(self):
        for p in range(1, 5):
            for q in range(1, 5):
                assert maximal_chain_formula(p, q) == maximal_chain_formula_factorials(p, q)

    def test_matches_poset_walk(self):
        for p, q in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 4)]:
            assert maximal_chain_formula(p, q) == count_maximal_chains(p, q)

    def test_via_involutions(self):
        for p, q in [(1, 1), (2, 1), (2, 2), (3, 1), (2, 3)]:
            assert count_maximal_chains_via_involutions(p, q) == maximal_chain_formula(p, q)

    def test_two_to_the_q_per_word(self):
        # every involution word for the top element lifts to 2^q chains
        for p, q in [(1, 1), (2, 1), (2, 2)]:
            bottom = minimal_clan(p, q)
            kappa = min(p, q)
            for word in involution_words(longest_involution(p, q)):
                assert lift_count(bottom, word) == 2 ** kappa

    def test_chain_lift_check(self):
        assert chain_lift_check(1, 2)
        assert chain_lift_check(2, 2)
        assert chain_lift_check(3, 1)


class TestInvolutionStar:
    def test_directions(self):
        assert involution_star((1, 2), 1) == (2, 1)
        assert involution_star((2, 1), 1) == (1, 2)
        # conjugation case: s_1 acts on (1, 3, 2) by swapping 1 and 2
        assert involution_star((1, 3, 2), 1) == (3, 2, 1) or involution_star((1, 3, 2), 1) == (2, 1, 3)

    def test_agrees_with_oracle_upward(self):
        for n in (3, 4):
            for z in all_involutions(n):
                for i in range(1, n):
                    up = twisted_step(z, i)
                    if inv_count(up) > inv_count(z):
                        assert involution_star(z, i) == up
