"""Continuous relaxation of the word count and the argmax search."""

import math

import pytest

from pqclans.clans import all_clans, format_clan, parse_clan
from pqclans.counting import product_formula_count, profile
from pqclans.maximizer import (
    argmax_reduced_words,
    candidate_positions,
    integrate_density,
    limit_density,
    log_f,
    matchless_from_plus_positions,
    meet_join,
    minimize_f,
    two_row_targets,
)

BOUND = 33 / 64


class TestLogF:
    def test_unit_value(self):
        assert log_f((1.0, 2.0), 2) == pytest.approx(0.0, abs=1e-12)

    def test_interior_value(self):
        # Gamma(1.5) * Gamma(2.5)
        expect = math.lgamma(1.5) + math.lgamma(2.5)
        assert log_f((1.5,), 3) == pytest.approx(expect, rel=1e-12)

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            log_f((1.0, 1.0), 2)
        with pytest.raises(ValueError):
            log_f((0.0,), 2)
        with pytest.raises(ValueError):
            log_f((2.5,), 2)

    def test_inverts_to_word_count(self):
        # (pq)! / f(plus positions) recovers the closed-form count
        for p, q in [(1, 2), (2, 2), (2, 3), (1, 5)]:
            for c in all_clans(p, q):
                if not c.is_matchless:
                    continue
                phi = tuple(float(x) for x in profile(c)[0])
                est = math.factorial(p * q) / math.exp(log_f(phi, p + q))
                assert est == pytest.approx(product_formula_count(c), rel=1e-9)


class TestMinimizeF:
    def test_single_coordinate_midpoint(self):
        assert minimize_f(1, 5)[0] == pytest.approx(3.0, abs=1e-9)
        assert minimize_f(1, 6)[0] == pytest.approx(3.5, abs=1e-9)

    def test_two_row_golden(self):
        phi = minimize_f(2, 20)
        assert phi[0] == pytest.approx(8.281596014901659, abs=1e-8)
        assert phi[1] == pytest.approx(12.718403985138185, abs=1e-8)
        # minimizer of a symmetric function sits symmetrically
        assert phi[0] + phi[1] == pytest.approx(21.0, abs=1e-8)

    def test_restart_stability(self):
        base = minimize_f(2, 20)
        for start in [(5.0, 16.0), (9.9, 10.1)]:
            again = minimize_f(2, 20, start=start)
            assert max(abs(a - b) for a, b in zip(base, again)) < 1e-7

    def test_result_is_local_min(self):
        phi = minimize_f(2, 12)
        v0 = log_f(phi, 12)
        eps = 1e-4
        for k in range(2):
            for sign in (-1.0, 1.0):
                moved = list(phi)
                moved[k] += sign * eps
                assert log_f(tuple(moved), 12) >= v0 - 1e-12


class TestTargetsAndCandidates:
    def test_two_row_targets(self):
        lo, hi = two_row_targets(20)
        assert lo == pytest.approx(10.5 - math.sqrt(20) / 2, rel=1e-12)
        assert hi == pytest.approx(10.5 + math.sqrt(20) / 2, rel=1e-12)

    def test_candidates_golden(self):
        assert candidate_positions(2, 20) == [[7, 8, 9, 10], [11, 12, 13, 14]]
        assert candidate_positions(1, 9) == [[4, 5, 6, 7]]
        # clipped at the ends of [1, n]
        assert candidate_positions(2, 5) == [[1, 2, 3], [3, 4, 5]]

    def test_deviation_bound_small_n(self):
        for n in range(3, 61):
            phi = minimize_f(2, n)
            lo, hi = two_row_targets(n)
            assert abs(phi[0] - lo) <= BOUND + 1e-6
            assert abs(phi[1] - hi) <= BOUND + 1e-6


class TestArgmax:
    def test_goldens(self):
        count, best = argmax_reduced_words(1, 2)
        assert count == 2
        assert [format_clan(c) for c in best] == ["- + -"]
        count, best = argmax_reduced_words(1, 3)
        assert count == 3
        assert [format_clan(c) for c in best] == ["- + - -", "- - + -"]
        count, best = argmax_reduced_words(2, 2)
        assert count == 8
        assert [format_clan(c) for c in best] == ["+ - + -", "- + - +"]

    def test_argmax_matches_exhaustive(self):
        for p, q in [(1, 4), (2, 3)]:
            count, best = argmax_reduced_words(p, q)
            matchless = [c for c in all_clans(p, q) if c.is_matchless]
            counts = {c: product_formula_count(c) for c in matchless}
            top = max(counts.values())
            assert count == top
            assert set(best) == {c for c, k in counts.items() if k == top}

    def test_two_row_argmax_inside_candidates(self):
        for q in (3, 4, 5):
            n = 2 + q
            cands = candidate_positions(2, n)
            _, best = argmax_reduced_words(2, q)
            for c in best:
                phi = profile(c)[0]
                assert phi[0] in cands[0] and phi[1] in cands[1]


class TestMeetJoin:
    def test_golden(self):
        m, j = meet_join(parse_clan("+ - + -"), parse_clan("- + + -"))
        assert format_clan(m) == "+ - + -"
        assert format_clan(j) == "- + + -"

    def test_lattice_axioms(self):
        family = [c for c in all_clans(2, 2) if c.is_matchless]
        for a in family:
            for b in family:
                m, j = meet_join(a, b)
                assert meet_join(a, a) == (a, a)
                assert meet_join(b, a) == (m, j)
                pa, pb = profile(a)[0], profile(b)[0]
                pm, pj = profile(m)[0], profile(j)[0]
                assert pm == tuple(min(x, y) for x, y in zip(pa, pb))
                assert pj == tuple(max(x, y) for x, y in zip(pa, pb))

    def test_rejects(self):
        with pytest.raises(ValueError):
            meet_join(parse_clan("2 1"), parse_clan("2 1"))
        with pytest.raises(ValueError):
            meet_join(parse_clan("+ -"), parse_clan("+ - -"))


class TestPlusPositionRoundTrip:
    def test_round_trip(self):
        for p, q in [(1, 2), (2, 2), (3, 1)]:
            for c in all_clans(p, q):
                if c.is_matchless:
                    assert matchless_from_plus_positions(c.n, profile(c)[0]) == c


class TestLimitDensity:
    def test_uniform_at_theta_one(self):
        for t in (0.1, 0.25, 0.5, 0.9):
            assert limit_density(t, 1.0) == pytest.approx(1.0, abs=1e-12)
        assert limit_density(0.0, 1.0) == 0.0
        assert limit_density(1.0, 1.0) == 0.0

    def test_support_shrinks_below_one(self):
        # support pulls away from the endpoints once theta < 1
        assert limit_density(0.0, 0.25) == 0.0
        assert limit_density(0.2, 0.25) > 0.0
        assert limit_density(0.5, 0.25) > limit_density(0.2, 0.25)

    def test_symmetric(self):
        for theta in (0.25, 0.5, 1.0):
            for t in (0.1, 0.3, 0.45):
                assert limit_density(t, theta) == pytest.approx(
                    limit_density(1.0 - t, theta), abs=1e-12
                )

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            limit_density(-0.1, 0.5)
        with pytest.raises(ValueError):
            limit_density(0.5, 0.0)
        with pytest.raises(ValueError):
            limit_density(0.5, 1.5)

    @pytest.mark.parametrize("theta", [0.25, 0.5, 1.0])
    def test_integrates_to_one(self, theta):
        assert integrate_density(theta) == pytest.approx(1.0, abs=1e-6)

    def test_integral_rejects_bad_theta(self):
        with pytest.raises(ValueError):
            integrate_density(0.0)
        with pytest.raises(ValueError):
            integrate_density(1.5)
