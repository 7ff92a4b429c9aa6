"""Locating the matchless clans with the most reduced words.

The word count of a matchless clan is (pq)! / f(phi) where f depends only on
the plus positions phi (equivalently the minus positions), and log f extends
to real arguments through log-gamma.  log f is strictly convex in each
coordinate, so a cyclic coordinate search with exact golden sections finds
the unique real minimizer, and integer maximizers sit among the nearby
rounding patterns.
"""

from __future__ import annotations

import math

from .clans import matchless_from_plus_positions, profile
from .counting import product_formula_count

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _log_gamma(x):
    """log Gamma with exact evaluation at integer points."""
    if x <= 0:
        raise ValueError("log gamma argument must be positive")
    r = round(x)
    if r >= 1 and abs(x - r) < 1e-12:
        return math.log(math.factorial(r - 1)) if r > 1 else 0.0
    return math.lgamma(x)


def log_f(phi, n):
    """log of the count denominator at real positions 1 <= phi_1 < ... < phi_m <= n.

    Sum of log Gamma(phi_k) + log Gamma(n + 1 - phi_k) minus twice the log
    differences of all pairs.
    """
    phi = list(phi)
    if not phi:
        return 0.0
    if phi[0] < 1 or phi[-1] > n:
        raise ValueError("positions must lie in [1, n]")
    if any(phi[k] >= phi[k + 1] for k in range(len(phi) - 1)):
        raise ValueError("positions must strictly increase")
    total = 0.0
    for x in phi:
        total += _log_gamma(x) + _log_gamma(n + 1 - x)
    for a in range(len(phi)):
        for b in range(a + 1, len(phi)):
            total -= 2.0 * math.log(phi[b] - phi[a])
    return total


def _golden_min(g, lo, hi, tol):
    """Golden section minimum of a strictly unimodal g on [lo, hi]."""
    invphi = type(lo)(_INVPHI)
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    gc, gd = g(c), g(d)
    while b - a > tol:
        if gc < gd:
            b, d, gd = d, c, gc
            c = b - invphi * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + invphi * (b - a)
            gd = g(d)
    return (a + b) / 2


def _descend(objective, phi, n, tol, max_cycles, radius=None):
    """Cyclic coordinate descent; stops when a full cycle moves every
    coordinate by less than tol.  radius restricts each line search to a
    window around the current value."""
    sep = 1e-9
    p = len(phi)
    for _ in range(max_cycles):
        biggest = 0.0
        for k in range(p):
            lo = type(phi[k])(1) if k == 0 else phi[k - 1] + sep
            hi = type(phi[k])(n) if k == p - 1 else phi[k + 1] - sep
            if radius is not None:
                lo = max(lo, phi[k] - radius)
                hi = min(hi, phi[k] + radius)

            def g(x, k=k):
                trial = phi.copy()
                trial[k] = x
                return objective(trial)

            new = _golden_min(g, lo, hi, tol / 4)
            biggest = max(biggest, abs(new - phi[k]))
            phi[k] = new
        if biggest < tol:
            return phi
    raise RuntimeError("coordinate descent did not converge")


def minimize_f(p, n, tol=1e-9, max_cycles=10000, start=None):
    """The real minimizer of log_f for p positions among n, by cyclic
    coordinate descent with golden section line searches.

    A first pass runs in machine floats.  Demanding tolerances sit below the
    float rounding plateau of log_f, so a second pass repeats the descent in
    40-digit arithmetic on a small window around the coarse answer; its line
    searches see an effectively exact objective and settle to tol.
    """
    if p < 1 or n < p:
        raise ValueError("need 1 <= p <= n")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if start is None:
        phi = [1.0 + (k + 1) * (n - 1.0) / (p + 1) for k in range(p)]
    else:
        phi = [float(x) for x in start]
        if len(phi) != p:
            raise ValueError("start must have p coordinates")
    coarse = max(tol, 1e-5)
    phi = _descend(lambda v: log_f(v, n), phi, n, coarse, max_cycles)
    if tol < coarse:
        import mpmath

        with mpmath.workdps(40):

            def objective(v):
                total = mpmath.mpf(0)
                for x in v:
                    total += mpmath.loggamma(x) + mpmath.loggamma(n + 1 - x)
                for a in range(len(v)):
                    for b in range(a + 1, len(v)):
                        total -= 2 * mpmath.log(v[b] - v[a])
                return total

            phi = _descend(
                objective,
                [mpmath.mpf(x) for x in phi],
                n,
                mpmath.mpf(tol),
                max_cycles,
                radius=mpmath.mpf("0.05"),
            )
    return tuple(float(x) for x in phi)


def two_row_targets(n):
    """For p = 2: the real optima (n+1)/2 -+ sqrt(n)/2."""
    mid = (n + 1) / 2.0
    off = math.sqrt(n) / 2.0
    return (mid - off, mid + off)


def candidate_positions(p, n):
    """Integer candidates near the real minimizer, for p = 2 the grid
    floor - 1 .. ceil + 1 around each target."""
    if p == 2:
        targets = two_row_targets(n)
    else:
        targets = minimize_f(p, n)
    grid = []
    for t in targets:
        lo = math.floor(t)
        vals = {lo - 1, lo, math.ceil(t), math.ceil(t) + 1}
        grid.append(sorted(v for v in vals if 1 <= v <= n))
    return grid


def argmax_reduced_words(p, q):
    """All matchless (p, q)-clans with the most reduced words, with the count.

    Exhaustive and exact over the plus position subsets.
    """
    import itertools

    n = p + q
    best = -1
    best_clans = []
    for plus in itertools.combinations(range(1, n + 1), p):
        c = matchless_from_plus_positions(n, plus)
        cnt = product_formula_count(c)
        if cnt > best:
            best = cnt
            best_clans = [c]
        elif cnt == best:
            best_clans.append(c)
    return best, sorted(best_clans)


def meet_join(c1, c2):
    """Lattice operations on matchless clans of one type: componentwise min
    and max of the plus position vectors."""
    if not (c1.is_matchless and c2.is_matchless):
        raise ValueError("lattice operations need matchless clans")
    if (c1.p, c1.q) != (c2.p, c2.q):
        raise ValueError("clans must share the same type")
    n = c1.n
    phi1 = profile(c1)[0]
    phi2 = profile(c2)[0]
    meet = tuple(min(a, b) for a, b in zip(phi1, phi2))
    join = tuple(max(a, b) for a, b in zip(phi1, phi2))
    return (
        matchless_from_plus_positions(n, meet),
        matchless_from_plus_positions(n, join),
    )


def limit_density(t, theta):
    """Limiting plus density profile at relative position t for aspect theta.

    Supported where |t - 1/2| < sqrt(theta)/(theta + 1); inside the support
    the value is (1+theta)/(2 theta) * (1 - (2/pi) asin(u)) with
    u = ((1-theta)/(1+theta)) / (2 sqrt(t(1-t))).  At theta = 1 this is the
    constant 1 on (0, 1).
    """
    if not 0 < theta <= 1:
        raise ValueError("theta must lie in (0, 1]")
    if not 0 <= t <= 1:
        raise ValueError("t must lie in [0, 1]")
    if abs(t - 0.5) >= math.sqrt(theta) / (theta + 1):
        return 0.0
    u = ((1 - theta) / (1 + theta)) / (2.0 * math.sqrt(t * (1.0 - t)))
    if u > 1.0:
        if u > 1.0 + 1e-12:
            raise ValueError("asin argument out of range")
        u = 1.0
    return (1 + theta) / (2 * theta) * (1.0 - (2.0 / math.pi) * math.asin(u))


def _density_closure(t, theta):
    """The density formula extended continuously to the closed support."""
    num = (1.0 - theta) / (1.0 + theta)
    if num == 0.0:
        u = 0.0
    else:
        u = num / (2.0 * math.sqrt(t * (1.0 - t)))
        u = min(u, 1.0)
    return (1 + theta) / (2 * theta) * (1.0 - (2.0 / math.pi) * math.asin(u))


def _adaptive_simpson(g, a, b, tol):
    fa, fb = g(a), g(b)
    m = 0.5 * (a + b)
    fm = g(m)

    def rec(a, b, fa, fm, fb, whole, tol):
        m = 0.5 * (a + b)
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm, frm = g(lm), g(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        if abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return rec(a, m, fa, flm, fm, left, tol / 2.0) + rec(
            m, b, fm, frm, fb, right, tol / 2.0
        )

    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return rec(a, b, fa, fm, fb, whole, tol)


def integrate_density(theta, tol=1e-9):
    """Integral of the limiting density over its support; equals 1."""
    if not 0 < theta <= 1:
        raise ValueError("theta must lie in (0, 1]")
    half_width = math.sqrt(theta) / (theta + 1)
    lo = 0.5 - half_width
    hi = 0.5 + half_width
    return _adaptive_simpson(lambda t: _density_closure(t, theta), lo, hi, tol)
