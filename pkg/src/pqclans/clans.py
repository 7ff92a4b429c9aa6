"""Clans: involutions with signed fixed points.

A clan of type (p, q) is a partial matching of {1..n}, n = p + q, whose
unmatched points each carry a sign, subject to
(number of +) - (number of -) = p - q.  Equivalently p = (#+) + (#arcs) and
q = (#-) + (#arcs).

Text form: whitespace separated tokens, one per position; "+" or "-" for a
signed fixed point and the 1-based partner for a matched point.  Example:
"3 - 1" is the clan with arc {1,3} and a minus at position 2.
"""

from __future__ import annotations

import itertools

PLUS = "+"
MINUS = "-"


class Clan:
    """Immutable signed partial matching on {1..n}.

    entries[k] is "+" or "-" when position k+1 is a signed fixed point, and
    the 0-based partner index when it is matched.
    """

    __slots__ = ("n", "entries", "_key", "_hash")

    def __init__(self, entries):
        entries = tuple(entries)
        n = len(entries)
        if n == 0:
            raise ValueError("a clan needs at least one position")
        for k, e in enumerate(entries):
            if e == PLUS or e == MINUS:
                continue
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError(f"bad entry {e!r} at position {k + 1}")
            if not 0 <= e < n:
                raise ValueError(f"partner of position {k + 1} out of range")
            if e == k:
                raise ValueError(f"position {k + 1} matched with itself")
            if entries[e] != k:
                raise ValueError(
                    f"positions {k + 1} and {e + 1} do not agree on their matching"
                )
        self.n = n
        self.entries = entries
        self._key = None
        self._hash = hash(entries)

    @property
    def p(self):
        return sum(1 for e in self.entries if e == PLUS) + self.num_arcs

    @property
    def q(self):
        return sum(1 for e in self.entries if e == MINUS) + self.num_arcs

    @property
    def num_arcs(self):
        return sum(1 for e in self.entries if isinstance(e, int)) // 2

    def arcs(self):
        """Matched pairs as sorted (i, j) with i < j, 1-based."""
        return [
            (k + 1, e + 1)
            for k, e in enumerate(self.entries)
            if isinstance(e, int) and e > k
        ]

    def fixed_points(self):
        """Signed fixed points as (position, sign) pairs, 1-based."""
        return [(k + 1, e) for k, e in enumerate(self.entries) if isinstance(e, str)]

    @property
    def is_matchless(self):
        return self.num_arcs == 0

    @property
    def key(self):
        if self._key is None:
            self._key = format_clan(self)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Clan) and self.entries == other.entries

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.n, self.key) < (other.n, other.key)

    def __repr__(self):
        return f"Clan({self.key!r})"


def format_clan(c):
    """Canonical text form: one token per position, 1-based partners."""
    return " ".join(
        e if isinstance(e, str) else str(e + 1) for e in c.entries
    )


def parse_clan(text):
    """Parse a clan from text.

    Accepts the canonical whitespace separated form, the compact sign string
    for matchless clans ("--+"), and the compact mixed form for n <= 9 where
    a digit is the 1-based partner ("3-1").  A unicode minus is treated as
    "-".
    """
    text = text.replace("−", "-").strip()
    if not text:
        raise ValueError("empty clan text")
    if any(ch.isspace() for ch in text):
        tokens = text.split()
    else:
        if not all(ch in "+-123456789" for ch in text):
            raise ValueError(f"bad compact clan text {text!r}")
        if len(text) > 9 and any(ch.isdigit() for ch in text):
            raise ValueError("compact digit form only supports n <= 9")
        tokens = list(text)
    entries = []
    for k, tok in enumerate(tokens):
        if tok in (PLUS, MINUS):
            entries.append(tok)
        else:
            try:
                j = int(tok)
            except ValueError:
                raise ValueError(f"bad token {tok!r} at position {k + 1}") from None
            if not 1 <= j <= len(tokens):
                raise ValueError(f"partner {j} out of range at position {k + 1}")
            entries.append(j - 1)
    return Clan(entries)


def clan_to_json_dict(c):
    return {
        "n": c.n,
        "entries": [e if isinstance(e, str) else e + 1 for e in c.entries],
    }


def clan_from_json_dict(d):
    n = d["n"]
    raw = d["entries"]
    if len(raw) != n:
        raise ValueError("entry list length does not match n")
    entries = []
    for e in raw:
        if e in (PLUS, MINUS):
            entries.append(e)
        elif isinstance(e, int) and not isinstance(e, bool):
            entries.append(e - 1)
        else:
            raise ValueError(f"bad json entry {e!r}")
    return Clan(entries)


def _swap_positions(entries, k):
    """Relabel positions k and k+1 (0-based) in an entry tuple."""

    def s(pos):
        if pos == k:
            return k + 1
        if pos == k + 1:
            return k
        return pos

    new = [None] * len(entries)
    for pos, e in enumerate(entries):
        new[s(pos)] = e if isinstance(e, str) else s(e)
    return tuple(new)


def star(c, i):
    """The partial right action of s_i on clans.

    Adjacent fixed points of opposite signs become an arc.  The action is
    undefined (returns None) when positions i, i+1 are matched to each other
    or are fixed points of equal sign.  In every other case the result is the
    conjugate: positions i and i+1 trade their entries.
    """
    if not 1 <= i <= c.n - 1:
        raise ValueError(f"index {i} out of range for n={c.n}")
    k = i - 1
    a, b = c.entries[k], c.entries[k + 1]
    if isinstance(a, str) and isinstance(b, str):
        if a == b:
            return None
        ent = list(c.entries)
        ent[k] = k + 1
        ent[k + 1] = k
        return Clan(ent)
    if a == k + 1:
        return None
    return Clan(_swap_positions(c.entries, k))


def underlying_involution(c):
    """The involution fixing signed points and swapping matched pairs."""
    return tuple(
        k + 1 if isinstance(e, str) else e + 1 for k, e in enumerate(c.entries)
    )


def minimal_clan(p, q):
    """The bottom of the weak order on (p, q)-clans.

    Arcs {1, n}, {2, n-1}, ..., {m, n-m+1} with m = min(p, q); the middle
    positions are fixed points carrying the sign of p - q.
    """
    if p < 0 or q < 0 or p + q == 0:
        raise ValueError("need p, q >= 0 with p + q >= 1")
    n = p + q
    m = min(p, q)
    sign = PLUS if p >= q else MINUS
    entries = []
    for k in range(n):
        if k < m or k >= n - m:
            entries.append(n - 1 - k)
        else:
            entries.append(sign)
    return Clan(entries)


def shift_clan(c, m):
    """Surround the clan with m nested arcs.

    One step sends a clan on {1..n} to a clan on {1..n+2}: old positions move
    up by one and a new arc {1, n+2} is added.  Type (p, q) becomes
    (p + m, q + m).
    """
    if m < 0:
        raise ValueError("shift amount must be nonnegative")
    cur = c
    for _ in range(m):
        n = cur.n
        entries = [n + 1]
        entries.extend(e if isinstance(e, str) else e + 1 for e in cur.entries)
        entries.append(0)
        cur = Clan(entries)
    return cur


def reverse_clan(c):
    """Left-right mirror of a matchless clan."""
    if not c.is_matchless:
        raise ValueError("reverse_clan expects a matchless clan")
    return Clan(tuple(reversed(c.entries)))


def negate_clan(c):
    """Flip every sign of a matchless clan."""
    if not c.is_matchless:
        raise ValueError("negate_clan expects a matchless clan")
    return Clan(tuple(MINUS if e == PLUS else PLUS for e in c.entries))


def profile(c):
    """Flags and partitions of a matchless clan.

    Returns (phi_plus, lambda_plus, phi_minus, lambda_minus): the positions
    of the plus signs, the partition counting minus signs to the right of
    each plus, and the same pair with the roles of the signs exchanged.
    Zero parts are kept, so the partitions have lengths p and q.
    """
    if not c.is_matchless:
        raise ValueError("profile expects a matchless clan")
    phi_plus = tuple(k + 1 for k, e in enumerate(c.entries) if e == PLUS)
    phi_minus = tuple(k + 1 for k, e in enumerate(c.entries) if e == MINUS)
    lam_plus = tuple(sum(1 for j in phi_minus if j > i) for i in phi_plus)
    lam_minus = tuple(sum(1 for j in phi_plus if j > i) for i in phi_minus)
    return phi_plus, lam_plus, phi_minus, lam_minus


def matchless_from_plus_positions(n, plus_positions):
    """Matchless clan on {1..n} with plus signs exactly at the given 1-based positions."""
    plus = set(plus_positions)
    if not plus <= set(range(1, n + 1)):
        raise ValueError("positions out of range")
    return Clan(tuple(PLUS if k + 1 in plus else MINUS for k in range(n)))


def perfect_matchings(points):
    """All perfect matchings of an even point list, as lists of (i, j) pairs."""
    points = list(points)
    if not points:
        yield []
        return
    first = points[0]
    for idx in range(1, len(points)):
        rest = points[1:idx] + points[idx + 1 :]
        for m in perfect_matchings(rest):
            yield [(first, points[idx])] + m


def all_clans(p, q):
    """Every (p, q)-clan, in a fixed deterministic order."""
    n = p + q
    out = []
    for k in range(min(p, q) + 1):
        for arc_positions in itertools.combinations(range(1, n + 1), 2 * k):
            rest = [x for x in range(1, n + 1) if x not in arc_positions]
            for matching in perfect_matchings(list(arc_positions)):
                for plus in itertools.combinations(rest, p - k):
                    plus_set = set(plus)
                    entries = [MINUS] * n
                    for x in plus_set:
                        entries[x - 1] = PLUS
                    for (i, j) in matching:
                        entries[i - 1] = j - 1
                        entries[j - 1] = i - 1
                    out.append(Clan(entries))
    return out


def count_clans(p, q):
    """Closed form for the number of (p, q)-clans."""
    import math

    n = p + q
    total = 0
    for k in range(min(p, q) + 1):
        double_fact = 1
        for t in range(2 * k - 1, 0, -2):
            double_fact *= t
        total += math.comb(n, 2 * k) * double_fact * math.comb(n - 2 * k, p - k)
    return total
