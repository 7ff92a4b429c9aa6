"""Weak order on (p, q)-clans: covers, reduced words, posets, chain counts.

gamma * s_i lies below gamma exactly when the underlying involution gets
longer.  Reduced words are the label sequences of saturated chains down to
the minimal clan, read so that the last letter is applied first:
a is a word for gamma when (...(gamma * s_{a_l}) * ... ) * s_{a_1} is minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .clans import (
    Clan,
    all_clans,
    format_clan,
    minimal_clan,
    star,
    underlying_involution,
    _swap_positions,
)
from .permutations import length as perm_length

POSET_SIZE_CAP = 10


@lru_cache(maxsize=None)
def iota_length(c):
    return perm_length(underlying_involution(c))


def height(c):
    return iota_length(c) + c.num_arcs


@lru_cache(maxsize=None)
def _min_height(p, q):
    return height(minimal_clan(p, q))


def rank(c):
    """Distance from the minimal clan; each cover drops the height by 2."""
    return (_min_height(c.p, c.q) - height(c)) // 2


def down_covers(c):
    """Pairs (i, delta) with delta = gamma * s_i covered by gamma."""
    ln = iota_length(c)
    out = []
    for i in range(1, c.n):
        d = star(c, i)
        if d is not None and iota_length(d) > ln:
            out.append((i, d))
    return out


def up_covers(c):
    """Pairs (i, gamma') with gamma' covering gamma and gamma' * s_i = gamma.

    i runs over descents of the underlying involution.  When i, i+1 are
    matched to each other the arc opens into two signed fixed points, giving
    two covers; otherwise the unique cover is the conjugate clan.
    """
    iota = underlying_involution(c)
    out = []
    for i in range(1, c.n):
        if iota[i - 1] <= iota[i]:
            continue
        k = i - 1
        if c.entries[k] == k + 1:
            for first, second in (("+", "-"), ("-", "+")):
                ent = list(c.entries)
                ent[k] = first
                ent[k + 1] = second
                out.append((i, Clan(ent)))
        else:
            out.append((i, Clan(_swap_positions(c.entries, k))))
    out.sort(key=lambda pair: (pair[0], pair[1].key))
    return out


_WORDS_CACHE = {}
_COUNT_CACHE = {}


def reduced_words(c):
    """All reduced words of the clan, as a sorted tuple of tuples."""
    cached = _WORDS_CACHE.get(c)
    if cached is not None:
        return cached
    covers = down_covers(c)
    if not covers:
        words = ((),)
    else:
        out = []
        for i, d in covers:
            for b in reduced_words(d):
                out.append(b + (i,))
        words = tuple(sorted(out))
    _WORDS_CACHE[c] = words
    return words


def count_reduced_words(c):
    cached = _COUNT_CACHE.get(c)
    if cached is not None:
        return cached
    covers = down_covers(c)
    total = 1 if not covers else sum(count_reduced_words(d) for _, d in covers)
    _COUNT_CACHE[c] = total
    return total


def clear_caches():
    _WORDS_CACHE.clear()
    _COUNT_CACHE.clear()
    iota_length.cache_clear()
    _min_height.cache_clear()


def is_reduced_word_for(c, word):
    """Check that applying the word (last letter first) walks down to the minimal clan."""
    cur = c
    for i in reversed(word):
        if not 1 <= i <= c.n - 1:
            return False
        nxt = star(cur, i)
        if nxt is None or iota_length(nxt) <= iota_length(cur):
            return False
        cur = nxt
    return not down_covers(cur)


@dataclass(frozen=True)
class ClanPoset:
    p: int
    q: int
    elements: tuple  # clans sorted by (rank, canonical text)
    covers: tuple  # (lower index, upper index, label i)


def build_poset(p, q, force=False):
    """The full weak order poset on (p, q)-clans.

    Refuses p + q > 10 unless force is set, since the element count grows
    fast.  Elements are sorted by rank and then by canonical text; covers are
    sorted triples of indices into the element list.
    """
    if p + q > POSET_SIZE_CAP and not force:
        raise ValueError(
            f"p + q = {p + q} exceeds the safety cap {POSET_SIZE_CAP}; pass force=True"
        )
    bottom = minimal_clan(p, q)
    seen = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for c in frontier:
            for _, up in up_covers(c):
                if up not in seen:
                    seen.add(up)
                    nxt.append(up)
        frontier = nxt
    if len(seen) != len(all_clans(p, q)):
        raise RuntimeError("poset walk missed some clans")
    elements = tuple(sorted(seen, key=lambda c: (rank(c), c.key)))
    index = {c: i for i, c in enumerate(elements)}
    covers = []
    for c in elements:
        for i, d in down_covers(c):
            covers.append((index[d], index[c], i))
    covers.sort()
    return ClanPoset(p=p, q=q, elements=elements, covers=tuple(covers))


def poset_to_json_dict(poset):
    return {
        "elements": [format_clan(c) for c in poset.elements],
        "covers": [list(t) for t in poset.covers],
    }


def poset_to_dot(poset):
    """Graphviz text, edges directed lower to upper and labeled by the letter."""
    lines = ["digraph clans {"]
    for c in poset.elements:
        lines.append(f'  "{c.key}";')
    for lo, hi, i in poset.covers:
        lines.append(
            f'  "{poset.elements[lo].key}" -> "{poset.elements[hi].key}" [label="s{i}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def maximal_clans(p, q):
    """The matchless clans, i.e. the maximal elements of the weak order."""
    return [c for c in all_clans(p, q) if c.is_matchless]


def count_maximal_chains(p, q, force=False):
    """Number of maximal chains of the weak order, by summing word counts over tops."""
    if p + q > POSET_SIZE_CAP and not force:
        raise ValueError(
            f"p + q = {p + q} exceeds the safety cap {POSET_SIZE_CAP}; pass force=True"
        )
    return sum(count_reduced_words(c) for c in maximal_clans(p, q))
