"""Atoms of clans and their shapes.

The reduced words of a clan are the disjoint union of the reduced word sets
of finitely many permutations, the atoms.  Atoms are produced by a peeling
procedure that removes matched pairs and adjacent opposite-sign fixed points
from the outside in, assigning extreme values as it goes.

Every atom w determines a labelled shape: arc k joins the positions of the
values k and n - k + 1 in w, and the arc is marked when the larger value sits
to the left.  Forgetting labels gives the unlabelled shape, which determines
exactly which clans have w as an atom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .clans import Clan, PLUS, MINUS, all_clans
from .permutations import inverse
from .weak_order import reduced_words as clan_reduced_words

_ATOMS_CACHE = {}


def atoms(c):
    """All atoms of the clan, as a sorted list of permutations.

    Peels the positions of {1..n} down: at each stage with 2s positions
    already removed, removing a matched pair (i, j) assigns w(i) = s + 1 and
    w(j) = n - s, while removing an adjacent pair of opposite-sign fixed
    points assigns w(i) = n - s and w(j) = s + 1.  A pair may be removed only
    if no surviving matched pair surrounds it.  Once the survivors are fixed
    points of one sign, they receive the unused middle values in increasing
    order.
    """
    cached = _ATOMS_CACHE.get(c)
    if cached is not None:
        return list(cached)
    n = c.n
    ent = c.entries
    memo = {}

    def complete(S):
        done = memo.get(S)
        if done is not None:
            return done
        rem = sorted(S)
        s = (n - len(S)) // 2
        if all(isinstance(ent[t - 1], str) for t in rem) and len(
            {ent[t - 1] for t in rem}
        ) <= 1:
            tail = (tuple(zip(rem, range(s + 1, n - s + 1))),)
            memo[S] = tail
            return tail
        matched = [
            (t, ent[t - 1] + 1)
            for t in rem
            if isinstance(ent[t - 1], int) and ent[t - 1] + 1 > t
        ]
        candidates = [(i, j, True) for i, j in matched]
        for x, y in zip(rem, rem[1:]):
            ex, ey = ent[x - 1], ent[y - 1]
            if isinstance(ex, str) and isinstance(ey, str) and ex != ey:
                candidates.append((x, y, False))
        results = set()
        for i, j, is_match in candidates:
            if any(a < i and j < b for a, b in matched):
                continue
            head = ((i, s + 1), (j, n - s)) if is_match else ((i, n - s), (j, s + 1))
            for tail in complete(S - {i, j}):
                results.add(tuple(sorted(head + tail)))
        out = tuple(sorted(results))
        memo[S] = out
        return out

    perms = set()
    for assignment in complete(frozenset(range(1, n + 1))):
        w = [0] * n
        for pos, val in assignment:
            w[pos - 1] = val
        perms.add(tuple(w))
    result = sorted(perms)
    _ATOMS_CACHE[c] = tuple(result)
    return result


@dataclass(frozen=True, order=True)
class LabelledShape:
    n: int
    arcs: tuple  # (i, j, label, marked), sorted by label

    def to_json_dict(self):
        return {
            "n": self.n,
            "arcs": [[i, j, marked, label] for i, j, label, marked in self.arcs],
        }


@dataclass(frozen=True, order=True)
class UnlabelledShape:
    n: int
    arcs: tuple  # (i, j, marked), sorted by (i, j)

    def to_json_dict(self):
        return {
            "n": self.n,
            "arcs": [[i, j, marked, None] for i, j, marked in self.arcs],
        }

    @property
    def marked_arcs(self):
        return [(i, j) for i, j, marked in self.arcs if marked]

    @property
    def unmarked_arcs(self):
        return [(i, j) for i, j, marked in self.arcs if not marked]

    def endpoints(self):
        out = set()
        for i, j, _ in self.arcs:
            out.add(i)
            out.add(j)
        return out


def _check_labelled_rules(n, arcs):
    label_at = {}
    for i, j, lab, _ in arcs:
        if not (1 <= i < j <= n):
            raise ValueError(f"arc ({i}, {j}) out of range")
        for t in (i, j):
            if t in label_at:
                raise ValueError(f"position {t} used by two arcs")
            label_at[t] = lab
    for i, j, lab, marked in arcs:
        if marked:
            for t in range(i + 1, j):
                if label_at.get(t, lab) >= lab:
                    raise ValueError(
                        f"marked arc {lab} covers position {t} without a smaller label"
                    )
    for io, jo, labo, mko in arcs:
        if mko:
            continue
        for ii, ji, labi, _ in arcs:
            if io < ii and ji < jo and labi <= labo:
                raise ValueError(
                    f"arc {labi} nested inside unmarked arc {labo} needs a larger label"
                )


def lsh(w, p, q):
    """Labelled shape of a permutation of S_{p+q}.

    Arc k joins the positions of the values k and n - k + 1 for
    k = 1..min(p, q); the arc is marked when the larger value is on the left.
    Raises ValueError if the result breaks the labelled shape rules.
    """
    n = len(w)
    if p + q != n or p < 0 or q < 0:
        raise ValueError("permutation size must be p + q")
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError("not a permutation in one-line notation")
    inv = inverse(w)
    arcs = []
    for k in range(1, min(p, q) + 1):
        i, j = inv[k - 1], inv[n - k]
        arcs.append((min(i, j), max(i, j), k, i > j))
    _check_labelled_rules(n, arcs)
    return LabelledShape(n=n, arcs=tuple(arcs))


def forget_labels(shape):
    arcs = tuple(sorted((i, j, marked) for i, j, _, marked in shape.arcs))
    return UnlabelledShape(n=shape.n, arcs=arcs)


def ush(w, p, q):
    """Unlabelled shape of a permutation: lsh with the labels dropped."""
    return forget_labels(lsh(w, p, q))


def is_valid_shape_for(shape, c):
    """Whether the unlabelled shape is the shape of some atom of the clan.

    Requires min(p, q) pairwise disjoint arcs; the unmarked ones must be
    exactly the matched pairs of the clan, each marked one must join two
    fixed points of opposite signs, no two marked arcs may cross, and no
    unpaired position may sit strictly inside a marked arc.
    """
    if shape.n != c.n:
        return False
    if len(shape.arcs) != min(c.p, c.q):
        return False
    seen = set()
    for i, j, _ in shape.arcs:
        if not (1 <= i < j <= c.n) or i in seen or j in seen:
            return False
        seen.add(i)
        seen.add(j)
    if set(shape.unmarked_arcs) != set(c.arcs()):
        return False
    for i, j in shape.marked_arcs:
        a, b = c.entries[i - 1], c.entries[j - 1]
        if not (isinstance(a, str) and isinstance(b, str) and a != b):
            return False
    marked = shape.marked_arcs
    for (i1, j1), (i2, j2) in itertools.combinations(marked, 2):
        if i1 < i2 < j1 < j2 or i2 < i1 < j2 < j1:
            return False
    unpaired = [t for t in range(1, c.n + 1) if t not in seen]
    for t in unpaired:
        if any(i < t < j for i, j in marked):
            return False
    return True


def shape_atom(shape):
    """The atom of a clan having the given unlabelled shape.

    Labels are completed deterministically: unmarked arcs first in order of
    left endpoint, then marked arcs in order of right endpoint, and the arc
    labelled k places the values k and n - k + 1 at its endpoints (larger
    value on the left exactly for marked arcs).  Unpaired positions receive
    the middle values in increasing order.
    """
    n = shape.n
    unmarked = sorted(shape.unmarked_arcs)
    marked = sorted(shape.marked_arcs, key=lambda arc: arc[1])
    m = len(shape.arcs)
    w = [0] * n
    label = 0
    for i, j in unmarked:
        label += 1
        w[i - 1] = label
        w[j - 1] = n - label + 1
    for i, j in marked:
        label += 1
        w[i - 1] = n - label + 1
        w[j - 1] = label
    fill = iter(range(m + 1, n - m + 1))
    for t in range(n):
        if w[t] == 0:
            w[t] = next(fill)
    return tuple(w)


def shapes_of(c):
    """All unlabelled shapes of atoms of the clan, sorted."""
    return sorted({ush(w, c.p, c.q) for w in atoms(c)})


def clans_with_atom(w, p, q):
    """All (p, q)-clans having w as an atom, from the shape of w.

    The unmarked arcs of the shape fix the matching; each marked arc carries
    opposite signs at its endpoints in either order; unpaired positions take
    the sign of p - q.  Returns [] when w is not an atom of any such clan.
    """
    try:
        shape = ush(w, p, q)
    except ValueError:
        return []
    n = p + q
    marked = shape.marked_arcs
    base = [PLUS if p >= q else MINUS] * n
    for i, j in shape.unmarked_arcs:
        base[i - 1] = j - 1
        base[j - 1] = i - 1
    out = []
    for signs in itertools.product(((PLUS, MINUS), (MINUS, PLUS)), repeat=len(marked)):
        ent = list(base)
        for (i, j), (si, sj) in zip(marked, signs):
            ent[i - 1] = si
            ent[j - 1] = sj
        out.append(Clan(ent))
    return sorted(out)


def clans_with_word(word, p, q):
    """All (p, q)-clans whose reduced word set contains the given word."""
    from .weak_order import is_reduced_word_for

    return sorted(c for c in all_clans(p, q) if is_reduced_word_for(c, word))


def word_fibers(p, q):
    """Map each reduced word of a (p, q)-clan to the frozenset of its clans."""
    fibers = {}
    for c in all_clans(p, q):
        for a in clan_reduced_words(c):
            fibers.setdefault(a, set()).add(c)
    return {a: frozenset(s) for a, s in fibers.items()}


def word_neighbors(a, n, m):
    """Words one move away from a: commutations, braid moves, and the
    first-letter flip a_1 -> n - a_1, the flip being allowed only when
    min(a_1, n - a_1) < m."""
    out = []
    for k in range(len(a) - 1):
        x, y = a[k], a[k + 1]
        if abs(x - y) >= 2:
            out.append(a[:k] + (y, x) + a[k + 2 :])
    for k in range(len(a) - 2):
        x, y, z = a[k : k + 3]
        if x == z and abs(x - y) == 1:
            out.append(a[:k] + (y, x, y) + a[k + 3 :])
    if a:
        x = a[0]
        if min(x, n - x) < m:
            out.append((n - x,) + a[1:])
    return out


def equivalence_classes(p, q):
    """Partition of all reduced words of (p, q)-clans under the word moves.

    Raises RuntimeError if a move ever leaves the set of reduced words; that
    the classes agree with the fibers of clans_with_word is checked in the
    verification suite, not here.
    """
    n = p + q
    m = min(p, q)
    fibers = word_fibers(p, q)
    words = sorted(fibers)
    index = {a: i for i, a in enumerate(words)}
    parent = list(range(len(words)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in words:
        for b in word_neighbors(a, n, m):
            if b not in index:
                raise RuntimeError(f"word move left the reduced words: {a} -> {b}")
            ra, rb = find(index[a]), find(index[b])
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for a in words:
        groups.setdefault(find(index[a]), []).append(a)
    return sorted(tuple(sorted(g)) for g in groups.values())


def _gap_clear(shape, x, y):
    """No unpaired position strictly between x and y.

    Positions in the gap may be paired with positions outside it; only
    unpaired fixed points block a move.
    """
    endpoints = shape.endpoints()
    return all(t in endpoints for t in range(x + 1, y))


def shape_successors(shape, c):
    """Shapes reachable from this one by a single straightening move.

    Move 1 replaces nested marked arcs {a,d} and {b,c} (opposite clan signs
    at a and b, no unpaired point in any of the three gaps) by marked {a,b}
    and {c,d}.  Move 2 replaces an unpaired point a and a marked arc {b,c}
    to its right (opposite signs at a and b, no unpaired point in either
    gap) by the marked arc {a,b}, freeing c.  A move whose replacement arc
    would cross a surviving marked arc is skipped, since the result must
    stay a shape of the clan.  Returns the sorted distinct results.
    """
    if not is_valid_shape_for(shape, c):
        raise ValueError("shape does not belong to this clan")
    sign = {t: c.entries[t - 1] for t in range(1, c.n + 1) if isinstance(c.entries[t - 1], str)}
    marked = shape.marked_arcs
    rest = [(i, j, mk) for i, j, mk in shape.arcs]
    out = set()
    for (a, d), (b, cc) in itertools.permutations(marked, 2):
        if not (a < b < cc < d):
            continue
        if sign[a] == sign[b]:
            continue
        if not (
            _gap_clear(shape, a, b)
            and _gap_clear(shape, b, cc)
            and _gap_clear(shape, cc, d)
        ):
            continue
        arcs = [t for t in rest if t not in ((a, d, True), (b, cc, True))]
        arcs.extend([(a, b, True), (cc, d, True)])
        out.add(UnlabelledShape(n=shape.n, arcs=tuple(sorted(arcs))))
    endpoints = shape.endpoints()
    unpaired = [t for t in sign if t not in endpoints]
    for a in unpaired:
        for b, cc in marked:
            if not a < b:
                continue
            if sign[a] == sign[b]:
                continue
            if not (_gap_clear(shape, a, b) and _gap_clear(shape, b, cc)):
                continue
            arcs = [t for t in rest if t != (b, cc, True)]
            arcs.append((a, b, True))
            out.add(UnlabelledShape(n=shape.n, arcs=tuple(sorted(arcs))))
    return sorted(s2 for s2 in out if is_valid_shape_for(s2, c))


def shape_dag(c):
    """All shapes of the clan plus the straightening move edges.

    Returns (shapes, edges) with shapes sorted and edges as index pairs
    (source, target).  The order induced by the moves has Hasse diagram the
    transitive reduction of these edges.
    """
    shapes = shapes_of(c)
    index = {s: i for i, s in enumerate(shapes)}
    edges = []
    for s in shapes:
        for t in shape_successors(s, c):
            edges.append((index[s], index[t]))
    return shapes, sorted(edges)


def transitive_reduction(num_nodes, edges):
    """Minimal edge set of an acyclic relation with the same reachability."""
    adj = {u: set() for u in range(num_nodes)}
    for u, v in edges:
        adj[u].add(v)

    def reachable(u):
        seen = set()
        stack = [u]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    reach = {u: reachable(u) for u in range(num_nodes)}
    keep = []
    for u, v in edges:
        if not any(v in reach[w] for w in adj[u] if w != v):
            keep.append((u, v))
    return sorted(keep)


def sigma_max(c):
    """The greatest shape of the clan.

    Matched pairs give the unmarked arcs.  Marked arcs are drawn greedily:
    repeatedly take the smallest unused fixed point whose successor among the
    unused fixed points carries the opposite sign, join them, and start over;
    stop when the unused fixed points all agree in sign.
    """
    arcs = [(i, j, False) for i, j in c.arcs()]
    remaining = [(t, s) for t, s in c.fixed_points()]
    while True:
        hit = None
        for (t1, s1), (t2, s2) in zip(remaining, remaining[1:]):
            if s1 != s2:
                hit = (t1, t2)
                break
        if hit is None:
            break
        arcs.append((hit[0], hit[1], True))
        remaining = [(t, s) for t, s in remaining if t not in hit]
    shape = UnlabelledShape(n=c.n, arcs=tuple(sorted(arcs)))
    if not is_valid_shape_for(shape, c):
        raise RuntimeError("greedy construction produced an invalid shape")
    return shape


def render_shape(shape, c=None):
    """Plain-text picture of a shape: position row on top, one row per arc.

    Position k sits at column 2(k-1).  Arc rows use '-' for unmarked arcs and
    '=' for marked ones, with '*' endpoints, widest arcs last.
    """
    n = shape.n
    width = 2 * n - 1
    if c is not None:
        tokens = [e if isinstance(e, str) else str(e + 1) for e in c.entries]
    else:
        tokens = ["."] * n
    top = [" "] * width
    for k, tok in enumerate(tokens):
        top[2 * k] = tok
    lines = ["".join(top)]
    for i, j, marked in sorted(shape.arcs, key=lambda a: (a[1] - a[0], a[0])):
        row = [" "] * width
        ci, cj = 2 * (i - 1), 2 * (j - 1)
        for t in range(ci + 1, cj):
            row[t] = "=" if marked else "-"
        row[ci] = "*"
        row[cj] = "*"
        lines.append("".join(row).rstrip())
    return "\n".join(lines)
