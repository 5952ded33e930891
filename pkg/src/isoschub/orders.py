"""The 0-Bruhat and Lagrangian orders on B_n and their labeled intervals.

Covers in the 0-Bruhat order multiply on the left by t_b = (-b, b) or
t_ab = (a,b)(-a,-b) with 0 < a < b and raise the length by one.  A t_b cover
carries the single label b; a t_ab cover carries the label pair (-a, b), of
which the order keeps only b and the reseau keeps both.  The Lagrangian
order compares eta <= zeta iff u <=0 eta.u <=0 zeta.u for some u; its covers
are the same left multiplications filtered by the rank L.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .perm import (
    Window,
    act,
    compose,
    embed,
    identity,
    inverse,
    length,
    shape_canonical,
    support,
    t_pair,
    trim,
)

__all__ = [
    "Interval",
    "build_interval",
    "covers0_up",
    "covers_k_up",
    "grassmann_rank",
    "greedy_chain",
    "greedy_generator_word",
    "intervals_isomorphic",
    "k_bruhat_interval",
    "lagrangian_covers_up",
    "lagrangian_leq",
    "lagrangian_rank",
    "leq0",
    "max_interval_nodes",
    "transport_check",
    "witness_u",
]

Cover = tuple[Window, tuple[int, int], tuple[int, ...]]


def _left_mult(a: int, b: int, u: Sequence[int]) -> Window:
    """Multiply u on the left by the reflection exchanging a <-> b (mirrored)."""
    out = []
    for x in u:
        if x == a:
            out.append(b)
        elif x == b:
            out.append(a)
        elif x == -a:
            out.append(-b)
        elif x == -b:
            out.append(-a)
        else:
            out.append(x)
    return tuple(out)


@lru_cache(maxsize=2**20)
def covers0_up(u: Window) -> tuple[Cover, ...]:
    """All 0-Bruhat covers above u in B_n, n = len(u).

    Each entry is (w, (a, b), labels) where w = t.u for the left reflection
    exchanging a <-> b: (-b, b) labeled (b,), or (a, b) with 0 < a < b
    labeled (-a, b).
    """
    n = len(u)
    lu = length(u)
    posvals = set(u)
    out = []
    for b in range(1, n + 1):
        w = _left_mult(-b, b, u)
        if length(w) == lu + 1:
            out.append((w, (-b, b), (b,)))
        for a in range(1, b):
            # the pair swap is a cover only when a, b occupy opposite signs
            if (a in posvals) == (b in posvals):
                continue
            w = _left_mult(a, b, u)
            if length(w) == lu + 1:
                out.append((w, (a, b), (-a, b)))
    return tuple(sorted(out))


def covers0_up_right_form(u: Window) -> tuple[Window, ...]:
    """The same covers generated from the right form u^{-1}w.

    Candidates are w = u.t for t = (-i, i) or (-i, j)(i, -j); kept when the
    length rises by one.  Exists to cross-check covers0_up.
    """
    n = len(u)
    lu = length(u)
    out = set()
    for j in range(1, n + 1):
        w = compose(u, t_pair(-j, j, n))
        if length(w) == lu + 1:
            out.add(w)
        for i in range(1, j):
            w = compose(u, t_pair(-i, j, n))
            if length(w) == lu + 1:
                out.add(w)
    return tuple(sorted(out))


def leq0(u: Sequence[int], w: Sequence[int]) -> bool:
    """The non-recursive 0-Bruhat comparison.

    u <=0 w iff u(i) >= w(i) for all i > 0 and positions that ascend in u
    still ascend in w.
    """
    n = max(len(u), len(w))
    u = embed(u, n)
    w = embed(w, n)
    for i in range(n):
        if u[i] < w[i]:
            return False
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] < u[j] and w[i] > w[j]:
                return False
    return True


def covers_k_up(u: Window, k: int) -> tuple[Window, ...]:
    """Covers above u in the k-Bruhat order on B_n (counterexample fixture).

    w = u.t with t one of (i,j)(-i,-j) for i <= k < j, (-j, j) for j > k, or
    (-i, j)(i, -j) for 0 < i < j, j > k; kept when length rises by one.
    """
    n = len(u)
    lu = length(u)
    out = set()
    for j in range(k + 1, n + 1):
        w = compose(u, t_pair(-j, j, n))
        if length(w) == lu + 1:
            out.add(w)
        for i in range(1, j):
            w = compose(u, t_pair(-i, j, n))
            if length(w) == lu + 1:
                out.add(w)
            if i <= k:
                w = compose(u, t_pair(i, j, n))
                if length(w) == lu + 1:
                    out.add(w)
    return tuple(sorted(out))


# --- Lagrangian order ------------------------------------------------------


@lru_cache(maxsize=2**20)
def lagrangian_rank(zeta: Window) -> int:
    """The rank L in the Lagrangian order.

    Computed over the action on +-[n]: the negative displacements of the
    descent side of each moved pair, minus corrections for inversions that
    the canonical start u already carries.
    """
    n = len(zeta)
    dom = list(range(-n, 0)) + list(range(1, n + 1))
    img = {a: act(zeta, a) for a in dom}
    total = sum(-img[a] for a in dom if a > img[a] and img[a] < 0)
    fixed_over = 0
    for a in range(1, n + 1):
        if img[a] == a:
            fixed_over += sum(1 for b in range(a + 1, n + 1) if img[b] < a)
    descents = [a for a in dom if a > img[a]]
    cross = sum(
        1
        for i in range(len(descents))
        for j in range(i + 1, len(descents))
        if img[descents[i]] > img[descents[j]]
    )
    neg_side = sum(-a for a in dom if 0 > a > img[a])
    return total - fixed_over - cross - neg_side


def lagrangian_leq(eta: Sequence[int], zeta: Sequence[int]) -> bool:
    """eta <= zeta in the Lagrangian order, by the direct two-condition test."""
    n = max(len(eta), len(zeta))
    dom = list(range(-n, 0)) + list(range(1, n + 1))
    ev = {a: act(eta, a) for a in dom}
    zv = {a: act(zeta, a) for a in dom}
    for a in dom:
        if a > ev[a] and ev[a] < zv[a]:
            return False
    zdesc = [a for a in dom if a > zv[a]]
    for i in range(len(zdesc)):
        for j in range(i + 1, len(zdesc)):
            a, b = zdesc[i], zdesc[j]
            if zv[a] < zv[b] and ev[a] >= ev[b]:
                return False
    return True


def witness_u(zeta: Sequence[int]) -> Window:
    """A permutation u with u <=0 zeta.u realizing the rank of zeta.

    Descent-side letters come first, sorted by their images; the unused
    positive letters follow in increasing order.  When the support of zeta
    is an initial segment, zeta.u is Grassmannian.
    """
    n = len(zeta)
    dom = list(range(-n, 0)) + list(range(1, n + 1))
    desc = [a for a in dom if a > act(zeta, a)]
    desc.sort(key=lambda a: act(zeta, a))
    rest = sorted(set(range(1, n + 1)) - {abs(a) for a in desc})
    return tuple(desc + rest)


def lagrangian_covers_up(eta: Sequence[int], n: int) -> tuple[Cover, ...]:
    """Covers above eta in the Lagrangian order on B_n, labeled as in covers0_up.

    A rank jump under a left generator is not enough (the pair may be
    incomparable), so candidates must also pass the order test.
    """
    eta = embed(eta, n)
    r = lagrangian_rank(eta)
    out = []
    for b in range(1, n + 1):
        z = _left_mult(-b, b, eta)
        if lagrangian_rank(z) == r + 1 and lagrangian_leq(eta, z):
            out.append((z, (-b, b), (b,)))
        for a in range(1, b):
            z = _left_mult(a, b, eta)
            if lagrangian_rank(z) == r + 1 and lagrangian_leq(eta, z):
                out.append((z, (a, b), (-a, b)))
    return tuple(sorted(out))


# --- greedy chain construction ---------------------------------------------


def greedy_chain(zeta: Sequence[int], group: str = "B") -> list[tuple[int, int]]:
    """Peel zeta down to the identity by the greedy descent rule.

    Each step picks b maximal with zeta(b) < b, then a minimal with
    a <= zeta(b) < zeta(a), and multiplies on the right by the exchange of
    positions a and b -- mirrored for group="B" (so the step count is the
    Lagrangian rank), plain for group="Spm" (so the step count is the
    Grassmann-Bruhat rank over the 2n letters).  Returns the (a, b) steps in
    peeling order; the reversed record walks a saturated chain up from the
    identity.
    """
    if group not in ("B", "Spm"):
        raise ValueError(f"group must be 'B' or 'Spm', not {group!r}")
    n = len(zeta)
    dom = list(range(-n, 0)) + list(range(1, n + 1))
    img = {a: act(zeta, a) for a in dom}
    steps = []
    while True:
        b = max((x for x in dom if img[x] < x), default=None)
        if b is None:
            break
        a = min(x for x in dom if x <= img[b] < img[x])
        img[a], img[b] = img[b], img[a]
        # a sign change (a = -b) is a single exchange, not a mirrored pair
        if group == "B" and a != -b:
            img[-a], img[-b] = img[-b], img[-a]
        steps.append((a, b))
    if any(img[a] != a for a in dom):
        raise AssertionError("greedy peeling did not reach the identity")
    return steps


def grassmann_rank(zeta: Sequence[int]) -> int:
    """Rank of zeta in the Grassmann-Bruhat order of the 2n-letter group."""
    return len(greedy_chain(zeta, "Spm"))


def decode_left_reflection(r: Window) -> tuple[int, int]:
    """Recognize r as t_b -> (b, b) or t_ab -> (a, b) with 0 < a < b."""
    moved = [j for j in range(1, len(r) + 1) if act(r, j) != j]
    if len(moved) == 1 and act(r, moved[0]) == -moved[0]:
        return (moved[0], moved[0])
    if len(moved) == 2 and act(r, moved[0]) == moved[1]:
        return (moved[0], moved[1])
    raise ValueError(f"not a cover reflection: {r!r}")


def greedy_generator_word(zeta: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """The generator word of the greedy chain, first-applied letter last.

    Applying the letters right-to-left to the identity rebuilds zeta; each
    prefix application is a saturated-chain prefix in the Lagrangian order.
    """
    n = len(zeta)
    steps = greedy_chain(zeta, "B")
    down = [tuple(zeta)]
    for a, b in steps:
        prev = down[-1]

        def pre(j: int, a: int = a, b: int = b) -> int:
            if j == a:
                return b
            if j == b:
                return a
            if j == -a:
                return -b
            if j == -b:
                return -a
            return j

        down.append(tuple(act(prev, pre(j)) for j in range(1, n + 1)))
    ups = down[::-1]
    letters = []
    for lo, hi in zip(ups, ups[1:]):
        letters.append(decode_left_reflection(compose(hi, inverse(lo))))
    return tuple(reversed(letters))


# --- intervals --------------------------------------------------------------


def max_interval_nodes() -> int:
    return int(os.environ.get("ISOSCHUB_MAX_NODES", 10**6))


@dataclass(frozen=True)
class Interval:
    """A ranked interval with labeled edges, in order or reseau mode."""

    kind: str  # "zero_bruhat" | "lagrangian" | "k_bruhat"
    mode: str  # "order" | "reseau"
    n: int
    bottom: Window
    top: Window
    rank_of: dict[Window, int] = field(compare=False)
    edges: dict[Window, tuple[tuple[Window, int], ...]] = field(compare=False)

    @property
    def span(self) -> int:
        return self.rank_of[self.top]

    def nodes_by_rank(self) -> list[list[Window]]:
        levels: list[list[Window]] = [[] for _ in range(self.span + 1)]
        for node, r in self.rank_of.items():
            levels[r].append(node)
        for level in levels:
            level.sort()
        return levels


def _grow(
    bottom: Window,
    covers: Callable[[Window], Iterable[Cover]],
    below_top: Callable[[Window], bool],
    mode: str,
) -> tuple[dict[Window, int], dict[Window, tuple[tuple[Window, int], ...]]]:
    cap = max_interval_nodes()
    rank_of = {bottom: 0}
    edges: dict[Window, list[tuple[Window, int]]] = {}
    frontier = [bottom]
    while frontier:
        nxt = []
        for node in frontier:
            outgoing = []
            for w, _refl, labels in covers(node):
                if not below_top(w):
                    continue
                if w not in rank_of:
                    rank_of[w] = rank_of[node] + 1
                    if len(rank_of) > cap:
                        raise RuntimeError(
                            f"interval exceeds the node cap {cap}; "
                            "raise ISOSCHUB_MAX_NODES to override"
                        )
                    nxt.append(w)
                kept = labels if mode == "reseau" else tuple(l for l in labels if l > 0)
                outgoing.extend((w, l) for l in kept)
            edges[node] = tuple(sorted(outgoing, key=lambda e: (e[1], e[0])))
        frontier = nxt
    return rank_of, {k: tuple(v) for k, v in edges.items()}


def build_interval(
    *,
    u: Sequence[int] | None = None,
    w: Sequence[int] | None = None,
    zeta: Sequence[int] | None = None,
    mode: str = "order",
) -> Interval:
    """Build [u, w] in the 0-Bruhat order, or [e, zeta] in the Lagrangian one.

    mode="order" keeps only positive labels (one edge per cover);
    mode="reseau" keeps every label, so double covers become parallel edges.
    """
    if mode not in ("order", "reseau"):
        raise ValueError(f"mode must be 'order' or 'reseau', not {mode!r}")
    if zeta is not None:
        if u is not None or w is not None:
            raise ValueError("give either (u, w) or zeta, not both")
        zeta = tuple(zeta)
        n = len(zeta)
        bottom, top = identity(n), zeta
        rank_of, edges = _grow(
            bottom,
            lambda v: lagrangian_covers_up(v, n),
            lambda v: lagrangian_leq(v, zeta),
            mode,
        )
        kind = "lagrangian"
    else:
        if u is None or w is None:
            raise ValueError("need both u and w for a 0-Bruhat interval")
        n = max(len(u), len(w))
        bottom, top = embed(u, n), embed(w, n)
        if not leq0(bottom, top):
            raise ValueError("u is not below w in the 0-Bruhat order")
        rank_of, edges = _grow(
            bottom, covers0_up, lambda v: leq0(v, top), mode
        )
        kind = "zero_bruhat"
    if top not in rank_of:
        raise AssertionError("top of the interval was not reached")
    return Interval(kind, mode, n, bottom, top, rank_of, edges)


def k_bruhat_interval(u: Sequence[int], w: Sequence[int], k: int) -> Interval:
    """[u, w] in the k-Bruhat order, edges unlabeled (label 0).

    Grown by forward reachability to length(w) and pruned backward from w.
    """
    n = max(len(u), len(w))
    u, w = embed(u, n), embed(w, n)
    lw = length(w)
    up: dict[Window, set[Window]] = {u: set()}
    frontier = [u]
    while frontier:
        nxt = []
        for node in frontier:
            if length(node) >= lw:
                continue
            for cov in covers_k_up(node, k):
                up.setdefault(node, set())
                if cov not in up:
                    up[cov] = set()
                    nxt.append(cov)
                up[node].add(cov)
        frontier = nxt
    if w not in up:
        raise ValueError("w is not reachable from u in the k-Bruhat order")
    keep = {w}
    order = sorted(up, key=length, reverse=True)
    for node in order:
        if any(t in keep for t in up[node]):
            keep.add(node)
    keep.add(u)
    lu = length(u)
    rank_of = {node: length(node) - lu for node in keep}
    edges = {
        node: tuple(sorted((t, 0) for t in up.get(node, ()) if t in keep))
        for node in keep
    }
    return Interval("k_bruhat", "order", n, u, w, rank_of, edges)


def intervals_isomorphic(A: Interval, B: Interval, labeled: bool = False) -> bool:
    """Decide rank-preserving (multi)graph isomorphism by level backtracking."""
    if A.span != B.span:
        return False
    la, lb = A.nodes_by_rank(), B.nodes_by_rank()
    if [len(x) for x in la] != [len(x) for x in lb]:
        return False

    def edge_multiset(iv: Interval, node: Window) -> dict:
        out: dict = {}
        for t, l in iv.edges.get(node, ()):
            key = (t, l) if labeled else t
            out[key] = out.get(key, 0) + 1
        return out

    def extend(level: int, mapping: dict[Window, Window]) -> bool:
        if level > A.span:
            return True
        for image in permutations(lb[level]):
            trial = dict(zip(la[level], image))
            ok = True
            for src in la[level - 1] if level > 0 else []:
                want: dict = {}
                for t, l in A.edges.get(src, ()):
                    key = (trial[t], l) if labeled else trial[t]
                    want[key] = want.get(key, 0) + 1
                if want != edge_multiset(B, mapping[src]):
                    ok = False
                    break
            if ok and extend(level + 1, {**mapping, **trial}):
                return True
        return False

    return extend(0, {})


def transport_check(
    u: Sequence[int], w: Sequence[int], x: Sequence[int], z: Sequence[int]
) -> bool:
    """Verify the interval transport [u,w] -> [x,z] when wu^-1 and zx^-1
    are shape-equivalent.

    The map v -> relabel(v.u^-1).x must carry nodes to nodes and each labeled
    reseau edge to the corresponding edge with its label pushed through the
    support relabeling.
    """
    zeta = compose(w, inverse(u))
    xi = compose(z, inverse(x))
    czeta, s_src = shape_canonical(zeta)
    cxi, s_dst = shape_canonical(xi)
    if czeta != cxi:
        raise ValueError("wu^-1 and zx^-1 are not shape-equivalent")
    relabel = dict(zip(s_src, s_dst))

    A = build_interval(u=u, w=w, mode="reseau")
    Bi = build_interval(u=x, w=z, mode="reseau")

    def transport(v: Window) -> Window:
        move = compose(v, inverse(embed(u, len(v))))
        out = list(range(1, Bi.n + 1))
        for a in support(move):
            img = act(move, a)
            out[relabel[a] - 1] = (
                relabel[abs(img)] if img > 0 else -relabel[abs(img)]
            )
        return compose(tuple(out), embed(x, Bi.n))

    def push(l: int) -> int:
        return relabel[l] if l > 0 else -relabel[-l]

    mapped = {}
    for v in A.rank_of:
        fv = transport(v)
        if fv not in Bi.rank_of or Bi.rank_of[fv] != A.rank_of[v]:
            return False
        mapped[v] = fv
    if len(set(mapped.values())) != len(Bi.rank_of):
        return False
    for v, outgoing in A.edges.items():
        want = sorted((mapped[t], push(l)) for t, l in outgoing)
        have = sorted(Bi.edges.get(mapped[v], ()))
        if want != have:
            return False
    return True
