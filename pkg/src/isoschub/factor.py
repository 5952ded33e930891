"""Cycle structure and irreducible factorization of signed permutations.

A cycle of the action on the 2n letters -n, ..., -1, 1, ..., n either
coincides with its own negation (self-mirrored) or pairs off with it; the
pair counts as one geometric piece.  Grouping cycles by the finest
non-crossing closure of their supports, in the order -n < ... < -1 < 1 <
... < n, cuts the permutation into irreducible factors.  The multiplicities
attached to a minimal permutation are powers of two read off from that
factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .orders import lagrangian_rank
from .perm import (
    Window,
    act,
    compose,
    embed,
    gamma,
    identity,
    inverse,
    rho,
    shape_canonical,
    support,
    trim,
    v_of,
)

__all__ = [
    "Factor",
    "Factorization",
    "classify",
    "delta",
    "format_cycles",
    "irreducible_factors",
    "skew_shape",
    "spm_cycles",
]


def delta(w: Window) -> int:
    """1 when w never changes sign, else 0."""
    return 1 if all(x > 0 for x in w) else 0


def spm_cycles(w: Window) -> list[tuple[tuple[int, ...], str]]:
    """Cycles of w on the 2n letters, fixed points omitted.

    Paired cycles are reported once, by the representative through the
    positive letter of smallest absolute value, and tagged "paired";
    a cycle equal to its own negation is tagged "self_mirrored" and
    reported in full, starting from that same letter.  Cycles are sorted
    by their smallest absolute letter.

    >>> spm_cycles((3, -2, 4, 1))
    [((1, 3, 4), 'paired'), ((2, -2), 'self_mirrored')]
    """
    n = len(w)
    seen: set[int] = set()
    out = []
    for start in range(1, n + 1):
        if start in seen or act(w, start) == start:
            continue
        orbit = [start]
        x = act(w, start)
        while x != start:
            orbit.append(x)
            x = act(w, x)
        seen.update(orbit)
        mirror = {-y for y in orbit}
        if mirror == set(orbit):
            # rotate to the smallest absolute letter, positive side
            m = min(abs(y) for y in orbit)
            i = orbit.index(m)
            out.append((tuple(orbit[i:] + orbit[:i]), "self_mirrored"))
        else:
            seen.update(mirror)
            m = min(abs(y) for y in orbit)
            if m not in orbit:
                orbit = [-y for y in orbit]
            i = orbit.index(m)
            out.append((tuple(orbit[i:] + orbit[:i]), "paired"))
    out.sort(key=lambda c: abs(c[0][0]))
    return out


def format_cycles(w: Window) -> str:
    """Cycle notation: <a,b,c> for a paired cycle, <a,b,c] self-mirrored.

    >>> format_cycles((3, -2, 4, 1))
    '<1,3,4><2]'
    """
    parts = []
    for orbit, kind in spm_cycles(w):
        if kind == "paired":
            parts.append("<" + ",".join(str(x) for x in orbit) + ">")
        else:
            half = orbit[: len(orbit) // 2]
            parts.append("<" + ",".join(str(x) for x in half) + "]")
    return "".join(parts)


def _blocks_cross(P: frozenset[int], Q: frozenset[int]) -> bool:
    """Crossing test in the order -n < ... < -1 < 1 < ... < n.

    Blocks cross when their merged sequence alternates P, Q, P, Q (or the
    reverse) somewhere, i.e. collapses to four or more runs.
    """
    merged = sorted(P | Q)
    runs = 0
    last = None
    for x in merged:
        tag = "P" if x in P else "Q"
        if tag != last:
            runs += 1
            last = tag
    return runs >= 4


def _non_crossing_closure(blocks: list[frozenset[int]]) -> list[frozenset[int]]:
    blocks = list(blocks)
    changed = True
    while changed:
        changed = False
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                if _blocks_cross(blocks[i], blocks[j]):
                    blocks[i] = blocks[i] | blocks[j]
                    del blocks[j]
                    changed = True
                    break
            if changed:
                break
    return blocks


@dataclass(frozen=True)
class Factor:
    window: Window
    cycles: str
    delta: int
    minimal: bool


@dataclass(frozen=True)
class Factorization:
    factors: tuple[Factor, ...]
    theta: int
    chi: int

    def to_json(self) -> dict:
        return {
            "factors": [
                {"cycles": f.cycles, "delta": f.delta, "minimal": f.minimal}
                for f in self.factors
            ],
            "theta": self.theta,
            "chi": self.chi,
        }


def _restrict(w: Window, letters: frozenset[int]) -> Window:
    n = len(w)
    return tuple(
        act(w, i) if i in letters or -i in letters else i for i in range(1, n + 1)
    )


def _factor_supports(w: Window) -> list[frozenset[int]]:
    """Support sets of the irreducible factors, each closed under negation."""
    orbits = []
    for orbit, kind in spm_cycles(w):
        orbits.append(frozenset(orbit))
        if kind == "paired":
            orbits.append(frozenset(-x for x in orbit))
    blocks = _non_crossing_closure(orbits)
    merged: dict[frozenset[int], frozenset[int]] = {}
    for b in blocks:
        key = frozenset(abs(x) for x in b)
        merged[key] = merged.get(key, frozenset()) | b
    return [merged[k] for k in sorted(merged, key=min)]


def irreducible_factors(w: Window) -> Factorization:
    """Split w into irreducible factors and attach the two multiplicities.

    theta is 2^(#factors - 1) and chi is 2^(#sign-preserving factors), both
    zero unless every factor is minimal, meaning its rank equals its support
    size minus its delta.  The identity has no factors and gets 1 for both.
    """
    w = trim(w)
    factors = []
    minimal = True
    for letters in _factor_supports(w):
        piece = _restrict(w, letters)
        d = delta(piece)
        supp = len(support(piece))
        is_min = lagrangian_rank(piece) == supp - d
        minimal = minimal and is_min
        factors.append(Factor(piece, format_cycles(piece), d, is_min))
    if not factors:
        return Factorization((), 1, 1)
    if not minimal:
        return Factorization(tuple(factors), 0, 0)
    theta = 2 ** (len(factors) - 1)
    chi = 2 ** sum(1 for f in factors if f.delta == 1)
    return Factorization(tuple(factors), theta, chi)


@lru_cache(maxsize=2**18)
def _classify_canonical(c: Window) -> tuple[int, bool, int, int]:
    fac = irreducible_factors(c)
    return (
        delta(c) if c else 1,
        all(f.minimal for f in fac.factors),
        fac.theta,
        fac.chi,
    )


def classify(zeta: Window) -> dict:
    """delta, minimality, and the two multiplicities of zeta.

    Cached on the shape-canonical form, since all four outputs only depend
    on it.
    """
    c, _supp = shape_canonical(trim(zeta))
    d, is_min, theta, chi = _classify_canonical(c)
    return {"delta": d, "is_minimal": is_min, "theta": theta, "chi": chi}


# --- skew shapes -------------------------------------------------------------


def _skew_candidates(zeta: Window) -> set[Window]:
    """zeta, its conjugate by the top element, and, when zeta never changes
    sign, its conjugates by all powers of the plain n-cycle."""
    n = len(zeta)
    r = rho(n)
    out = {zeta, compose(r, compose(zeta, r))}
    if delta(zeta) == 1:
        g = gamma(n)
        g_inv = inverse(g)
        x = zeta
        for _ in range(n - 1):
            x = compose(g, compose(x, g_inv))
            out.add(x)
    return out


def _strict_partitions_capped(cap: int) -> list[tuple[int, ...]]:
    """All strict partitions with parts in [1, cap], ordered by (sum, parts)."""
    out = []
    for mask in range(1, 2**cap):
        parts = tuple(p for p in range(cap, 0, -1) if mask >> (p - 1) & 1)
        out.append(parts)
    out.sort(key=lambda p: (sum(p), p))
    return out


def _subpartitions(kappa: tuple[int, ...], weight: int) -> list[tuple[int, ...]]:
    """Strict partitions mu with mu_i <= kappa_i and |mu| = weight."""
    results: list[tuple[int, ...]] = []

    def rec(i: int, prev: int, acc: list[int], left: int) -> None:
        if left == 0:
            results.append(tuple(acc))
            return
        if i >= len(kappa):
            return
        hi = min(kappa[i], prev - 1, left)
        for p in range(hi, 0, -1):
            acc.append(p)
            rec(i + 1, p, acc, left - p)
            acc.pop()

    rec(0, 10**9, [], weight)
    results.sort()
    return results


def skew_shape(zeta: Window) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A pair of strict partitions kappa over mu matching zeta, if any.

    Searches kappa with parts at most n + rank(zeta) in a fixed order
    (weight, then parts, then mu) and compares v(kappa).v(mu)^-1 against
    zeta up to shape equivalence and the symmetry closure.  Returns None
    when no pair in that range matches.
    """
    zeta = trim(zeta)
    if not zeta:
        return ((), ())
    L = lagrangian_rank(zeta)
    cap = len(zeta) + L
    targets = {shape_canonical(x)[0] for x in _skew_candidates(zeta)}
    for kappa in _strict_partitions_capped(cap):
        if sum(kappa) < L:
            continue
        vk = v_of(kappa, cap)
        for mu in _subpartitions(kappa, sum(kappa) - L):
            cand = compose(vk, inverse(v_of(mu, cap)))
            if shape_canonical(cand)[0] in targets:
                return (kappa, mu)
    return None
