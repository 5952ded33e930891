"""The monoid of cover operators acting on signed permutations.

A generator t(a,b) with 0 < a < b multiplies on the left by the paired
exchange (a,b)(-a,-b); t(b,b), written t(b), multiplies by the sign change
at b.  The action is partial: when the rank does not rise by exactly one
the result is the absorbing zero, represented as None.  Words act right to
left, so the serialized form "t(1).t(2,3)" applies t(2,3) first.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Sequence

from .orders import (
    _left_mult,
    lagrangian_covers_up,
    lagrangian_leq,
    lagrangian_rank,
)
from .perm import Window, embed, identity, iter_group, trim

__all__ = [
    "format_word",
    "op_apply",
    "parse_word",
    "reduced_decompositions",
    "relations_suite",
    "word_apply",
]

Gen = tuple[int, int]
Word = tuple[Gen, ...]


def _check_gen(gen: Gen) -> Gen:
    a, b = gen
    if not 0 < a <= b:
        raise ValueError(f"generator letters must satisfy 0 < a <= b: {gen!r}")
    return gen


def op_apply(gen: Gen, zeta: Sequence[int] | None) -> Window | None:
    """Act by one generator; None both absorbs and signals a blocked step.

    The step must be a cover: a bare rank jump is not enough, as the pair
    can be incomparable.
    """
    if zeta is None:
        return None
    a, b = _check_gen(gen)
    z = embed(zeta, max(b, len(zeta)))
    w = _left_mult(a, b, z) if a < b else _left_mult(-b, b, z)
    if lagrangian_rank(w) == lagrangian_rank(z) + 1 and lagrangian_leq(z, w):
        return w
    return None


def word_apply(word: Iterable[Gen], zeta: Sequence[int] | None) -> Window | None:
    out = tuple(zeta) if zeta is not None else None
    for gen in reversed(tuple(word)):
        out = op_apply(gen, out)
    return out


def format_word(word: Iterable[Gen]) -> str:
    parts = []
    for a, b in word:
        _check_gen((a, b))
        parts.append(f"t({a})" if a == b else f"t({a},{b})")
    return ".".join(parts)


_GEN_RE = re.compile(r"t\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)")


def parse_word(text: str) -> Word:
    """Parse "t(1).t(2,3)" style words; the leftmost letter acts last.

    >>> parse_word("t(1).t(2,3)")
    ((1, 1), (2, 3))
    """
    text = text.strip()
    if not text:
        return ()
    out = []
    for chunk in text.split("."):
        m = _GEN_RE.fullmatch(chunk.strip())
        if not m:
            raise ValueError(f"bad generator {chunk!r}")
        a = int(m.group(1))
        b = int(m.group(2)) if m.group(2) else a
        out.append(_check_gen((a, b)))
    return tuple(out)


# --- defining relations -------------------------------------------------------


def _relation_instances(n: int):
    """Yield (name, lhs, rhs) over letters bounded by n; rhs None means both
    sides of the zero relation are separate entries."""
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for c in range(b + 1, n + 1):
                yield (
                    "braid-sign",
                    ((a, c), (a, a), (a, b)),
                    ((a, b), (b, c), (b, b)),
                )
                yield (
                    "zero-triple",
                    ((b, c), (a, b), (b, c)),
                    None,
                )
                yield (
                    "zero-triple",
                    ((a, b), (b, c), (a, b)),
                    None,
                )
                for d in range(c + 1, n + 1):
                    yield (
                        "braid-pair",
                        ((b, c), (c, d), (a, c)),
                        ((b, d), (a, b), (b, c)),
                    )
    gens = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    for a, b in gens:
        for c, d in gens:
            disjoint = a <= b < c <= d
            nested = a < c <= d < b and c < d
            if disjoint or (nested and a < b):
                yield ("commute", ((a, b), (c, d)), ((c, d), (a, b)))
    # crossing pair generators annihilate in both orders
    for a in range(1, n + 1):
        for c in range(a + 1, n + 1):
            for b in range(a, c + 1):
                for d in range(max(b + 1, c), n + 1):
                    if a <= b < c <= d and a < c and b < d:
                        yield ("zero-crossing", ((a, c), (b, d)), None)
                        yield ("zero-crossing", ((b, d), (a, c)), None)
    # a sign change nested in or touching a pair annihilates
    for a in range(1, n + 1):
        for c in range(a + 1, n + 1):
            for b in range(a + 1, c + 1):
                yield ("zero-sign", ((a, c), (b, b)), None)
                yield ("zero-sign", ((b, b), (a, c)), None)
    for a in range(1, n + 1):
        yield ("zero-sign", ((a, a), (a, a)), None)


@lru_cache(maxsize=4)
def _action_tables(n: int) -> dict[Gen, dict[Window, Window | None]]:
    gens = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    group = list(iter_group(n))
    return {g: {z: op_apply(g, z) for z in group} for g in gens}


def _word_vector(
    word: Word,
    group: Sequence[Window],
    tables: dict[Gen, dict[Window, Window | None]],
) -> tuple:
    out = []
    for z in group:
        cur: Window | None = z
        for gen in reversed(word):
            if cur is None:
                break
            cur = tables[gen][cur]
        out.append(cur)
    return tuple(out)


def relations_suite(n: int) -> dict:
    """Check every defining relation with letters at most n, and the
    reversals of the two braid families, as operator identities on B_n."""
    if n > 5:
        raise ValueError("relation check capped at rank 5")
    tables = _action_tables(n)
    group = sorted(iter_group(n))
    zero = (None,) * len(group)
    checked = 0
    failures = []
    for name, lhs, rhs in _relation_instances(n):
        if rhs is None:
            pairs = [(lhs, None)]
        else:
            pairs = [(lhs, rhs), (tuple(reversed(lhs)), tuple(reversed(rhs)))]
        for left, right in pairs:
            lv = _word_vector(left, group, tables)
            rv = zero if right is None else _word_vector(right, group, tables)
            checked += 1
            if lv != rv:
                failures.append((name, left, right))
    return {"n": n, "checked": checked, "failures": failures}


# --- reduced words ------------------------------------------------------------


def _gen_of_reflection(refl: tuple[int, int]) -> Gen:
    a, b = refl
    return (b, b) if a < 0 else (a, b)


def reduced_decompositions(zeta: Sequence[int]) -> list[Word]:
    """All reduced words for zeta, one per maximal chain below it.

    Each word applied right to left rebuilds zeta from the identity; the
    list is sorted.
    """
    zeta = trim(tuple(zeta))
    n = len(zeta)
    out: list[Word] = []

    def walk(node: Window, acc: list[Gen]) -> None:
        if node == zeta:
            out.append(tuple(reversed(acc)))
            return
        for w, refl, _labels in lagrangian_covers_up(node, n):
            if lagrangian_leq(w, zeta):
                acc.append(_gen_of_reflection(refl))
                walk(w, acc)
                acc.pop()

    if not zeta:
        return [()]
    walk(identity(n), [])
    return sorted(out)
