"""Saturated-chain enumeration on labeled intervals, with peak and descent
statistics.

A chain is read off as its label word a_1, ..., a_m.  Position i < m is a
descent when a_i > a_{i+1} and an ascent when a_i < a_{i+1}; an interior
position 1 < i < m is a peak when a_{i-1} < a_i > a_{i+1}.  All three are
strict, so equal adjacent labels count as neither.  Composition filters
use the set I(alpha) of partial sums of alpha with the last part dropped.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .orders import Interval
from .perm import Window

__all__ = [
    "chain_count",
    "composition_positions",
    "count_chains",
    "count_f_g",
    "descent_set",
    "enumerate_chains",
    "peak_set",
    "shuffles",
    "stat_counts",
]


def descent_set(labels: Sequence[int]) -> frozenset[int]:
    return frozenset(
        i + 1 for i in range(len(labels) - 1) if labels[i] > labels[i + 1]
    )


def ascent_set(labels: Sequence[int]) -> frozenset[int]:
    return frozenset(
        i + 1 for i in range(len(labels) - 1) if labels[i] < labels[i + 1]
    )


def peak_set(labels: Sequence[int]) -> frozenset[int]:
    out = set()
    for i in range(1, len(labels) - 1):
        if labels[i - 1] < labels[i] > labels[i + 1]:
            out.add(i + 1)
    return frozenset(out)


def composition_positions(alpha: Sequence[int]) -> frozenset[int]:
    """I(alpha): the proper partial sums of a composition."""
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha!r}")
    out = []
    acc = 0
    for a in alpha[:-1]:
        acc += a
        out.append(acc)
    return frozenset(out)


def shuffles(u: Sequence[int], v: Sequence[int]) -> list[tuple[int, ...]]:
    """All interleavings of two label words.

    With disjoint alphabets, two nonempty peakless words whose letters are
    distinct within each word have exactly two peakless interleavings, and
    a weakly increasing pair has exactly one weakly increasing
    interleaving; these facts drive the product rules for the peakless and
    increasing chain counts.
    """
    u, v = tuple(u), tuple(v)
    out: list[tuple[int, ...]] = []

    def rec(i: int, j: int, acc: list[int]) -> None:
        if i == len(u) and j == len(v):
            out.append(tuple(acc))
            return
        if i < len(u):
            acc.append(u[i])
            rec(i + 1, j, acc)
            acc.pop()
        if j < len(v):
            acc.append(v[j])
            rec(i, j + 1, acc)
            acc.pop()

    rec(0, 0, [])
    return out


class _Filter:
    """Incremental admissibility of a growing label word.

    ok(labels, final) is checked after each append; positions whose status
    is already determined must pass, so failing prefixes prune the search.
    """

    def __init__(self, name: str, positions: frozenset[int] | None = None):
        self.name = name
        self.positions = positions
        if name not in (
            "all",
            "peakless",
            "no_descent",
            "no_ascent",
            "peakset_subset",
            "peakset_equal",
            "descentset_subset",
            "descentset_equal",
            "ascentset_subset",
            "ascentset_equal",
        ):
            raise ValueError(f"unknown chain filter {name!r}")
        if name.endswith(("subset", "equal")) and positions is None:
            raise ValueError(f"filter {name!r} needs a position set")

    def ok(self, labels: Sequence[int], final: bool) -> bool:
        m = len(labels)
        name, S = self.name, self.positions
        if name == "all":
            return True
        if name in ("peakless", "peakset_subset", "peakset_equal"):
            # appending label m settles the peak status of position m-1
            if m >= 3 and labels[-3] < labels[-2] > labels[-1]:
                if name == "peakless" or (m - 1) not in S:
                    return False
            if name == "peakset_equal":
                if final:
                    return peak_set(labels) == S
                for i in S:
                    settled = 2 <= i <= m - 1
                    if settled and not labels[i - 2] < labels[i - 1] > labels[i]:
                        return False
            return True
        # descent/ascent filters: the status of position m-1 settles now
        if m >= 2:
            i = m - 1
            desc = labels[-2] > labels[-1]
            asc = labels[-2] < labels[-1]
            if name == "no_descent" and desc:
                return False
            if name == "no_ascent" and asc:
                return False
            if name in ("descentset_subset", "descentset_equal"):
                if desc and i not in S:
                    return False
                if name == "descentset_equal" and not desc and i in S:
                    return False
            if name in ("ascentset_subset", "ascentset_equal"):
                if asc and i not in S:
                    return False
                if name == "ascentset_equal" and not asc and i in S:
                    return False
        return True


def _parse_filter(spec: str | tuple[str, Iterable[int]]) -> _Filter:
    if isinstance(spec, str):
        return _Filter(spec)
    name, positions = spec
    return _Filter(name, frozenset(positions))


def enumerate_chains(
    interval: Interval,
    filter: str | tuple[str, Iterable[int]] = "all",
) -> Iterator[tuple[tuple[Window, ...], tuple[int, ...]]]:
    """Yield the saturated bottom-to-top chains passing the filter.

    Chains come out in lexicographic order of their label words.  Each item
    is (nodes, labels) with len(nodes) = len(labels) + 1.
    """
    f = _parse_filter(filter)
    span = interval.span
    top = interval.top
    nodes = [interval.bottom]
    labels: list[int] = []

    def walk() -> Iterator[tuple[tuple[Window, ...], tuple[int, ...]]]:
        if len(labels) == span:
            if nodes[-1] == top:
                yield tuple(nodes), tuple(labels)
            return
        for target, lab in interval.edges.get(nodes[-1], ()):
            labels.append(lab)
            if f.ok(labels, final=len(labels) == span):
                nodes.append(target)
                yield from walk()
                nodes.pop()
            labels.pop()

    return walk()


def count_chains(
    interval: Interval, filter: str | tuple[str, Iterable[int]] = "all"
) -> int:
    return sum(1 for _ in enumerate_chains(interval, filter))


def chain_count(interval: Interval) -> int:
    """Number of saturated chains, by dynamic programming over ranks."""
    ways = {interval.bottom: 1}
    for level in interval.nodes_by_rank()[:-1]:
        for node in level:
            w = ways.get(node, 0)
            if w == 0:
                continue
            for target, _lab in interval.edges.get(node, ()):
                ways[target] = ways.get(target, 0) + w
    return ways.get(interval.top, 0)


def count_f_g(order_iv: Interval, reseau_iv: Interval) -> dict[str, int]:
    """The two saturated-chain totals: f over the order, g over the reseau."""
    return {"f": chain_count(order_iv), "g": chain_count(reseau_iv)}


def stat_counts(interval: Interval) -> dict:
    """Full chain statistics for an interval.

    Pi counts peakless chains, I counts no-descent chains, D no-ascent
    chains; the by_* maps give the histogram of chains per exact peak,
    descent, or ascent set (keys are sorted position tuples).
    """
    by_peak: dict[tuple[int, ...], int] = {}
    by_desc: dict[tuple[int, ...], int] = {}
    by_asc: dict[tuple[int, ...], int] = {}
    total = 0
    for _nodes, labels in enumerate_chains(interval):
        total += 1
        p = tuple(sorted(peak_set(labels)))
        d = tuple(sorted(descent_set(labels)))
        a = tuple(sorted(ascent_set(labels)))
        by_peak[p] = by_peak.get(p, 0) + 1
        by_desc[d] = by_desc.get(d, 0) + 1
        by_asc[a] = by_asc.get(a, 0) + 1
    return {
        "chains": total,
        "Pi": by_peak.get((), 0),
        "I": by_desc.get((), 0),
        "D": by_asc.get((), 0),
        "by_peakset": dict(sorted(by_peak.items())),
        "by_descentset": dict(sorted(by_desc.items())),
        "by_ascentset": dict(sorted(by_asc.items())),
    }
