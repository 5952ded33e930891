"""Signed permutations and their embeddings.

An element w of the group B_n permutes {-n, ..., -1, 1, ..., n} subject to
w(-a) = -w(a).  It is stored as its window: the tuple (w(1), ..., w(n)).
B_n sits inside B_{n+1} by fixing the new letters, so windows of different
lengths are comparable after embedding; `trim` gives the shortest window.

>>> parse("3,-1,2")
(3, -1, 2)
>>> format_one_line(inverse((3, -1, 2)))
'-2,3,1'
>>> length((2, 4, -3, -1))
8
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

__all__ = [
    "act",
    "all_left_reflections",
    "compose",
    "embed",
    "epsilon_P",
    "epsilon_k",
    "epsilon_pq",
    "format_one_line",
    "gamma",
    "identity",
    "inverse",
    "iota",
    "is_grassmannian",
    "iter_group",
    "length",
    "omega0",
    "parse",
    "parse_cycles",
    "parse_one_line",
    "partition_of",
    "rho",
    "shape_canonical",
    "sign_changes",
    "slash_p",
    "spm_inversions",
    "support",
    "t_pair",
    "trim",
    "v_m",
    "v_of",
    "validate",
]

Window = tuple[int, ...]


def validate(w: Sequence[int]) -> Window:
    """Check the window axioms and return the window as a tuple."""
    w = tuple(w)
    n = len(w)
    seen = set()
    for x in w:
        if not isinstance(x, int) or x == 0:
            raise ValueError(f"window entries must be nonzero integers: {w!r}")
        if not -n <= x <= n:
            raise ValueError(f"entry {x} out of range for rank {n}")
        if abs(x) in seen:
            raise ValueError(f"duplicate absolute value {abs(x)} in {w!r}")
        seen.add(abs(x))
    return w


def parse_one_line(text: str) -> Window:
    """Parse comma-separated window notation, e.g. "3,-1,2"."""
    parts = [p.strip() for p in text.strip().split(",")]
    if parts == [""]:
        return ()
    try:
        return validate(tuple(int(p) for p in parts))
    except ValueError:
        raise
    except Exception as exc:  # int() failure
        raise ValueError(f"bad one-line form {text!r}") from exc


def parse_cycles(text: str) -> Window:
    """Parse cycle notation.

    "<a,b,c>" is the product of the cycle (a,b,c) with its negated mirror;
    "<a,b,c]" is the single self-mirrored cycle (a,b,c,-a,-b,-c).  Fixed
    points are omitted.  An optional " n=<rank>" suffix pins the rank,
    otherwise the rank is the largest absolute entry.

    >>> parse_cycles("<2]")
    (1, -2)
    >>> parse_cycles("<1,3,4><2]")
    (3, -2, 4, 1)
    """
    text = text.strip()
    rank = None
    if "n=" in text:
        text, _, rank_part = text.partition("n=")
        rank = int(rank_part.strip())
        text = text.strip()
    mapping: dict[int, int] = {}

    def add_cycle(entries: list[int]) -> None:
        for src, dst in zip(entries, entries[1:] + entries[:1]):
            if src in mapping and mapping[src] != dst:
                raise ValueError(f"conflicting images for {src} in {text!r}")
            if src == 0 or dst == 0:
                raise ValueError("zero entry in cycle")
            mapping[src] = dst

    rest = text
    while rest:
        if not rest.startswith("<"):
            raise ValueError(f"malformed cycle syntax: {text!r}")
        for close in range(1, len(rest)):
            if rest[close] in ">]":
                break
        else:
            raise ValueError(f"unclosed cycle in {text!r}")
        body = [int(p.strip()) for p in rest[1:close].split(",")]
        if len(set(abs(x) for x in body)) != len(body):
            raise ValueError(f"repeated letter inside cycle: {rest[:close+1]}")
        if rest[close] == ">":
            if len(body) < 2:
                raise ValueError("paired cycle needs at least two entries")
            add_cycle(body)
            add_cycle([-x for x in body])
        else:
            add_cycle(body + [-x for x in body])
        rest = rest[close + 1 :].strip()

    n = rank if rank is not None else max((abs(a) for a in mapping), default=0)
    window = []
    for i in range(1, n + 1):
        img = mapping.get(i, i)
        if mapping.get(-i, -i) != -img:
            raise ValueError(f"cycles break the mirror rule at letter {i}")
        window.append(img)
    return validate(tuple(window))


def parse(text: str) -> Window:
    """Parse either notation; cycle form is detected by a leading '<'."""
    return parse_cycles(text) if text.lstrip().startswith("<") else parse_one_line(text)


def format_one_line(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


def act(w: Sequence[int], a: int) -> int:
    """The image w(a), treating letters beyond the window as fixed."""
    if a == 0:
        raise ValueError("letters are nonzero")
    if abs(a) > len(w):
        return a
    return w[a - 1] if a > 0 else -w[-a - 1]


def compose(u: Sequence[int], v: Sequence[int]) -> Window:
    """(u . v)(a) = u(v(a)), embedding to the larger rank."""
    n = max(len(u), len(v))
    return tuple(act(u, act(v, i)) for i in range(1, n + 1))


def inverse(w: Sequence[int]) -> Window:
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        if x > 0:
            out[x - 1] = i
        else:
            out[-x - 1] = -i
    return tuple(out)


def embed(w: Sequence[int], n: int) -> Window:
    if n < len(w):
        raise ValueError(f"cannot embed rank {len(w)} into rank {n}")
    return tuple(w) + tuple(range(len(w) + 1, n + 1))


def trim(w: Sequence[int]) -> Window:
    """Drop trailing fixed points: the shortest window for the same element."""
    n = len(w)
    while n > 0 and w[n - 1] == n:
        n -= 1
    return tuple(w[:n])


def identity(n: int) -> Window:
    return tuple(range(1, n + 1))


def omega0(n: int) -> Window:
    """The longest element, a -> -a."""
    return tuple(-i for i in range(1, n + 1))


def rho(n: int) -> Window:
    """i -> i - 1 - n; the top of the Lagrangian order."""
    return tuple(i - 1 - n for i in range(1, n + 1))


def gamma(n: int) -> Window:
    """The unsigned n-cycle 1 -> 2 -> ... -> n -> 1."""
    return tuple(range(2, n + 1)) + (1,)


def v_of(lam: Sequence[int], n: int) -> Window:
    """The Grassmannian permutation of the strict partition lam in B_n.

    >>> v_of((3, 1), 3)
    (-3, -1, 2)
    """
    lam = tuple(lam)
    if any(a <= b for a, b in zip(lam, lam[1:])) or any(p <= 0 for p in lam):
        raise ValueError(f"not a strict partition: {lam!r}")
    if lam and lam[0] > n:
        raise ValueError(f"part {lam[0]} exceeds rank {n}")
    rest = sorted(set(range(1, n + 1)) - set(lam))
    return tuple(-p for p in lam) + tuple(rest)


def v_m(m: int, n: int) -> Window:
    if not 1 <= m <= n:
        raise ValueError(f"m={m} out of range for rank {n}")
    return v_of((m,), n)


def is_grassmannian(w: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(w, w[1:]))


def partition_of(v: Sequence[int]) -> tuple[int, ...]:
    """Recover the strict partition indexing a Grassmannian permutation."""
    if not is_grassmannian(v):
        raise ValueError(f"window not increasing: {v!r}")
    return tuple(-x for x in v if x < 0)


def length(w: Sequence[int]) -> int:
    """Coxeter length: positive-window inversions plus sum of |w(i)| over
    sign changes.

    >>> length((2, 4, -3, -1))
    8
    """
    n = len(w)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    return inv + sum(-x for x in w if x < 0)


def spm_inversions(w: Sequence[int]) -> int:
    """Inversions of w as a permutation of the 2n letters -n < ... < n."""
    dom = list(range(-len(w), 0)) + list(range(1, len(w) + 1))
    vals = [act(w, a) for a in dom]
    return sum(
        1 for i in range(len(vals)) for j in range(i + 1, len(vals)) if vals[i] > vals[j]
    )


def sign_changes(w: Sequence[int]) -> int:
    return sum(1 for x in w if x < 0)


def support(w: Sequence[int]) -> tuple[int, ...]:
    """Positive letters moved by w."""
    return tuple(i for i, x in enumerate(w, start=1) if x != i)


def t_pair(a: int, b: int, n: int) -> Window:
    """The reflection exchanging a <-> b and -a <-> -b, as an element of B_n.

    t_pair(-b, b, n) is the sign change t_b; t_pair(a, b, n) with 0 < a < b
    is (a,b)(-a,-b); t_pair(-a, b, n) with 0 < a < b is (-a,b)(a,-b).
    """
    if a == b or a == -b and a > 0:
        raise ValueError(f"need a < b with distinct letters, got ({a}, {b})")
    out = list(range(1, n + 1))
    for src, dst in ((a, b), (b, a), (-a, -b), (-b, -a)):
        if abs(src) > n or abs(dst) > n:
            raise ValueError(f"reflection ({a},{b}) out of range for rank {n}")
        if src > 0:
            out[src - 1] = dst
    return tuple(out)


def all_left_reflections(n: int) -> list[tuple[int, int]]:
    """All n^2 reflections as (a, b) pairs with a < b, b > 0."""
    pairs = []
    for b in range(1, n + 1):
        pairs.append((-b, b))
        for a in range(1, b):
            pairs.append((a, b))
            pairs.append((-a, b))
    return pairs


# --- embeddings -----------------------------------------------------------


def epsilon_pq(w: Sequence[int], p: int, q: int) -> Window:
    """Insert the value q at position p, shifting the rest into B_{n+1}.

    >>> epsilon_pq((-2, 3, 4, 1), 3, -2)
    (-3, 4, -2, 5, 1)
    """
    n = len(w)
    if not 1 <= p <= n + 1 or q == 0 or abs(q) > n + 1:
        raise ValueError(f"bad insertion ({p}, {q}) for rank {n}")

    def shift(x: int) -> int:
        if abs(x) < abs(q):
            return x
        return x - 1 if x < 0 else x + 1

    out = [shift(w[j - 1]) for j in range(1, p)]
    out.append(q)
    out.extend(shift(w[j - 2]) for j in range(p + 1, n + 2))
    return validate(tuple(out))


def slash_p(w: Sequence[int], p: int) -> Window:
    """Delete position p and value w(p), the left inverse of epsilon_pq.

    >>> slash_p((4, -1, 5, -2, 3), 4)
    (3, -1, 4, 2)
    """
    n = len(w)
    if not 1 <= p <= n:
        raise ValueError(f"position {p} out of range for rank {n}")
    q = w[p - 1]

    def unshift(x: int) -> int:
        if abs(x) < abs(q):
            return x
        return x + 1 if x < 0 else x - 1

    return tuple(unshift(x) for i, x in enumerate(w, start=1) if i != p)


def iota(eta: Sequence[int]) -> Window:
    """Extend a plain permutation of [n] to B_n by w(-a) = -w(a)."""
    eta = tuple(eta)
    if sorted(eta) != list(range(1, len(eta) + 1)):
        raise ValueError(f"not a permutation of [n]: {eta!r}")
    return eta


def epsilon_k(eta: Sequence[int], k: int) -> Window:
    """The k-shifted embedding of a plain permutation into B_n.

    Positions 1..n-k read eta(j+k); the rest read the negated reversal.
    epsilon_k(eta, 0) == iota(eta).
    """
    eta = iota(eta)
    n = len(eta)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for rank {n}")
    window = [eta[j + k - 1] for j in range(1, n - k + 1)]
    window += [-eta[n - j] for j in range(n - k + 1, n + 1)]
    return validate(tuple(window))


def epsilon_P(w: Sequence[int], P: Sequence[int]) -> Window:
    """Relabel the letters of w along the increasing positive sequence P.

    Letter i becomes P[i-1] (signs carried along); the result lives in
    B_{max(P)} and acts as the identity off the image of P.
    """
    P = tuple(P)
    if any(p <= 0 for p in P) or any(a >= b for a, b in zip(P, P[1:])):
        raise ValueError(f"P must be strictly increasing positive: {P!r}")
    if len(P) < len(w):
        raise ValueError(f"P has {len(P)} entries, need at least {len(w)}")
    n = P[-1] if P else 0
    out = list(range(1, n + 1))
    for i, x in enumerate(w, start=1):
        img = P[abs(x) - 1]
        out[P[i - 1] - 1] = img if x > 0 else -img
    return validate(tuple(out))


def shape_canonical(w: Sequence[int]) -> tuple[Window, tuple[int, ...]]:
    """Compress the support to an initial segment.

    Returns (canonical form, original support); two elements are
    shape-equivalent exactly when their canonical forms agree.

    >>> shape_canonical(parse_cycles("<1,3] n=3"))
    ((2, -1), (1, 3))
    """
    supp = support(w)
    index = {s: i for i, s in enumerate(supp, start=1)}
    window = []
    for s in supp:
        x = act(w, s)
        window.append(index[abs(x)] if x > 0 else -index[abs(x)])
    return tuple(window), supp


def iter_group(n: int) -> Iterator[Window]:
    """All 2^n n! elements of B_n."""
    for absvals in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(s * a for s, a in zip(signs, absvals))


def iter_plain(n: int) -> Iterator[Window]:
    """All elements of the plain symmetric group on [n]."""
    return permutations(range(1, n + 1))
