"""An independent model for the Q-function expansions.

Q_lambda is computed directly as the weight generating function of marked
shifted tableaux in six variables, and the one-row polynomials are recomputed
a second way from the series product_i (1 + x_i t)/(1 - x_i t).  The package's
straightened expansions must evaluate to the tableau polynomials exactly.
"""

from functools import lru_cache

from isoschub.schur_pq import q_expansion

NVARS = 6
ZERO = (0,) * NVARS

# polynomials are dicts: exponent tuple of length NVARS -> integer coefficient


def _poly_mul(f, g, cap=NVARS):
    out = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            e = tuple(a + b for a, b in zip(ea, eb))
            if sum(e) > cap:
                continue
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _poly_add(f, g, scale=1):
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) + scale * c
        if not out[e]:
            del out[e]
    return out


def _cells(lam):
    return [(r, c) for r, part in enumerate(lam) for c in range(r, r + part)]


# letters 1' < 1 < 2' < 2 < ... encoded as 1, 2, 3, 4, ...; odd codes are marked


@lru_cache(maxsize=None)
def _tableau_poly(lam):
    cells = _cells(lam)
    index = {cell: i for i, cell in enumerate(cells)}
    out = {}

    def fill(i, letters):
        if i == len(cells):
            expo = [0] * NVARS
            for code in letters:
                expo[(code + 1) // 2 - 1] += 1
            e = tuple(expo)
            out[e] = out.get(e, 0) + 1
            return
        r, c = cells[i]
        lo = 1
        left = letters[index[(r, c - 1)]] if c - 1 >= r else None
        up = letters[index[(r - 1, c)]] if r >= 1 and c <= r - 1 + lam[r - 1] - 1 else None
        if left is not None:
            lo = max(lo, left)
        if up is not None:
            lo = max(lo, up)
        for code in range(lo, 2 * NVARS + 1):
            if left == code and code % 2 == 1:
                continue  # a marked letter repeats within a row
            if up == code and code % 2 == 0:
                continue  # an unmarked letter repeats within a column
            fill(i + 1, letters + (code,))

    fill(0, ())
    return out


def _series_q():
    """Coefficients of t^r in prod_i (1 + x_i t)/(1 - x_i t), r <= NVARS."""
    series = [dict() for _ in range(NVARS + 1)]
    series[0] = {ZERO: 1}
    for i in range(NVARS):
        nxt = [dict(s) for s in series]
        for k in range(1, NVARS + 1):
            e = tuple(k if j == i else 0 for j in range(NVARS))
            xk = {e: 2}
            for r in range(NVARS + 1 - k):
                if not series[r]:
                    continue
                nxt[r + k] = _poly_add(nxt[r + k], _poly_mul(series[r], xk))
        series = nxt
    return series


def _strict_partitions(total):
    out = []

    def walk(prefix, rest, biggest):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(rest, biggest), 0, -1):
            walk(prefix + [part], rest - part, part - 1)

    walk([], total, total)
    return out


ALL_LAMS = [lam for k in range(1, NVARS + 1) for lam in _strict_partitions(k)]
QR = {r: _tableau_poly((r,)) for r in range(1, NVARS + 1)}


def test_the_two_oracle_routes_agree():
    series = _series_q()
    assert series[0] == {ZERO: 1}
    for r in range(1, NVARS + 1):
        assert series[r] == QR[r]


def test_one_cell_weights():
    # a single cell holds k or k', so each variable appears with coefficient 2
    poly = _tableau_poly((1,))
    assert poly == {
        tuple(1 if j == i else 0 for j in range(NVARS)): 2 for i in range(NVARS)
    }


def test_tableau_polynomials_are_symmetric():
    poly = _tableau_poly((3, 1))
    for sigma in [(1, 0, 2, 3, 4, 5), (2, 0, 1, 3, 4, 5)]:
        moved = {tuple(e[sigma[j]] for j in range(NVARS)): c for e, c in poly.items()}
        assert moved == poly


def test_expansions_evaluate_to_tableau_polynomials():
    assert len(ALL_LAMS) == 13
    for lam in ALL_LAMS:
        got = {}
        for mono, coeff in q_expansion(lam).items():
            term = {ZERO: 1}
            for part in mono:
                term = _poly_mul(term, QR[part])
            got = _poly_add(got, term, coeff)
        assert got == _tableau_poly(lam), f"expansion disagrees for {lam}"
