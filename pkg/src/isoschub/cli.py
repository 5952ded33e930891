"""Command-line front end.

Permutations are written either in one-line form, "3,-1,2", or in cycle
form, "<1,3,4><2] n=4".  All subcommands print JSON (or DOT for
intervals) to stdout.  Exit status: 0 on success, 1 when a verification
suite fails, 2 on bad input.
"""

from __future__ import annotations

import json
import sys

import click

from . import verify as verify_mod
from .chains import stat_counts
from .factor import irreducible_factors
from .orders import build_interval
from .perm import format_one_line, parse
from .schubert import chevalley, pieri, structure_constant, vector_to_json
from .schur_pq import lr_coefficient

__all__ = ["main"]


def _parse_perm(text: str) -> tuple[int, ...]:
    try:
        return parse(text)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _parse_parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise click.UsageError(f"bad partition {text!r}") from exc


def _emit(data) -> None:
    click.echo(json.dumps(data))


@click.group()
def main() -> None:
    """Schubert-basis combinatorics for the isotropic flag manifolds."""


@main.command("mult")
@click.option("--basis", type=click.Choice(["B", "C"]), required=True)
@click.option("--u", "u_text", required=True)
@click.option("--m", type=int, required=True)
@click.option("--method", type=click.Choice(["chains", "minimal"]), default="chains")
@click.option(
    "--variant",
    type=click.Choice(["peakless", "no_descent", "no_ascent"]),
    default=None,
)
def mult_cmd(basis: str, u_text: str, m: int, method: str, variant: str | None):
    """Multiply the class of u by the degree-m special class."""
    u = _parse_perm(u_text)
    try:
        vec = pieri(u, m, basis, method, variant)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(vector_to_json(vec, basis, len(u)))


@main.command("chevalley")
@click.option("--basis", type=click.Choice(["B", "C"]), required=True)
@click.option("--u", "u_text", required=True)
def chevalley_cmd(basis: str, u_text: str):
    """Multiply the class of u by the degree-one special class."""
    u = _parse_perm(u_text)
    _emit(vector_to_json(chevalley(u, basis), basis, len(u)))


def _interval_json(iv) -> dict:
    nodes = sorted(
        (r, format_one_line(p)) for p, r in iv.rank_of.items()
    )
    edges = []
    for src in iv.edges:
        for tgt, lab in iv.edges[src]:
            edges.append((format_one_line(src), format_one_line(tgt), lab))
    edges.sort()
    return {
        "kind": iv.kind,
        "mode": iv.mode,
        "nodes": [{"perm": p, "rank": r} for r, p in nodes],
        "edges": [{"from": f, "to": t, "label": l} for f, t, l in edges],
    }


def _interval_dot(iv) -> str:
    lines = ["digraph interval {", "  rankdir=BT;"]
    for level in iv.nodes_by_rank():
        ids = " ".join(f'"{format_one_line(p)}";' for p in level)
        lines.append("  { rank=same; " + ids + " }")
    edges = []
    for src in iv.edges:
        for tgt, lab in iv.edges[src]:
            edges.append((format_one_line(src), format_one_line(tgt), lab))
    for f, t, l in sorted(edges):
        lines.append(f'  "{f}" -> "{t}" [label="{l}"];')
    lines.append("}")
    return "\n".join(lines)


@main.command("interval")
@click.option("--u", "u_text", default=None)
@click.option("--w", "w_text", default=None)
@click.option("--zeta", "zeta_text", default=None)
@click.option("--reseau", is_flag=True, default=False)
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]), default="json")
def interval_cmd(u_text, w_text, zeta_text, reseau: bool, fmt: str):
    """An interval [u,w] in the 0-Bruhat order, or [e,zeta] Lagrangian."""
    mode = "reseau" if reseau else "order"
    try:
        if zeta_text is not None:
            iv = build_interval(zeta=_parse_perm(zeta_text), mode=mode)
        elif u_text is not None and w_text is not None:
            iv = build_interval(
                u=_parse_perm(u_text), w=_parse_perm(w_text), mode=mode
            )
        else:
            raise click.UsageError("give either --zeta or both --u and --w")
        if fmt == "dot":
            click.echo(_interval_dot(iv))
        else:
            _emit(_interval_json(iv))
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    except RuntimeError as exc:
        # node-cap overflow: a resource limit, not a usage error
        raise click.ClickException(str(exc)) from exc


@main.command("stats")
@click.option("--zeta", "zeta_text", required=True)
@click.option("--peaks", is_flag=True, default=False)
@click.option("--descents", is_flag=True, default=False)
@click.option("--ascents", is_flag=True, default=False)
def stats_cmd(zeta_text: str, peaks: bool, descents: bool, ascents: bool):
    """Chain statistics of the Lagrangian interval below zeta.

    Peak sets are counted over the order, descent and ascent sets over the
    reseau; with no flag all three histograms are printed.
    """
    zeta = _parse_perm(zeta_text)
    try:
        order_iv = build_interval(zeta=zeta, mode="order")
        reseau_iv = build_interval(zeta=zeta, mode="reseau")
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    so = stat_counts(order_iv)
    sr = stat_counts(reseau_iv)

    def strung(hist: dict) -> dict:
        return {",".join(str(i) for i in k): v for k, v in hist.items()}

    out = {
        "zeta": format_one_line(zeta),
        "rank": order_iv.span,
        "order_chains": so["chains"],
        "reseau_chains": sr["chains"],
        "Pi": so["Pi"],
        "I": sr["I"],
        "D": sr["D"],
    }
    wants = []
    if peaks:
        wants.append(("by_peakset", strung(so["by_peakset"])))
    if descents:
        wants.append(("by_descentset", strung(sr["by_descentset"])))
    if ascents:
        wants.append(("by_ascentset", strung(sr["by_ascentset"])))
    if not wants:
        wants = [
            ("by_peakset", strung(so["by_peakset"])),
            ("by_descentset", strung(sr["by_descentset"])),
            ("by_ascentset", strung(sr["by_ascentset"])),
        ]
    out.update(wants)
    _emit(out)


@main.command("const")
@click.option("--u", "u_text", required=True)
@click.option("--w", "w_text", required=True)
@click.option("--lambda", "lam_text", required=True)
@click.option("--basis", type=click.Choice(["B", "C"]), required=True)
def const_cmd(u_text: str, w_text: str, lam_text: str, basis: str):
    """One structure constant against a P- or Q-class."""
    try:
        value = structure_constant(
            _parse_perm(u_text),
            _parse_perm(w_text),
            _parse_parts(lam_text),
            basis,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit({"basis": basis, "coeff": value})


@main.command("lr")
@click.option("--mu", "mu_text", required=True)
@click.option("--lambda", "lam_text", required=True)
@click.option("--kappa", "kappa_text", required=True)
@click.option("--kind", type=click.Choice(["P", "Q"]), required=True)
def lr_cmd(mu_text: str, lam_text: str, kappa_text: str, kind: str):
    """A Littlewood-Richardson coefficient for Schur P- or Q-functions."""
    try:
        value = lr_coefficient(
            _parse_parts(mu_text),
            _parse_parts(lam_text),
            _parse_parts(kappa_text),
            kind,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit({"kind": kind, "coeff": value})


@main.command("factor")
@click.option("--zeta", "zeta_text", required=True)
def factor_cmd(zeta_text: str):
    """Irreducible factorization and the two multiplicities."""
    zeta = _parse_perm(zeta_text)
    _emit(irreducible_factors(zeta).to_json())


@main.command("verify")
@click.option("--suite", required=True)
@click.option("--rank", type=int, default=None)
def verify_cmd(suite: str, rank: int | None):
    """Run a verification suite (or "all"); exit 1 on any failure."""
    try:
        reports = verify_mod.run(suite, rank)
    except KeyError as exc:
        raise click.UsageError(str(exc.args[0])) from exc
    bad = False
    for rep in reports:
        ok = not rep["failures"]
        bad = bad or not ok
        click.echo(
            f"{rep['suite']}: {'ok' if ok else 'FAIL'} "
            f"({rep['cases']} cases, {rep['seconds']:.1f}s)"
        )
        for f in rep["failures"][:20]:
            click.echo(f"  failure: {f}")
    if bad:
        sys.exit(1)


if __name__ == "__main__":
    main()
