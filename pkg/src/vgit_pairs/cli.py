"""Command line interface.

Exit codes: 0 success, 2 input or parse error, 3 domain error.
"""
from __future__ import annotations

import functools
import os
import sys
from pathlib import Path

import click

from . import serialize as ser
from .chambers import wall_chamber_decomposition
from .errors import DomainError, InputError
from .exact import parse_rational
from .families import Kind, closed_orbit_candidates, maximal_families
from .fundamental import CACHE_ENV_VAR, get_fundamental_set
from .stability import Status, moduli_dimension, stability_interval, t_max, verdict

EXIT_INPUT = 2
EXIT_DOMAIN = 3


def default_cache_dir() -> str:
    return os.path.join(os.path.expanduser("~"), ".cache", "vgit-pairs")


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        try:
            return parse_rational(value)
        except InputError as exc:
            self.fail(str(exc), param, ctx)


def common_options(needs_t=False):
    def deco(f):
        f = click.option("--output", "-o", type=click.Path(dir_okay=False, writable=True), help="Write to a file instead of stdout.")(f)
        f = click.option("--jobs", "-j", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes.")(f)
        f = click.option(
            "--cache-dir",
            type=click.Path(file_okay=False),
            envvar=CACHE_ENV_VAR,
            default=default_cache_dir,
            show_default="~/.cache/vgit-pairs",
            help=f"Directory for the fundamental-set cache (env {CACHE_ENV_VAR}).",
        )(f)
        f = click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="json", show_default=True)(f)
        # an explicit default=None would switch off required in recent click
        t_kwargs = {"required": True} if needs_t else {"default": None}
        f = click.option("--t", "t", type=RationalType(), help="Stability parameter, p/q or integer.", **t_kwargs)(f)
        return f

    return deco


def nd_options(f):
    f = click.option("--d", "d", type=click.IntRange(min=1), required=True, help="Degree of the hypersurface.")(f)
    f = click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Hypersurfaces live in P^{n+1}.")(f)
    return f


def emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.buffer.write(text.encode("utf-8"))
        sys.stdout.flush()


def handle_errors(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except DomainError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_DOMAIN)
        except InputError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)

    return wrapper


def _check_t(n, d, t):
    if t is not None and not 0 <= t <= t_max(n, d):
        raise DomainError(f"t = {t} outside [0, {t_max(n, d)}]")


@click.group()
def main():
    """Variation of GIT for pairs (degree-d hypersurface, hyperplane) in P^{n+1}."""


@main.command()
@nd_options
@common_options()
@handle_errors
def ops(n, d, t, fmt, cache_dir, jobs, output):
    """Fundamental set of one-parameter subgroups S_{n,d}."""
    fs = get_fundamental_set(n, d, cache_dir, jobs)
    if fmt == "json":
        text = ser.dumps_json({"n": n, "d": d, "count": len(fs), "elements": fs.as_lists()})
    elif fmt == "csv":
        header = ["index"] + [f"r{i}" for i in range(n + 2)]
        text = ser.dumps_csv(header, [[k] + w for k, w in enumerate(fs.as_lists())])
    else:
        lines = [f"S_{{{n},{d}}}: {len(fs)} one-parameter subgroups"]
        lines += [str(lam) for lam in fs]
        text = "\n".join(lines) + "\n"
    emit(text, output)


@main.command()
@nd_options
@common_options()
@handle_errors
def walls(n, d, t, fmt, cache_dir, jobs, output):
    """Candidate walls, confirmed walls and chambers."""
    fs = get_fundamental_set(n, d, cache_dir, jobs)
    dec = wall_chamber_decomposition(n, d, fs, jobs)
    if fmt == "json":
        text = ser.dumps_json(
            {
                "n": n,
                "d": d,
                "t_max": ser.rational(t_max(n, d)),
                "candidates": [ser.rational(x) for x in dec.candidates],
                "walls": [ser.rational(x) for x in dec.walls],
                "chambers": [
                    {"lower": ser.rational(a), "upper": ser.rational(b), "representative": ser.rational(r)}
                    for (a, b), r in zip(dec.chambers, dec.representatives)
                ],
            }
        )
    elif fmt == "csv":
        rows = [["candidate", str(x), "", ""] for x in dec.candidates]
        rows += [["wall", str(x), "", ""] for x in dec.walls]
        rows += [["chamber", str(r), str(a), str(b)] for (a, b), r in zip(dec.chambers, dec.representatives)]
        text = ser.dumps_csv(["kind", "value", "lower", "upper"], rows)
    else:
        lines = [
            f"t_max = {t_max(n, d)}",
            "candidates: " + ", ".join(map(str, dec.candidates)),
            "walls: " + ", ".join(map(str, dec.walls)),
        ]
        lines += [f"chamber ({a}, {b}) representative {r}" for (a, b), r in zip(dec.chambers, dec.representatives)]
        text = "\n".join(lines) + "\n"
    emit(text, output)


@main.command()
@nd_options
@common_options(needs_t=True)
@handle_errors
def families(n, d, t, fmt, cache_dir, jobs, output):
    """Maximal ⊕- and +-families at t, with the verdict on each ⊕-family's generic member."""
    _check_t(n, d, t)
    fs = get_fundamental_set(n, d, cache_dir, jobs)
    weak = maximal_families(n, d, t, Kind.WEAK, fs)
    strict = maximal_families(n, d, t, Kind.STRICT, fs)
    generic = []
    for f in weak:
        v = verdict(f.generic_member(n, d), t, fs)
        if v.status is Status.STABLE:
            raise RuntimeError(f"generic member of {f} is stable")
        generic.append(v.status.value)
    if fmt == "json":
        text = ser.dumps_json(
            {
                "n": n,
                "d": d,
                "t": ser.rational(t),
                "weak": [ser.family_record(f, {"generic_verdict": g}) for f, g in zip(weak, generic)],
                "strict": [ser.family_record(f) for f in strict],
            }
        )
    elif fmt == "csv":
        rows = [
            [f.kind.value, " ".join(map(str, f.lam.weights)), f.pivot, ser.text_poly(f.V), ser.text_poly(f.B), str(t), g]
            for f, g in zip(weak, generic)
        ]
        rows += [
            [f.kind.value, " ".join(map(str, f.lam.weights)), f.pivot, ser.text_poly(f.V), ser.text_poly(f.B), str(t), ""]
            for f in strict
        ]
        text = ser.dumps_csv(["kind", "lambda", "pivot", "V", "B", "t", "generic_verdict"], rows)
    else:
        lines = [f"t = {t}: {len(weak)} maximal ⊕-families, {len(strict)} maximal +-families"]
        for f, g in zip(weak, generic):
            lines.append(f"⊕ lambda={f.lam} pivot=x{f.pivot} [{g}]: {ser.text_poly(f.V)} ; {ser.text_poly(f.B)}")
        for f in strict:
            lines.append(f"+ lambda={f.lam} pivot=x{f.pivot}: {ser.text_poly(f.V)} ; {ser.text_poly(f.B)}")
        text = "\n".join(lines) + "\n"
    emit(text, output)


@main.command("closed-orbits")
@nd_options
@common_options(needs_t=True)
@handle_errors
def closed_orbits(n, d, t, fmt, cache_dir, jobs, output):
    """Supports of candidate closed strictly t-semistable orbits."""
    _check_t(n, d, t)
    fs = get_fundamental_set(n, d, cache_dir, jobs)
    cands = closed_orbit_candidates(n, d, t, fs)
    boundary = t == 0 or t == t_max(n, d)
    if fmt == "json":
        text = ser.dumps_json(
            {
                "n": n,
                "d": d,
                "t": ser.rational(t),
                "boundary": boundary,
                "candidates": [
                    {
                        "V": ser.exps(c.V0),
                        "B": ser.indices(c.B0),
                        "witnesses": [{"lambda": list(lam.weights), "pivot": i} for lam, i in c.witnesses],
                    }
                    for c in cands
                ],
            }
        )
    elif fmt == "csv":
        rows = [
            [
                ser.text_poly(c.V0),
                ser.text_poly(c.B0),
                "; ".join(f"{' '.join(map(str, lam.weights))} @x{i}" for lam, i in c.witnesses),
                str(boundary).lower(),
            ]
            for c in cands
        ]
        text = ser.dumps_csv(["V", "B", "witnesses", "boundary"], rows)
    else:
        lines = [f"t = {t}: {len(cands)} closed-orbit candidates" + (" (boundary t)" if boundary else "")]
        lines += [f"{ser.text_poly(c.V0)} ; {ser.text_poly(c.B0)}" for c in cands]
        text = "\n".join(lines) + "\n"
    emit(text, output)


@main.command()
@click.option("--n", "n", type=click.IntRange(min=0), default=None, help="Ambient P^{n+1}; read from JSON pairs.")
@click.option("--d", "d", type=click.IntRange(min=1), default=None, help="Degree; inferred when omitted.")
@click.option("--pair", "pair_text", default=None, help='Inline pair, e.g. "x0^2 + x0*x1 ; x1".')
@click.option("--pair-file", type=click.Path(exists=True, dir_okay=False), default=None, help="Pair file (JSON or text form).")
@common_options()
@handle_errors
def check(n, d, pair_text, pair_file, t, fmt, cache_dir, jobs, output):
    """Interval of stability of a pair, and its verdict at t when given."""
    if (pair_text is None) == (pair_file is None):
        raise InputError("give exactly one of --pair and --pair-file")
    source = pair_text if pair_text is not None else Path(pair_file).read_text(encoding="utf-8")
    p = ser.parse_pair(source, n, d)
    fs = get_fundamental_set(p.n, p.d, cache_dir, jobs)
    interval = stability_interval(p, fs)
    v = None
    if t is not None:
        v = verdict(p, t, fs)
    if fmt == "json":
        obj = {
            "n": p.n,
            "d": p.d,
            "X": ser.exps(p.X),
            "H": ser.indices(p.H),
            "interval": None if interval is None else {"lower": ser.rational(interval[0]), "upper": ser.rational(interval[1])},
        }
        if v is not None:
            obj["verdict"] = {
                "t": ser.rational(t),
                "status": v.status.value,
                "max_mu": ser.rational(v.max_mu),
                "witness": None if v.witness is None else {"lambda": list(v.witness[0].weights), "sigma": list(v.witness[1])},
            }
        text = ser.dumps_json(obj)
    elif fmt == "csv":
        lo, hi = ("", "") if interval is None else (str(interval[0]), str(interval[1]))
        row = [ser.text_poly(p.X), ser.text_poly(p.H), lo, hi]
        if v is not None:
            wl, ws = ("", "") if v.witness is None else (" ".join(map(str, v.witness[0].weights)), " ".join(map(str, v.witness[1])))
            row += [str(t), v.status.value, str(v.max_mu), wl, ws]
        else:
            row += ["", "", "", "", ""]
        text = ser.dumps_csv(["X", "H", "interval_lower", "interval_upper", "t", "status", "max_mu", "witness_lambda", "witness_sigma"], [row])
    else:
        lines = [f"pair: {p}", "interval: " + ("empty" if interval is None else f"[{interval[0]}, {interval[1]}]")]
        if v is not None:
            lines.append(f"t = {t}: {v.status.value}")
            if v.witness is not None:
                lines.append(f"witness: lambda={v.witness[0]} sigma={v.witness[1]}")
        text = "\n".join(lines) + "\n"
    emit(text, output)


@main.command()
@nd_options
@common_options()
@handle_errors
def dim(n, d, t, fmt, cache_dir, jobs, output):
    """Dimension of the GIT quotient (needs d >= 3)."""
    value = moduli_dimension(n, d)
    if fmt == "json":
        text = ser.dumps_json({"n": n, "d": d, "dimension": value})
    elif fmt == "csv":
        text = ser.dumps_csv(["n", "d", "dimension"], [[n, d, value]])
    else:
        text = f"{value}\n"
    emit(text, output)


@main.command()
@nd_options
@common_options()
@handle_errors
def tmax(n, d, t, fmt, cache_dir, jobs, output):
    """Upper end d/(n+1) of the stability parameter range."""
    value = t_max(n, d)
    if fmt == "json":
        text = ser.dumps_json({"n": n, "d": d, "t_max": ser.rational(value)})
    elif fmt == "csv":
        text = ser.dumps_csv(["n", "d", "t_max"], [[n, d, str(value)]])
    else:
        text = f"{value}\n"
    emit(text, output)


if __name__ == "__main__":
    main()
