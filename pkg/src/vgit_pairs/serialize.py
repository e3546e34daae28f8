"""Wire formats: JSON records, CSV rows, text, and pair input parsing.

Rationals are emitted as ``{"num": "<int>", "den": "<int>"}`` in JSON and as
``p/q`` strings in CSV and text. Every list is in canonical order, so output
bytes depend only on the inputs.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .errors import ParseError
from .monomials import Monomial, parse_monomial
from .stability import PairSupport


def rational(q) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def exps(monomials) -> list[list[int]]:
    return [list(m.exponents) for m in sorted(monomials)]


def indices(variables) -> list[int]:
    return sorted(m.index for m in variables)


def text_poly(monomials) -> str:
    return " + ".join(str(m) for m in sorted(monomials))


def family_record(f, extra: dict | None = None) -> dict:
    rec = {
        "lambda": list(f.lam.weights),
        "pivot": f.pivot,
        "V": exps(f.V),
        "B": indices(f.B),
        "kind": f.kind.value,
        "t": rational(f.t),
    }
    if extra:
        rec.update(extra)
    return rec


def _flat(obj) -> bool:
    if isinstance(obj, list):
        return all(not isinstance(x, (list, dict)) or _flat(x) for x in obj)
    if isinstance(obj, dict):
        return all(not isinstance(x, (list, dict)) for x in obj.values())
    return True


def _render(obj, depth):
    if _flat(obj):
        return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))
    pad = "  " * (depth + 1)
    if isinstance(obj, list):
        inner = ",\n".join(pad + _render(x, depth + 1) for x in obj)
        return "[\n" + inner + "\n" + "  " * depth + "]"
    inner = ",\n".join(f"{pad}{json.dumps(k, ensure_ascii=False)}: {_render(v, depth + 1)}" for k, v in obj.items())
    return "{\n" + inner + "\n" + "  " * depth + "}"


def dumps_json(obj) -> str:
    """Indented JSON with integer vectors and rationals kept on one line."""
    return _render(obj, 0) + "\n"


def dumps_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# --- pair input ---------------------------------------------------------------


def _line_col(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def parse_pair_json(text: str) -> PairSupport:
    """``{"n": .., "d": .., "X": [[exponents], ..], "H": [variable indices]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("pair JSON must be an object")
    for key in ("n", "d", "X", "H"):
        if key not in data:
            raise ParseError(f"missing field {key!r}")
    n, d = data["n"], data["d"]
    if not isinstance(n, int) or not isinstance(d, int) or n < 0 or d < 1:
        raise ParseError("n must be an integer >= 0 and d an integer >= 1")
    X, H = data["X"], data["H"]
    if not isinstance(X, list) or not X or not isinstance(H, list) or not H:
        raise ParseError("X and H must be nonempty lists")
    for e in X:
        if not isinstance(e, list) or len(e) != n + 2 or any(not isinstance(a, int) or a < 0 for a in e) or sum(e) != d:
            raise ParseError(f"X entry {e!r} is not a degree-{d} exponent vector of length {n + 2}")
    for i in H:
        if not isinstance(i, int) or not 0 <= i < n + 2:
            raise ParseError(f"H entry {i!r} is not a variable index in 0..{n + 1}")
    return PairSupport.from_exponents(n, d, X, H)


def parse_pair_text(text: str, n: int | None = None, d: int | None = None) -> PairSupport:
    """``"x0^2 + x0*x1 ; x1"``: hypersurface terms, a semicolon, hyperplane variables.

    Without ``n`` the ambient space is the smallest one containing every
    variable that appears (and at least P^1).
    """
    split = text.find(";")
    if split < 0:
        raise ParseError("expected ';' between the hypersurface and the hyperplane", *_line_col(text, len(text)))
    if text.find(";", split + 1) >= 0:
        raise ParseError("more than one ';'", *_line_col(text, text.find(";", split + 1)))

    def terms(start, end):
        out = []
        pos = start
        while True:
            nxt = text.find("+", pos, end)
            stop = end if nxt < 0 else nxt
            chunk = text[pos:stop]
            if not chunk.strip():
                raise ParseError("empty term", *_line_col(text, pos))
            lead = len(chunk) - len(chunk.lstrip())
            out.append((chunk.strip(), pos + lead))
            if nxt < 0:
                return out
            pos = nxt + 1

    parsed = []
    for chunk, off in terms(0, split) + terms(split + 1, len(text)):
        line, col = _line_col(text, off)
        parsed.append((parse_monomial(chunk, None, line, col), off))
    top = max(m.nvars for m, _ in parsed)
    nvars = n + 2 if n is not None else max(top, 2)
    if top > nvars:
        raise ParseError(f"variable index exceeds x{nvars - 1} for n = {nvars - 2}")
    mons = [(Monomial(m.exponents + (0,) * (nvars - m.nvars)), off) for m, off in parsed]
    nx = len(terms(0, split))
    X, H = mons[:nx], mons[nx:]
    deg = d if d is not None else X[0][0].degree
    for m, off in X:
        if m.degree != deg:
            raise ParseError(f"{m} has degree {m.degree}, expected {deg}", *_line_col(text, off))
    for m, off in H:
        if m.degree != 1:
            raise ParseError(f"{m} is not a variable", *_line_col(text, off))
    return PairSupport(frozenset(m for m, _ in X), frozenset(m for m, _ in H), nvars - 2, deg)


def parse_pair(text: str, n: int | None = None, d: int | None = None) -> PairSupport:
    """Parse either pair form, choosing by the first non-blank character."""
    if text.lstrip().startswith("{"):
        p = parse_pair_json(text)
        if (n is not None and n != p.n) or (d is not None and d != p.d):
            raise ParseError(f"pair file has n={p.n}, d={p.d}, which disagrees with the command line")
        return p
    return parse_pair_text(text, n, d)
