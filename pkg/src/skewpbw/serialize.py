"""JSON formats for presentations, elements and computed bases.

Files use 1-based generator indices, internal objects 0-based.  Rationals
are written as strings ``"p/q"`` (or ``"p"`` when integral) in lowest terms.

Presentation::

    {"omega_size": 2, "n": 2,
     "tau": [[0, 1], [1, 0]],
     "d": [["0", "0"], ["1", "1"]],                        # optional
     "c": {"1,2": ["1", "2"]},
     "r": {"1,2": {"const": ["0", "0"], "lin": [[...], [...]]}}}   # optional

Element: ``{"(1,0)": ["1", "1/2"], "(0,0)": ["3", "0"]}``.
"""

from __future__ import annotations

import json
import re

from .errors import ParseError, PresentationError
from .funalg import AlgebraElement, to_rational
from .multiindex import MultiIndex, deglex_key
from .pbw_core import PBWElement, Presentation, Remainder

__all__ = [
    "load_json_text",
    "presentation_from_dict",
    "presentation_to_dict",
    "load_presentation",
    "element_from_dict",
    "element_to_dict",
    "parse_element",
    "basis_document",
    "graded_document",
    "dumps",
]


def load_json_text(text, what="document"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {what}: {exc.msg}", exc.lineno, exc.colno) from exc


def _vector(raw, m, what):
    if not isinstance(raw, list):
        raise ParseError(f"{what} must be a list of rationals")
    if len(raw) != m:
        raise ParseError(f"{what} has {len(raw)} entries, expected {m}")
    try:
        return AlgebraElement(to_rational(v) for v in raw)
    except TypeError as exc:
        raise ParseError(f"{what}: {exc}") from exc


def _pair_key(key, n):
    m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", key)
    if m is None:
        raise ParseError(f"pair key {key!r} must look like \"i,j\"")
    i, j = int(m.group(1)), int(m.group(2))
    if not 1 <= i < j <= n:
        raise ParseError(f"pair {key!r} must satisfy 1 <= i < j <= {n}")
    return i - 1, j - 1


def presentation_from_dict(data, strict=False):
    if not isinstance(data, dict):
        raise ParseError("presentation must be a JSON object")
    for field in ("omega_size", "n", "tau"):
        if field not in data:
            raise ParseError(f"presentation is missing {field!r}")
    m, n = data["omega_size"], data["n"]
    if not (isinstance(m, int) and m >= 1 and isinstance(n, int) and n >= 1):
        raise ParseError("omega_size and n must be positive integers")
    taus = data["tau"]
    if not isinstance(taus, list) or len(taus) != n:
        raise ParseError(f"tau must list {n} permutations")
    for k, t in enumerate(taus):
        if not isinstance(t, list) or len(t) != m:
            raise ParseError(f"tau[{k + 1}] must be an image list of length {m}")
    ds = None
    if data.get("d") is not None:
        if not isinstance(data["d"], list) or len(data["d"]) != n:
            raise ParseError(f"d must list {n} vectors")
        ds = [_vector(v, m, f"d[{k + 1}]") for k, v in enumerate(data["d"])]
    c = {}
    for key, raw in (data.get("c") or {}).items():
        c[_pair_key(key, n)] = _vector(raw, m, f"c[{key}]")
    r = {}
    for key, raw in (data.get("r") or {}).items():
        if not isinstance(raw, dict):
            raise ParseError(f"r[{key}] must be an object with const/lin")
        extra = set(raw) - {"const", "lin"}
        if extra:
            raise ParseError(f"r[{key}] has unsupported parts {sorted(extra)}; remainders have degree <= 1")
        const = _vector(raw.get("const", ["0"] * m), m, f"r[{key}].const")
        lin_raw = raw.get("lin", [["0"] * m] * n)
        if not isinstance(lin_raw, list) or len(lin_raw) != n:
            raise ParseError(f"r[{key}].lin must list {n} vectors")
        lin = tuple(_vector(v, m, f"r[{key}].lin[{k + 1}]") for k, v in enumerate(lin_raw))
        r[_pair_key(key, n)] = Remainder(const, lin)
    try:
        return Presentation(taus, ds, c, r, strict=strict)
    except ValueError as exc:
        if isinstance(exc, (ParseError, PresentationError)):
            raise
        raise PresentationError(str(exc)) from exc


def presentation_to_dict(p):
    out = {
        "omega_size": p.m,
        "n": p.n,
        "tau": [list(t.image) for t in p.taus],
    }
    if not all(d.is_zero() for d in p.deltas):
        out["d"] = [d.d.to_strings() for d in p.deltas]
    out["c"] = {f"{i + 1},{j + 1}": v.to_strings() for (i, j), v in sorted(p.c.items())}
    if p.r:
        out["r"] = {
            f"{i + 1},{j + 1}": {"const": rem.const.to_strings(), "lin": [v.to_strings() for v in rem.lin]}
            for (i, j), rem in sorted(p.r.items())
        }
    return out


def load_presentation(path, strict=False):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return presentation_from_dict(load_json_text(text, str(path)), strict=strict)


def element_from_dict(p, data):
    if not isinstance(data, dict):
        raise ParseError("element literal must be a JSON object mapping \"(a1,...,an)\" to coefficient lists")
    terms = {}
    for key, raw in data.items():
        alpha = MultiIndex.parse(key)
        if len(alpha) != p.n:
            raise ParseError(f"exponent {key} has length {len(alpha)}, expected {p.n}")
        coeff = _vector(raw, p.m, f"coefficient of {key}")
        terms[alpha] = terms[alpha] + coeff if alpha in terms else coeff
    return PBWElement(p, terms)


def parse_element(p, text):
    return element_from_dict(p, load_json_text(text, "element literal"))


def element_to_dict(f):
    return {str(alpha): v.to_strings() for alpha, v in f.sorted_terms()}


def basis_document(basis, method=None):
    return {
        "method": method or basis.method,
        "max_degree": basis.max_degree,
        "basis": [element_to_dict(f) for f in basis.elements],
    }


def graded_document(gb):
    entries = []
    for alpha in sorted(gb.spaces, key=deglex_key):
        for v in gb.spaces[alpha]:
            entries.append({"alpha": str(alpha), "coeff": v.to_strings()})
    return {"method": "sep", "max_degree": gb.max_degree, "basis": entries}


def dumps(doc):
    """Deterministic JSON text (stable key order, UTF-8 kept)."""
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False) + "\n"

