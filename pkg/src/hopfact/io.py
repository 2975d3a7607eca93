"""JSON formats for groups, factorizations, Hopf algebras and reports.

Errors raised while reading are ``InputError`` whose message starts with the
path of the offending field, e.g. ``g1.generators[2]: ...``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .hopf import HopfAlgebra
from .linalg import fraction_str, parse_fraction
from .permcore import InputError, PermGroup, build_bsgs, parse_perm


def load_json(path) -> object:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=1, sort_keys=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def _field(where: str, name: str) -> str:
    return f"{where}.{name}" if where else name


# --------------------------------------------------------------------------
# groups

def group_from_json(obj, where: str = "") -> PermGroup:
    if not isinstance(obj, dict):
        raise InputError(f"{where or 'group'}: expected an object with degree and generators")
    degree = obj.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise InputError(f"{_field(where, 'degree')}: must be a positive integer")
    gens = obj.get("generators")
    if not isinstance(gens, list):
        raise InputError(f"{_field(where, 'generators')}: must be a list")
    perms = []
    for k, g in enumerate(gens):
        try:
            perms.append(parse_perm(g, degree))
        except (InputError, ValueError, TypeError) as exc:
            raise InputError(f"{_field(where, 'generators')}[{k}]: {exc}") from None
    if not perms:
        perms = [tuple(range(degree))]
    return build_bsgs(perms, degree)


def group_to_json(G: PermGroup) -> dict:
    return {"degree": G.degree, "generators": [list(g) for g in G.generators]}


def read_group(path, where: str = "") -> PermGroup:
    obj = load_json(path)
    if where:
        return group_from_json(obj, where)
    try:
        return group_from_json(obj)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def read_factorization(path) -> tuple[PermGroup, PermGroup, PermGroup]:
    """``{"group", "g1", "g2"}``; each member is a group object or a path
    relative to the factorization file."""
    obj = load_json(path)
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected an object with group, g1, g2")
    base = Path(path).parent
    out = []
    for key in ("group", "g1", "g2"):
        if key not in obj:
            raise InputError(f"{key}: missing")
        val = obj[key]
        if isinstance(val, str):
            out.append(read_group(base / val, key))
        else:
            out.append(group_from_json(val, key))
    return tuple(out)


# --------------------------------------------------------------------------
# Hopf algebras

def _jsonable_label(label):
    if isinstance(label, (list, tuple)):
        return [_jsonable_label(x) for x in label]
    if isinstance(label, (str, int)) or label is None:
        return label
    return str(label)


def hopf_to_json(H: HopfAlgebra) -> dict:
    H = H.canonical()
    mult = [[i, j, k, fraction_str(c)] for (i, j), v in H.mult.items() for k, c in v.items()]
    comult = [[i, j, k, fraction_str(c)] for i, v in H.comult.items() for (j, k), c in v.items()]
    unit = [fraction_str(H.unit.get(i, 0)) for i in range(H.dim)]
    counit = [fraction_str(c) for c in H.counit]
    out = {"dim": H.dim, "name": H.name, "labels": [_jsonable_label(x) for x in H.labels],
           "mult": sorted(mult), "comult": sorted(comult), "unit": unit, "counit": counit}
    if H.antipode is not None:
        out["antipode"] = sorted([i, j, fraction_str(c)]
                                 for j, col in H.antipode.items() for i, c in col.items())
    return out


def _index(v, dim, where):
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < dim:
        raise InputError(f"{where}: index {v!r} out of range for dim {dim}")
    return v


def _rational(v, where) -> Fraction:
    try:
        return parse_fraction(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: {exc}") from None


def hopf_from_json(obj) -> HopfAlgebra:
    if not isinstance(obj, dict):
        raise InputError("hopf: expected an object")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("dim: must be a positive integer")
    for key in ("mult", "comult", "unit", "counit"):
        if not isinstance(obj.get(key), list):
            raise InputError(f"{key}: missing or not a list")
    mult: dict = {}
    for n, e in enumerate(obj["mult"]):
        w = f"mult[{n}]"
        if not isinstance(e, list) or len(e) != 4:
            raise InputError(f"{w}: expected [i, j, k, \"num/den\"]")
        i, j, k = (_index(x, dim, w) for x in e[:3])
        c = _rational(e[3], w)
        if c:
            mult.setdefault((i, j), {})[k] = c
    comult: dict = {}
    for n, e in enumerate(obj["comult"]):
        w = f"comult[{n}]"
        if not isinstance(e, list) or len(e) != 4:
            raise InputError(f"{w}: expected [i, j, k, \"num/den\"]")
        i, j, k = (_index(x, dim, w) for x in e[:3])
        c = _rational(e[3], w)
        if c:
            comult.setdefault(i, {})[(j, k)] = c
    for key in ("unit", "counit"):
        if len(obj[key]) != dim:
            raise InputError(f"{key}: expected {dim} entries, got {len(obj[key])}")
    unit = {i: c for i, c in ((i, _rational(v, f"unit[{i}]")) for i, v in enumerate(obj["unit"])) if c}
    counit = [_rational(v, f"counit[{i}]") for i, v in enumerate(obj["counit"])]
    antipode = None
    if obj.get("antipode") is not None:
        antipode = {}
        for n, e in enumerate(obj["antipode"]):
            w = f"antipode[{n}]"
            if not isinstance(e, list) or len(e) != 3:
                raise InputError(f"{w}: expected [i, j, \"num/den\"]")
            i, j = (_index(x, dim, w) for x in e[:2])
            c = _rational(e[2], w)
            if c:
                antipode.setdefault(j, {})[i] = c
    labels = obj.get("labels") or [str(i) for i in range(dim)]
    if len(labels) != dim:
        raise InputError(f"labels: expected {dim} entries, got {len(labels)}")
    return HopfAlgebra(dim, labels, mult, unit, comult, counit, antipode, obj.get("name", "")).canonical()


def write_hopf(H: HopfAlgebra, path) -> str:
    return dump_json(hopf_to_json(H), path)


def read_hopf(path) -> HopfAlgebra:
    return hopf_from_json(load_json(path))
