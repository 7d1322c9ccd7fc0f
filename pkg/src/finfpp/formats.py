"""JSON file formats for complexes, posets, maps and realization lists.

Every loader raises :class:`InputError` with a message that names the file
and the position of the offending item (``line:col`` for syntax errors, a
JSON path such as ``facets[3][1]`` for structural ones).
"""
from __future__ import annotations

import hashlib
import json
import os
from typing import List, Union

from .assembly import AssemblyError, RealizationDatum
from .chains import Chain
from .fposet import FinitePoset, MonotoneMap, PosetError
from .scomplex import ComplexError, SimplicialComplex, SimplicialMap


class InputError(ValueError):
    pass


def dumps(obj) -> str:
    """Canonical newline-terminated JSON."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=1) + "\n"


def file_hash(path: str) -> str:
    with open(path, "rb") as fh:
        return "sha256:" + hashlib.sha256(fh.read()).hexdigest()


def read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"{path}: cannot read ({e.strerror})") from None
    except UnicodeDecodeError as e:
        raise InputError(f"{path}: byte {e.start}: not UTF-8") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None


def write_json(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def _names(seq, where: str, src: str) -> List[str]:
    if not isinstance(seq, list):
        raise InputError(f"{src}: {where}: expected a list")
    for i, v in enumerate(seq):
        if not isinstance(v, str) or not v:
            raise InputError(f"{src}: {where}[{i}]: names must be nonempty strings, got {v!r}")
    return seq


# -- complexes -----------------------------------------------------------------

def complex_from_json(data, src: str = "<input>") -> SimplicialComplex:
    if not isinstance(data, dict) or "facets" not in data:
        raise InputError(f"{src}: expected an object with a 'facets' list")
    facets = data["facets"]
    if not isinstance(facets, list):
        raise InputError(f"{src}: facets: expected a list")
    for i, f in enumerate(facets):
        _names(f, f"facets[{i}]", src)
        if not f:
            raise InputError(f"{src}: facets[{i}]: empty facet")
        if len(set(f)) != len(f):
            raise InputError(f"{src}: facets[{i}]: repeated vertex")
    labels = data.get("labels") or {}
    if not isinstance(labels, dict):
        raise InputError(f"{src}: labels: expected an object")
    for v, s in labels.items():
        _names(s, f"labels[{v!r}]", src)
    try:
        K = SimplicialComplex(facets, labels={v: tuple(s) for v, s in labels.items()})
    except ComplexError as e:
        raise InputError(f"{src}: {e}") from None
    unknown = sorted(set(labels) - K.vertices_set)
    if unknown:
        raise InputError(f"{src}: labels[{unknown[0]!r}]: not a vertex")
    return K


def read_complex(path: str) -> SimplicialComplex:
    return complex_from_json(read_json(path), path)


# -- posets --------------------------------------------------------------------

def poset_from_json(data, src: str = "<input>", repair: bool = False) -> FinitePoset:
    if not isinstance(data, dict) or "points" not in data:
        raise InputError(f"{src}: expected an object with a 'points' list")
    points = _names(data["points"], "points", src)
    covers = data.get("covers", [])
    if not isinstance(covers, list):
        raise InputError(f"{src}: covers: expected a list")
    pset = set(points)
    for i, c in enumerate(covers):
        _names(c, f"covers[{i}]", src)
        if len(c) != 2:
            raise InputError(f"{src}: covers[{i}]: a cover is a pair [lower, upper]")
        for j, p in enumerate(c):
            if p not in pset:
                raise InputError(f"{src}: covers[{i}][{j}]: unknown point {p!r}")
    try:
        return FinitePoset(points, [tuple(c) for c in covers], repair=repair)
    except PosetError as e:
        raise InputError(f"{src}: {e}") from None


def read_poset(path: str, repair: bool = False) -> FinitePoset:
    return poset_from_json(read_json(path), path, repair)


def read_space(path: str, repair: bool = False) -> Union[SimplicialComplex, FinitePoset]:
    """A complex or a poset, told apart by the ``facets``/``points`` key."""
    data = read_json(path)
    if isinstance(data, dict) and "points" in data:
        return poset_from_json(data, path, repair)
    return complex_from_json(data, path)


def space_to_json(obj) -> dict:
    return obj.to_json()


# -- maps ----------------------------------------------------------------------

def _resolve(base: str, ref, where: str, src: str, repair: bool = False):
    if isinstance(ref, str):
        path = ref if os.path.isabs(ref) else os.path.join(os.path.dirname(src), ref)
        return read_space(path, repair)
    if isinstance(ref, dict):
        if "points" in ref:
            return poset_from_json(ref, f"{src}: {where}", repair)
        return complex_from_json(ref, f"{src}: {where}")
    raise InputError(f"{src}: {where}: expected a path or an inline object")


def map_from_json(data, src: str = "<input>", source=None, target=None):
    """A :class:`SimplicialMap` or :class:`MonotoneMap`.

    ``source``/``target`` override the referenced files, which lets callers
    keep object identity with spaces they already hold.
    """
    if not isinstance(data, dict) or "assign" not in data:
        raise InputError(f"{src}: expected an object with 'source', 'target' and 'assign'")
    if source is None:
        if "source" not in data:
            raise InputError(f"{src}: source: missing")
        source = _resolve(src, data["source"], "source", src)
    if target is None:
        if "target" not in data:
            raise InputError(f"{src}: target: missing")
        target = _resolve(src, data["target"], "target", src)
    assign = data["assign"]
    if not isinstance(assign, dict):
        raise InputError(f"{src}: assign: expected an object")
    for k, v in assign.items():
        if not isinstance(v, str):
            raise InputError(f"{src}: assign[{k!r}]: expected a name, got {v!r}")
    if type(source) is not type(target):
        raise InputError(f"{src}: source and target must both be complexes or both posets")
    try:
        if isinstance(source, FinitePoset):
            return MonotoneMap(source, target, assign)
        return SimplicialMap(source, target, assign)
    except (ComplexError, PosetError) as e:
        raise InputError(f"{src}: assign: {e}") from None


def read_map(path: str, source=None, target=None):
    return map_from_json(read_json(path), path, source, target)


def map_to_json(f, source_path: str, target_path: str) -> dict:
    return {"source": source_path, "target": target_path, "assign": dict(sorted(f.assign.items()))}


# -- realizations --------------------------------------------------------------

def chain_from_json(data, dim: int, where: str, src: str) -> Chain:
    if not isinstance(data, list):
        raise InputError(f"{src}: {where}: expected a list of [simplex, coefficient] pairs")
    terms = []
    for i, t in enumerate(data):
        if not (isinstance(t, list) and len(t) == 2 and isinstance(t[1], int)):
            raise InputError(f"{src}: {where}[{i}]: expected [simplex, integer]")
        _names(t[0], f"{where}[{i}][0]", src)
        if len(t[0]) != dim + 1:
            raise InputError(f"{src}: {where}[{i}][0]: not a {dim}-simplex")
        terms.append((t[1], t[0]))
    return Chain.from_terms(dim, terms)


def read_realizations(path: str, K: SimplicialComplex) -> List[RealizationDatum]:
    """A list of ``{"k": int, "M": path, "map": path, "class"?: chain}``."""
    data = read_json(path)
    if not isinstance(data, list):
        raise InputError(f"{path}: expected a list of realizations")
    out = []
    for i, item in enumerate(data):
        where = f"[{i}]"
        if not isinstance(item, dict):
            raise InputError(f"{path}: {where}: expected an object")
        for key in ("k", "M", "map"):
            if key not in item:
                raise InputError(f"{path}: {where}.{key}: missing")
        k = item["k"]
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise InputError(f"{path}: {where}.k: expected a positive integer")
        M = _resolve(path, item["M"], f"{where}.M", path)
        if not isinstance(M, SimplicialComplex):
            raise InputError(f"{path}: {where}.M: expected a complex")
        mref = item["map"]
        if isinstance(mref, str):
            mpath = mref if os.path.isabs(mref) else os.path.join(os.path.dirname(path), mref)
            phi = read_map(mpath, source=M, target=K)
        else:
            phi = map_from_json(mref, f"{path}: {where}.map", source=M, target=K)
        claimed = None
        if "class" in item:
            claimed = chain_from_json(item["class"], k, f"{where}.class", path)
        try:
            out.append(RealizationDatum(k, M, phi, claimed))
        except AssemblyError as e:
            raise InputError(f"{path}: {where}: {e}") from None
    return out
