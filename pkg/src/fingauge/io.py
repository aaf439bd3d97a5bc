"""Reading inputs from JSON files, stdin or builtin names."""

from __future__ import annotations

import hashlib
import json
import sys
from importlib import resources
from pathlib import Path

from .arith.cyclotomic import Cyclotomic
from .arith.linalg import CycMatrix
from .arith.phase import Phase
from .cohomology.cochains import GroupCochain, cyclic_three_cocycle
from .cohomology.loop import LoopTwoCochain
from .groupoids.group import BUILTIN_GROUPS, FiniteGroup, builtin_group, group_from_permutations, group_from_table
from .groupoids.groupoid import FiniteGroupoid, GroupoidFunctor, codiscrete_groupoid, delooping, point_groupoid


class InputError(ValueError):
    """Malformed or inconsistent input."""


DATA = "data"


def data_path(name: str) -> Path | None:
    p = resources.files("fingauge").joinpath(DATA, name)
    return Path(str(p)) if p.is_file() else None


def resolve_file(name: str) -> Path | None:
    p = Path(name)
    if p.is_file():
        return p
    return data_path(p.name)


def read_text(name: str | None) -> tuple[str, str]:
    """``(text, digest label)`` for a file name, or stdin when ``name`` is
    ``None`` or ``-``."""
    if name in (None, "-"):
        text = sys.stdin.read()
        return text, "stdin:" + hashlib.sha256(text.encode()).hexdigest()
    path = resolve_file(name)
    if path is None:
        raise InputError(f"no such file: {name}")
    text = path.read_text()
    return text, "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} is not valid JSON: {exc}") from None


def load_json(name: str | None, what: str = "input"):
    text, digest = read_text(name)
    return parse_json(text, what), digest


# groups


def group_from_json(data) -> FiniteGroup:
    if isinstance(data, str):
        key = _builtin_key(data)
        if key is None:
            raise InputError(f"unknown group {data!r}")
        return builtin_group(key)
    if not isinstance(data, dict):
        raise InputError("group must be a name or an object")
    if "builtin" in data:
        return group_from_json(str(data["builtin"]))
    name = data.get("name", "G")
    if "table" in data:
        return group_from_table(data["table"], name=name)
    if "permutations" in data:
        return group_from_permutations(data["permutations"], name=name)
    raise InputError("group object needs 'table', 'permutations' or 'builtin'")


def _builtin_key(name: str) -> str | None:
    stem = Path(name).name
    if stem.endswith(".json"):
        stem = stem[:-5]
    for key in BUILTIN_GROUPS:
        if key.lower() == stem.lower():
            return key
    if stem[:1] in "zZsS" and stem[1:].isdigit():
        return stem[0].upper() + stem[1:]
    return None


def load_group(spec: str) -> tuple[FiniteGroup, str]:
    path = resolve_file(spec)
    if path is not None:
        data, digest = load_json(str(path), "group file")
        return group_from_json(data), digest
    key = _builtin_key(spec)
    if key is None:
        raise InputError(f"unknown group {spec!r}")
    return builtin_group(key), f"builtin:{key}"


# cochains


def phase_of(v) -> Phase:
    try:
        return Phase.coerce(v)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad phase {v!r}: {exc}") from None


def cochain_from_json(data: dict, G: FiniteGroup | None = None) -> GroupCochain:
    if G is None:
        if "group" not in data:
            raise InputError("cochain file needs a group")
        G = group_from_json(data["group"])
    degree = int(data.get("degree", 3))
    vals = {}
    for k, v in data.get("values", {}).items():
        key = tuple(int(a) for a in str(k).split(","))
        vals[key] = phase_of(v)
    try:
        return GroupCochain(G, degree, vals)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def load_cochain(spec: str | None, G: FiniteGroup | None, degree: int = 3) -> tuple[GroupCochain, str]:
    """``zero``, ``cyclic`` / ``cyclic:p`` (needs a cyclic G), a file, or stdin."""
    if spec == "zero":
        if G is None:
            raise InputError("--cochain zero needs --group")
        return GroupCochain.zero(G, degree), "zero"
    if spec is not None and spec.startswith("cyclic"):
        if G is None:
            raise InputError("--cochain cyclic needs --group")
        p = int(spec.split(":", 1)[1]) if ":" in spec else 1
        if not G.is_abelian() or G.exponent != G.order:
            raise InputError("cyclic cochain needs a cyclic group")
        gen = next(g for g in G if G.element_order(g) == G.order)
        iso = {G.power(gen, k): k for k in range(G.order)}
        base = cyclic_three_cocycle(G.order, p)
        vals = {(a, b, c): base(iso[a], iso[b], iso[c]) for a in G for b in G for c in G}
        return GroupCochain(G, 3, vals), f"cyclic:{p}"
    data, digest = load_json(spec, "cochain")
    return cochain_from_json(data, G if "group" not in data else None), digest


def loop_cochain_from_json(data: dict, G: FiniteGroup | None = None) -> LoopTwoCochain:
    if "group" in data:
        G = group_from_json(data["group"])
    if G is None:
        raise InputError("twist needs a group")
    vals = {}
    for k, v in data.get("values", {}).items():
        key = tuple(int(a) for a in str(k).split(";"))
        if len(key) != 3:
            raise InputError(f"twist key {k!r} must be 'x;g;h'")
        vals[key] = phase_of(v)
    return LoopTwoCochain(G, vals)


def load_twist(spec: str | None, G: FiniteGroup) -> tuple[LoopTwoCochain, str]:
    if spec in (None, "zero"):
        return LoopTwoCochain.zero(G), "zero"
    data, digest = load_json(spec, "twist")
    tw = loop_cochain_from_json(data, G)
    if tw.group.table != G.table:
        raise InputError("twist group differs from --group")
    return tw, digest


# loop reps


def matrix_from_json(rows) -> CycMatrix:
    try:
        return CycMatrix.from_json(rows)
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"bad matrix: {exc}") from None


def loop_rep_from_json(data: dict, G: FiniteGroup | None = None):
    from .double.reps import LoopRep, RepShapeError

    if "group" in data:
        G = group_from_json(data["group"])
    if G is None:
        raise InputError("rep needs a group")
    dims = [int(d) for d in data["dims"]]
    mats = {}
    for k, rows in data.get("matrices", {}).items():
        x, g = (int(a) for a in str(k).split(";"))
        m = matrix_from_json(rows)
        if not rows:
            m = CycMatrix.zeros(dims[G.conj(g, x)], dims[x])
        mats[(x, g)] = m
    for x in G:
        for g in G:
            if (x, g) not in mats and dims[x] == 0:
                mats[(x, g)] = CycMatrix.zeros(dims[G.conj(g, x)], 0)
    rep = LoopRep(G, dims, mats)
    try:
        rep.check_shapes()
    except RepShapeError as exc:
        raise InputError(str(exc)) from None
    return rep


def cyclotomic_json(c: Cyclotomic, with_float: bool = False) -> dict:
    out = {"exact": str(c), "order": c.order, "coeffs": [str(x) for x in c.coeffs]}
    if with_float:
        z = complex(c)
        out["float"] = [z.real, z.imag]
    return out


# manifolds and presentations


def load_manifold(spec: str):
    from .sigma.triangulation import Triangulation3, TriangulationError, boundary_4simplex, pachner_1_4, torus3_kuhn

    named = {
        "boundary4simplex": boundary_4simplex,
        "s3": boundary_4simplex,
        "pachner": lambda: pachner_1_4(boundary_4simplex(), 0),
        "torus3": torus3_kuhn,
        "t3": torus3_kuhn,
    }
    if resolve_file(spec) is None and spec.lower() in named:
        return named[spec.lower()](), f"builtin:{spec.lower()}"
    data, digest = load_json(spec, "triangulation")
    try:
        return Triangulation3.from_json(data), digest
    except (KeyError, TypeError) as exc:
        raise InputError(f"triangulation file is missing {exc}") from None
    except TriangulationError:
        raise


def load_presentation(spec: str):
    from .sigma.presentation import GroupPresentation, torus3_presentation, trivial_presentation

    named = {"trivial": trivial_presentation, "t3": torus3_presentation, "torus3": torus3_presentation}
    if resolve_file(spec) is None and spec.lower() in named:
        return named[spec.lower()](), f"builtin:{spec.lower()}"
    data, digest = load_json(spec, "presentation")
    return GroupPresentation.from_json(data), digest


# cocycles X -> BG


def cocycle_from_json(data: dict, G: FiniteGroup) -> GroupoidFunctor:
    """``{"base": "point" | "BG" | {"codiscrete": n}, "images": [...]}``.

    ``images`` lists the group element for each morphism of the base in its
    standard order (``BG``: the elements; codiscrete: pairs ``(a, b)`` in
    row-major order).  Omitted images mean the trivial cocycle.
    """
    base = data.get("base", "point")
    BG = delooping(G)
    if base == "point":
        X: FiniteGroupoid = point_groupoid()
    elif base == "BG":
        X = BG
    elif isinstance(base, dict) and "codiscrete" in base:
        X = codiscrete_groupoid(int(base["codiscrete"]))
    else:
        raise InputError(f"unknown cocycle base {base!r}")
    images = data.get("images")
    if images is None:
        images = [0] * X.num_morphisms
    if len(images) != X.num_morphisms:
        raise InputError(f"need {X.num_morphisms} images, got {len(images)}")
    from .groupoids.groupoid import GroupoidError

    try:
        return GroupoidFunctor(X, BG, [0] * X.num_objects, [int(g) for g in images])
    except GroupoidError as exc:
        raise InputError(f"cocycle is not a functor: {exc}") from None


def rep_by_name(name: str, G: FiniteGroup):
    from .bundles.principal import regular_rep, sign_rep, trivial_rep

    table = {"trivial": trivial_rep, "sign": sign_rep, "regular": regular_rep}
    if name not in table:
        raise InputError(f"unknown representation {name!r}")
    return table[name](G)


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)
