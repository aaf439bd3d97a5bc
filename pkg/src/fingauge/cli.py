"""Command-line front end.  Every subcommand parses and validates all of its
inputs first, then calls one library routine and prints JSON."""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction

from . import __version__
from . import io as fio
from .arith.cyclotomic import Cyclotomic
from .bundles.category import CategoryError, FiniteCategory, category_from_group, category_from_monoid
from .bundles.twisted import TwistedBundleError
from .cohomology.cochains import CocycleError
from .double.algebra import NonAssociativeError
from .double.reps import RepShapeError, TwistedFusionError
from .groupoids.group import GroupError
from .groupoids.groupoid import GroupoidError
from .groupoids.mapping import DEFAULT_CAP, SizeGuardError
from .sigma.presentation import PresentationError
from .sigma.triangulation import TriangulationError

EXIT_OK, EXIT_VALIDATION, EXIT_SIZE, EXIT_PRECONDITION = 0, 2, 3, 4

CONVENTIONS = {"composite": "g then h = hg", "normalization": "|G|^-v", "pushforward": "plain fiber sums"}


class Precondition(Exception):
    """A mathematical precondition failed (exit code 4)."""


def _frac(x: Fraction, with_float: bool) -> dict | str:
    if with_float:
        return {"exact": str(x), "float": float(x)}
    return str(x)


def _cyc(c: Cyclotomic, with_float: bool) -> dict:
    return fio.cyclotomic_json(c, with_float)


def _values(vs, with_float: bool) -> list:
    return [str(v) if not with_float else _cyc(v, True) for v in vs]


def _int_list(text: str) -> list[int]:
    try:
        return [int(a) for a in text.split(",") if a.strip()]
    except ValueError:
        raise fio.InputError(f"expected a comma-separated list of integers, got {text!r}") from None


def _num_list(text: str) -> list:
    out = []
    for a in text.split(","):
        a = a.strip()
        if not a:
            continue
        try:
            out.append(Fraction(a))
        except ValueError:
            raise fio.InputError(f"bad number {a!r}") from None
    return out


class Run:
    """Inputs consumed by a command, recorded for the manifest."""

    def __init__(self):
        self.inputs: dict[str, str] = {}

    def group(self, spec):
        if spec is None:
            raise fio.InputError("--group is required")
        G, d = fio.load_group(spec)
        self.inputs["group"] = d
        return G


# cocycle / homology / transgress


def cmd_cocycle_cyclic(args, run):
    from .cohomology.cochains import cyclic_three_cocycle

    if not 0 <= args.p < args.n:
        raise fio.InputError("need 0 <= p < n")
    return cyclic_three_cocycle(args.n, args.p).to_json()


def cmd_cocycle_check(args, run):
    from .cohomology.cochains import is_cocycle, is_three_cocycle

    G = run.group(args.group) if args.group else None
    alpha, d = fio.load_cochain(args.cochain, G)
    run.inputs["cochain"] = d
    ok = is_three_cocycle(alpha) if alpha.degree == 3 else is_cocycle(alpha)
    return {"cocycle": ok}


def cmd_cocycle_solve(args, run):
    from .cohomology.bar import solve_cocycles

    G = run.group(args.group)
    M = args.modulus or G.order**2
    if (G.order - 1) ** (args.degree + 1) > args.cap:
        raise SizeGuardError(f"bar complex of {G.name} in degree {args.degree} exceeds cap {args.cap}")
    sol = solve_cocycles(G, args.degree, M)
    return {
        "group": G.name,
        "degree": args.degree,
        "modulus": M,
        "num_cocycles": sol.num_cocycles,
        "num_classes": sol.num_classes,
        "class_invariants": list(sol.class_invariants),
        "homology_order": sol.homology_order,
        "representatives": [r.to_json()["values"] for r in sol.representatives],
    }


def cmd_homology(args, run):
    from .cohomology.bar import group_homology

    G = run.group(args.group)
    facs = group_homology(G, args.degree)
    out = {"group": G.name, "degree": args.degree, "homology": facs}
    if 0 not in facs:
        order = 1
        for f in facs:
            order *= f
        out["cohomology_qz_order"] = order
    return out


def cmd_transgress(args, run):
    from .cohomology.loop import is_loop_two_cocycle
    from .double.transgression import transgress

    G = run.group(args.group) if args.group else None
    alpha, d = fio.load_cochain(args.cochain, G)
    run.inputs["cochain"] = d
    try:
        tw = transgress(alpha)
    except CocycleError as exc:
        raise Precondition(str(exc)) from None
    return {"twist": tw.to_json(), "loop_cocycle": is_loop_two_cocycle(tw)}


# double


def _twist(args, run, G):
    from .double.transgression import transgress

    if getattr(args, "cochain", None):
        alpha, d = fio.load_cochain(args.cochain, G)
        run.inputs["cochain"] = d
        try:
            return transgress(alpha)
        except CocycleError as exc:
            raise Precondition(str(exc)) from None
    tw, d = fio.load_twist(args.twist, G)
    run.inputs["twist"] = d
    return tw


def cmd_double_build(args, run):
    from .double.algebra import build_twisted_algebra, check_associativity

    G = run.group(args.group)
    A = build_twisted_algebra(G, _twist(args, run, G))
    prods = [[i, j, k, str(p)] for (i, j), (k, p) in sorted(A.table.items())]
    return {"dimension": A.dim, "associative": check_associativity(A), "basis": [list(b) for b in A.labels],
            "products": prods}


def cmd_double_center(args, run):
    from .double.algebra import build_twisted_algebra, center_dimension

    G = run.group(args.group)
    A = build_twisted_algebra(G, _twist(args, run, G))
    try:
        return {"dimension": center_dimension(A)}
    except NonAssociativeError as exc:
        raise Precondition(str(exc)) from None


def _reps(args, run, G, count):
    reps = args.rep or []
    if len(reps) != count:
        raise fio.InputError(f"need exactly {count} --rep file(s)")
    out = []
    for k, spec in enumerate(reps):
        data, d = fio.load_json(spec, "rep")
        run.inputs[f"rep{k}"] = d
        out.append(fio.loop_rep_from_json(data, G))
    return out


def cmd_double_rep_check(args, run):
    from .double.reps import is_twisted_rep

    G = run.group(args.group)
    tw = _twist(args, run, G)
    (sigma,) = _reps(args, run, G, 1)
    return {"twisted_rep": is_twisted_rep(sigma, tw)}


def cmd_double_fuse(args, run):
    from .double.reps import fuse, is_twisted_rep

    G = run.group(args.group)
    tw = _twist(args, run, G)
    a, b = _reps(args, run, G, 2)
    if not (is_twisted_rep(a, tw) and is_twisted_rep(b, tw)):
        raise Precondition("inputs are not representations of the double")
    try:
        f = fuse(a, b, tw)
    except TwistedFusionError as exc:
        raise Precondition(str(exc)) from None
    return {"dims": list(f.dims), "rep": f.to_json()}


# bundles


def _cocycle(args, run, G):
    spec = args.cocycle or "point"
    if spec in ("point", "BG", "trivial-BG"):
        run.inputs["cocycle"] = f"builtin:{spec}"
        if spec == "point":
            data = {"base": "point"}
        elif spec == "BG":
            data = {"base": "BG", "images": list(range(G.order))}
        else:
            data = {"base": "BG"}
        return fio.cocycle_from_json(data, G)
    data, d = fio.load_json(spec, "cocycle")
    run.inputs["cocycle"] = d
    return fio.cocycle_from_json(data, G)


def cmd_bundle_principal(args, run):
    from .bundles.principal import fiber_audit, principal_bundle

    G = run.group(args.group)
    g = _cocycle(args, run, G)
    P, pi = principal_bundle(g, G)
    return {
        "objects": P.num_objects,
        "morphisms": P.num_morphisms,
        "components": len(P.components),
        "fiber_audit": fiber_audit(P, pi, G.order),
        "projection": list(pi.obj_map),
    }


def cmd_bundle_sections(args, run):
    from .bundles.principal import sections

    G = run.group(args.group)
    g = _cocycle(args, run, G)
    rho = fio.rep_by_name(args.rho, G)
    dim, basis = sections(g, rho)
    return {"dimension": dim, "basis": [[[str(c) for c in v] for v in vec] for vec in basis]}


def cmd_bundle_twisted_check(args, run):
    from .bundles.twisted import CechGerbe, check_twisted_bundle, twisted_bundle_from_json

    if not args.cover or not args.bundle:
        raise fio.InputError("--cover and --bundle are required")
    cdata, d1 = fio.load_json(args.cover, "cover")
    bdata, d2 = fio.load_json(args.bundle, "twisted bundle")
    run.inputs.update(cover=d1, bundle=d2)
    try:
        cover = CechGerbe.from_json(cdata)
        tw = twisted_bundle_from_json(bdata)
    except (KeyError, TypeError) as exc:
        raise fio.InputError(f"malformed cover or bundle: {exc}") from None
    return {"gerbe_cocycle": cover.is_cocycle(), "twisted_bundle": check_twisted_bundle(cover, tw)}


# bibranes


def _category(args, run) -> FiniteCategory:
    if args.category:
        data, d = fio.load_json(args.category, "category")
        run.inputs["category"] = d
        try:
            if "table" in data:
                return category_from_monoid(data["table"])
            return FiniteCategory(
                int(data["objects"]), data["src"], data["tgt"], {(f, g): h for f, g, h in data["comp"]},
                data["identities"],
            )
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise fio.InputError(f"malformed category: {exc}") from None
    return category_from_group(run.group(args.group))


def cmd_bibrane_fuse(args, run):
    from .bundles.bibranes import Bibrane, bibrane_fuse
    from .groupoids.groupoid import delooping, point_inclusion, universal_bundle

    G = run.group(args.group)
    BG = delooping(G)

    def span(kind, values):
        if kind == "EG":
            _, p = universal_bundle(G, BG=BG)
            return Bibrane(p, p, values)
        if kind == "point":
            i = point_inclusion(BG)
            return Bibrane(i, i, values)
        raise fio.InputError(f"unknown span {kind!r}")

    left = _num_list(args.left)
    right = _num_list(args.right)
    try:
        V, W = span(args.span, left), span(args.span, right)
    except GroupoidError as exc:
        raise fio.InputError(str(exc)) from None
    F = bibrane_fuse(V, W)
    return {"objects": [list(o) for o in F.correspondence.objects], "values": _values(F.values, args.float)}


def cmd_bibrane_monoid(args, run):
    from .bundles.bibranes import bibrane_monoid_product

    C = _category(args, run)
    V, W = _num_list(args.left), _num_list(args.right)
    if len(V) != C.num_morphisms or len(W) != C.num_morphisms:
        raise fio.InputError(f"need {C.num_morphisms} values per side")
    return {"values": _values(bibrane_monoid_product(C, V, W, weighted=args.weighted), args.float)}


def cmd_bibrane_catalg(args, run):
    from .bundles.category import category_algebra

    C = _category(args, run)
    A = category_algebra(C)
    return {
        "dimension": A.dim,
        "products": [[f, g, h] for (f, g), h in sorted(A.table.items())],
        "associative": A.is_associative(),
    }


# sigma model


def cmd_dw_statesum(args, run):
    from .sigma.statesum import NORMALIZATION, count_flat_colorings, dw_state_sum

    G = run.group(args.group)
    M, d = fio.load_manifold(args.manifold)
    run.inputs["manifold"] = d
    alpha, d = fio.load_cochain(args.cochain or "zero", G)
    run.inputs["cochain"] = d
    M.audit()
    try:
        z = dw_state_sum(M, G, alpha, workers=args.workers, cap=args.cap)
    except CocycleError as exc:
        raise Precondition(str(exc)) from None
    out = {
        "value": str(z),
        "cyclotomic": _cyc(z, args.float),
        "normalization": NORMALIZATION,
        "flat_colorings": count_flat_colorings(M, G, cap=args.cap),
    }
    return out


def cmd_dw_homs(args, run):
    from .sigma.presentation import count_homs

    G = run.group(args.group)
    P, d = fio.load_presentation(args.presentation)
    run.inputs["presentation"] = d
    n = count_homs(P, G, cap=args.cap)
    return {"count": n, "normalized": _frac(Fraction(n, G.order), args.float)}


def cmd_propagate(args, run):
    from .sigma.propagate import Connection, propagate

    if not args.graph:
        raise fio.InputError("--graph is required")
    data, d = fio.load_json(args.graph, "graph")
    run.inputs["graph"] = d
    try:
        conn = Connection.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise fio.InputError(f"malformed graph: {exc}") from None
    psi = _num_list(args.state) if args.state else [1] + [0] * (conn.vertices - 1)
    if len(psi) != conn.vertices:
        raise fio.InputError("state has the wrong length")
    return {"state": _values(propagate(conn, psi, args.steps), args.float)}


# groupoids


def cmd_groupoid_card(args, run):
    from .groupoids.groupoid import delooping, groupoid_cardinality, loop_groupoid, universal_bundle

    G = run.group(args.group)
    X = {"B": lambda: delooping(G), "E": lambda: universal_bundle(G)[0], "L": lambda: loop_groupoid(G)}[args.which]()
    return {"groupoid": f"{args.which}{G.name}", "cardinality": _frac(groupoid_cardinality(X), args.float)}


def _summary(X, with_float):
    from .groupoids.groupoid import groupoid_cardinality

    return {
        "objects": X.num_objects,
        "morphisms": X.num_morphisms,
        "components": len(X.components),
        "cardinality": _frac(groupoid_cardinality(X), with_float),
    }


def cmd_groupoid_loop(args, run):
    from .groupoids.groupoid import loop_groupoid

    return _summary(loop_groupoid(run.group(args.group)), args.float)


def cmd_groupoid_hom(args, run):
    from .groupoids.groupoid import delooping
    from .groupoids.mapping import loop_shape, mapping_groupoid
    from .sigma.mapping import POINT

    G = run.group(args.group)
    if args.shape == "point":
        shape = POINT
    elif args.shape == "loop":
        shape = loop_shape()
    else:
        H, d = fio.load_group(args.shape)
        run.inputs["shape"] = d
        shape = delooping(H)
    return _summary(mapping_groupoid(shape, delooping(G), args.cap), args.float)


# parser


class JsonArgumentParser(argparse.ArgumentParser):
    """Usage errors are reported as JSON on stdout with exit status 2."""

    def error(self, message):
        print(fio.dump(_error("usage", Exception(message))))
        raise SystemExit(EXIT_VALIDATION)


def build_parser() -> argparse.ArgumentParser:
    common = JsonArgumentParser(add_help=False)
    common.add_argument("--group", help="builtin name (Z2, S3, ...) or group JSON file")
    common.add_argument("--cochain", "--alpha", dest="cochain", help="zero, cyclic[:p], a cochain file, or - for stdin")
    common.add_argument("--twist", help="zero or a loop 2-cochain file")
    common.add_argument("--modulus", type=int, help="cocycle value modulus M (default |G|^2)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration size guard")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--float", action="store_true", help="add float renderings")
    common.add_argument("--manifest", help="write a run manifest to this path")

    p = JsonArgumentParser(prog="fingauge", description="Finite gauge theory computations.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(parent, name, fn, **kw):
        sp = parent.add_parser(name, parents=[common], **kw)
        sp.set_defaults(fn=fn)
        return sp

    coc = sub.add_parser("cocycle").add_subparsers(dest="action", required=True)
    sp = add(coc, "cyclic", cmd_cocycle_cyclic)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, default=1)
    add(coc, "check", cmd_cocycle_check)
    sp = add(coc, "solve", cmd_cocycle_solve)
    sp.add_argument("--degree", type=int, default=3)

    sp = add(sub, "homology", cmd_homology)
    sp.add_argument("--degree", type=int, default=3)
    add(sub, "transgress", cmd_transgress)

    dbl = sub.add_parser("double").add_subparsers(dest="action", required=True)
    add(dbl, "build", cmd_double_build)
    add(dbl, "center", cmd_double_center)
    for name, fn in (("rep-check", cmd_double_rep_check), ("fuse", cmd_double_fuse)):
        add(dbl, name, fn).add_argument("--rep", action="append", help="rep JSON file (repeat for fuse)")

    bun = sub.add_parser("bundle").add_subparsers(dest="action", required=True)
    add(bun, "principal", cmd_bundle_principal).add_argument("--cocycle", help="point, BG, trivial-BG or a file")
    sp = add(bun, "sections", cmd_bundle_sections)
    sp.add_argument("--cocycle", help="point, BG, trivial-BG or a file")
    sp.add_argument("--rho", default="trivial", choices=["trivial", "sign", "regular"])
    sp = add(bun, "twisted-check", cmd_bundle_twisted_check)
    sp.add_argument("--cover")
    sp.add_argument("--bundle")

    bib = sub.add_parser("bibrane").add_subparsers(dest="action", required=True)
    sp = add(bib, "fuse", cmd_bibrane_fuse)
    sp.add_argument("--span", default="EG", choices=["EG", "point"])
    sp.add_argument("--left", required=True, help="comma-separated values")
    sp.add_argument("--right", required=True, help="comma-separated values")
    sp = add(bib, "monoid", cmd_bibrane_monoid)
    sp.add_argument("--category", help="category or monoid JSON (default: BG of --group)")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--weighted", action="store_true", help="weight fibers by groupoid cardinality")
    add(bib, "catalg", cmd_bibrane_catalg).add_argument("--category")

    dw = sub.add_parser("dw").add_subparsers(dest="action", required=True)
    add(dw, "statesum", cmd_dw_statesum).add_argument("--manifold", required=True)
    add(dw, "homs", cmd_dw_homs).add_argument("--presentation", required=True)

    sp = add(sub, "propagate", cmd_propagate)
    sp.add_argument("--graph")
    sp.add_argument("--state", help="comma-separated initial values (default delta at 0)")
    sp.add_argument("--steps", type=int, default=1)

    grp = sub.add_parser("groupoid").add_subparsers(dest="action", required=True)
    add(grp, "card", cmd_groupoid_card).add_argument("--which", choices=["B", "E", "L"], default="B")
    add(grp, "loop", cmd_groupoid_loop)
    add(grp, "hom", cmd_groupoid_hom).add_argument("--shape", default="loop", help="point, loop or a group (maps out of BH)")
    return p


def _error(kind: str, exc: Exception) -> dict:
    return {"error": {"type": kind, "message": str(exc)}}


def _manifest(args, argv, run: Run, text: str, status: int) -> dict:
    conv = dict(CONVENTIONS)
    if getattr(args, "modulus", None):
        conv["modulus"] = args.modulus
    return {
        "argv": list(argv),
        "command": " ".join(a for a in (args.command, getattr(args, "action", None)) if a),
        "tool_version": __version__,
        "inputs": dict(sorted(run.inputs.items())),
        "conventions": conv,
        "exit_status": status,
        "output_sha256": hashlib.sha256(text.encode()).hexdigest(),
        "output": json.loads(text),
    }


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    run = Run()
    try:
        result = args.fn(args, run)
        status = EXIT_OK
    except Precondition as exc:
        result, status = _error("precondition", exc), EXIT_PRECONDITION
    except (CocycleError, NonAssociativeError, TwistedFusionError) as exc:
        result, status = _error("precondition", exc), EXIT_PRECONDITION
    except SizeGuardError as exc:
        result, status = _error("size_guard", exc), EXIT_SIZE
    except (fio.InputError, GroupError, GroupoidError, TriangulationError, PresentationError, TwistedBundleError,
            CategoryError, RepShapeError, KeyError, ValueError) as exc:
        result, status = _error("validation", exc), EXIT_VALIDATION
    text = fio.dump(result)
    print(text)
    if getattr(args, "manifest", None):
        with open(args.manifest, "w") as fh:
            fh.write(fio.dump(_manifest(args, argv, run, text, status)) + "\n")
    return status


if __name__ == "__main__":
    raise SystemExit(main())
