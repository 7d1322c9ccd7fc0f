"""Command line front end.

Every command prints one JSON report on stdout and a short human summary on
stderr.  Exit codes: 0 holds or success, 1 refuted, 2 input error,
3 inconclusive (budget exhausted or build refused).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional

from . import __version__
from . import assembly, fixtest, fposet, formats, scomplex, zhomology
from .budget import BudgetExceeded, SearchBudget
from .formats import InputError
from .fposet import FinitePoset, PosetError
from .scomplex import ComplexError, SimplicialComplex

EXIT_OK, EXIT_REFUTED, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3
STATUS_EXIT = {fixtest.HOLDS: EXIT_OK, fixtest.REFUTED: EXIT_REFUTED, fixtest.INCONCLUSIVE: EXIT_INCONCLUSIVE}


class Outcome:
    """What a command hands back to ``dispatch``."""

    def __init__(self, result, code: int = EXIT_OK, witnesses=None, stats=None, summary: str = ""):
        self.result = result
        self.code = code
        self.witnesses = witnesses or []
        self.stats = stats or {}
        self.summary = summary


# effort figures: they vary with --jobs and wall time, so they go to stderr only
_VOLATILE = ("seconds", "nodes")


def _plain(obj):
    """JSON-ready copy; fractions become strings, effort keys are dropped."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items() if k not in _VOLATILE}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if hasattr(obj, "to_json"):
        return _plain(obj.to_json())
    return obj


class Context:
    def __init__(self, args):
        self.args = args
        self.inputs: Dict[str, str] = {}
        self.budget = SearchBudget(max_nodes=args.budget, time_limit=args.time_limit)
        self.jobs = args.jobs

    def track(self, path: str) -> str:
        try:
            self.inputs[path] = formats.file_hash(path)
        except OSError:
            pass
        return path

    def complex(self, path: str) -> SimplicialComplex:
        return formats.read_complex(self.track(path))

    def poset(self, path: str) -> FinitePoset:
        return formats.read_poset(self.track(path), repair=getattr(self.args, "repair", False))

    def space(self, path: str):
        return formats.read_space(self.track(path), repair=getattr(self.args, "repair", False))

    def map(self, path: str, source=None, target=None):
        return formats.read_map(self.track(path), source, target)


def _write(path: Optional[str], obj) -> Optional[str]:
    if path:
        formats.write_json(path, obj)
    return path


def _certificate(cert: fixtest.Certificate, prop: str, witness_path: Optional[str], source: str) -> Outcome:
    status = cert.status
    result = {fixtest.HOLDS: prop, fixtest.REFUTED: "refuted", fixtest.INCONCLUSIVE: "inconclusive"}[status]
    witnesses = []
    if status == fixtest.REFUTED and cert.witness is not None:
        witnesses.append(cert.witness)
        if witness_path:
            assign = cert.witness.get("map", cert.witness)
            formats.write_json(witness_path, {"source": source, "target": source, "assign": assign})
    return Outcome(result, STATUS_EXIT[status], witnesses, {"kind": cert.kind, **cert.stats},
                   f"{prop}: {result}")


def _depths(text: Optional[str]) -> Optional[Dict[int, int]]:
    if not text:
        return None
    out = {}
    for part in text.split(","):
        k, _, s = part.partition(":")
        try:
            out[int(k)] = int(s)
        except ValueError:
            raise InputError(f"--depths: expected k:s pairs separated by commas, got {part!r}") from None
    return out


# -- commands --------------------------------------------------------------

def cmd_validate(ctx: Context, a) -> Outcome:
    X = ctx.space(a.file)
    if isinstance(X, FinitePoset):
        _write(a.output, X.to_json())
        if a.dot:
            with open(a.dot, "w", encoding="utf-8") as fh:
                fh.write(X.to_dot())
        res = {"kind": "poset", "points": len(X), "covers": len(X.covers), "height": X.height(),
               "minimal": X.minimal(), "maximal": X.maximal()}
        return Outcome(res, summary=f"valid poset with {len(X)} points")
    pm = scomplex.pseudomanifold_check(X)
    res = {"kind": "complex", "dim": X.dim, "vertices": len(X.vertices), "facets": len(X.facets),
           "f_vector": X.f_vector(), "euler_characteristic": X.euler_characteristic(),
           "pseudomanifold": pm.to_json()}
    _write(a.output, X.to_json())
    return Outcome(res, summary=f"valid {X.dim}-complex, f-vector {X.f_vector()}")


def cmd_subdivide(ctx: Context, a) -> Outcome:
    K = ctx.complex(a.file)
    if a.stellar:
        simplex = a.stellar.split(",")
        if not K.is_simplex(simplex):
            raise InputError(f"--stellar: {simplex} is not a simplex of {a.file}")
        L = scomplex.stellar_subdivide(K, simplex)
    else:
        L = scomplex.iterated_barycentric(K, a.times)
    _write(a.output, L.to_json())
    res = {"vertices": len(L.vertices), "facets": len(L.facets), "f_vector": L.f_vector(),
           "max_degree": list(scomplex.max_degree(L)), "output": a.output}
    return Outcome(res, summary=f"subdivision has {len(L.facets)} facets")


def cmd_face_poset(ctx: Context, a) -> Outcome:
    X = fposet.face_poset(ctx.complex(a.file))
    _write(a.output, X.to_json())
    return Outcome({"points": len(X), "covers": len(X.covers), "output": a.output},
                   summary=f"face poset with {len(X)} points")


def cmd_order_complex(ctx: Context, a) -> Outcome:
    K = fposet.order_complex(ctx.poset(a.file))
    _write(a.output, K.to_json())
    return Outcome({"vertices": len(K.vertices), "facets": len(K.facets), "f_vector": K.f_vector(),
                    "output": a.output}, summary=f"order complex with {len(K.facets)} facets")


def cmd_cylinder(ctx: Context, a) -> Outcome:
    phi = ctx.map(a.map)
    if not isinstance(phi, scomplex.SimplicialMap):
        raise InputError(f"{a.map}: expected a simplicial map")
    order = a.order.split(",") if a.order else None
    try:
        cyl = scomplex.mapping_cylinder(phi, order)
    except ComplexError as e:
        raise InputError(f"--order: {e}") from None
    _write(a.output, cyl.complex.to_json())
    res = {"vertices": len(cyl.complex.vertices), "facets": len(cyl.complex.facets), "order": cyl.order,
           "homology": [H.to_json() for H in zhomology.homology(cyl.complex)], "output": a.output}
    return Outcome(res, summary=f"mapping cylinder with {len(cyl.complex.facets)} facets")


def cmd_nh_cylinder(ctx: Context, a) -> Outcome:
    f = ctx.map(a.map)
    if not isinstance(f, fposet.MonotoneMap):
        raise InputError(f"{a.map}: expected an order-preserving map between posets")
    B, xs, ys = fposet.nh_cylinder(f)
    _write(a.output, B.to_json())
    res = {"points": len(B), "covers": len(B.covers), "source_names": xs, "target_names": ys,
           "output": a.output}
    return Outcome(res, summary=f"non-Hausdorff cylinder with {len(B)} points")


def cmd_homology(ctx: Context, a) -> Outcome:
    X = ctx.space(a.file)
    groups = zhomology.homology(X, reduced=a.reduced, generators=a.with_generators)
    res = {"betti": [H.rank for H in groups], "torsion": [H.torsion for H in groups],
           "groups": [H.to_json() for H in groups]}
    return Outcome(res, summary="H_* = (" + ", ".join(str(H) for H in groups) + ")")


def cmd_lefschetz(ctx: Context, a) -> Outcome:
    X = ctx.space(a.space)
    f = ctx.map(a.map, source=X, target=X)
    value = zhomology.lefschetz(f)
    mats = zhomology.homology_matrices(zhomology._as_simplicial_map(f))
    res = {"lefschetz": value, "matrices": {str(k): M for k, M in mats.items()}}
    if isinstance(f, scomplex.SimplicialMap):
        res["chain_level"] = zhomology.lefschetz_chain_level(f)
    return Outcome(res, summary=f"Lefschetz number {value}")


def _cycle_patterns(m: int, bound: int) -> int:
    # supports of size j with signed coefficients summing in absolute value to <= bound
    return sum(math.comb(m, j) * math.comb(bound, j) * 2 ** j for j in range(1, min(m, bound) + 1))


def cmd_cycles(ctx: Context, a) -> Outcome:
    X = ctx.space(a.file)
    K = zhomology._as_complex(X)
    patterns = _cycle_patterns(len(K.simplices(a.dim)), a.norm_bound)
    if patterns > a.ceiling:
        raise InputError(f"--norm-bound {a.norm_bound}: about {patterns} coefficient patterns "
                         f"exceed the ceiling {a.ceiling}")
    cycles = zhomology.enumerate_cycles(K, a.dim, a.norm_bound, ctx.budget)
    res = {"count": len(cycles), "cycles": [c.to_json() for c in cycles],
           "norms": [c.norm() for c in cycles], "patterns": patterns}
    return Outcome(res, summary=f"{len(cycles)} cycles of norm <= {a.norm_bound}")


def cmd_retraction(ctx: Context, a) -> Outcome:
    K = ctx.complex(a.complex)
    cr = zhomology.cylinder_retraction(K)
    res = {"ordering": cr.ordering, "psi": dict(sorted(cr.psi.assign.items())),
           "cylinder_facets": len(cr.cylinder.complex.facets)}
    code = EXIT_OK
    if a.check_lemma3:
        chk = cr.lemma3_check()
        res["lemma3"] = chk
        code = EXIT_OK if chk["ok"] else EXIT_REFUTED
    return Outcome(res, code, summary="retraction checks " + ("pass" if code == EXIT_OK else "FAIL"))


def cmd_aut(ctx: Context, a) -> Outcome:
    X = ctx.space(a.file)
    auts = fixtest.automorphisms(X, ctx.budget, limit=a.limit)
    fixed = None
    if isinstance(X, SimplicialComplex):
        fixed = [v for v in X.vertices if all(g[v] == v for g in auts)]
    res = {"count": len(auts), "asymmetric": len(auts) == 1, "fixed_by_all": fixed,
           "automorphisms": [dict(sorted(g.items())) for g in auts] if a.list else None}
    return Outcome(res, summary=f"{len(auts)} automorphisms")


def cmd_asymmetrize(ctx: Context, a) -> Outcome:
    M = ctx.complex(a.file)
    try:
        out = fixtest.asymmetrize(M, max_passes=a.max_passes, budget=ctx.budget)
    except fixtest.AsymmetrizeError as e:
        raise InputError(f"{a.file}: {e}") from None
    _write(a.output, out.complex.to_json())
    res = {"v0": out.v0, "vertices": len(out.complex.vertices), "facets": len(out.complex.facets),
           "output": a.output}
    if a.certify:
        res["certificate"] = out.certificate
    return Outcome(res, summary=f"asymmetric after {out.certificate['passes']} passes, v0 = {out.v0}")


def cmd_fsp(ctx: Context, a) -> Outcome:
    K = ctx.complex(a.file)
    cert = fixtest.fsp_check(K, ctx.budget, ctx.jobs)
    if cert.status == fixtest.INCONCLUSIVE and a.v0:
        cert = fixtest.decomposition_check(K, a.v0, ctx.budget)
    return _certificate(cert, "FSP", a.witness, a.file)


def cmd_fpp(ctx: Context, a) -> Outcome:
    X = ctx.poset(a.file)
    cert = fixtest.fpp_check(X, ctx.budget, ctx.jobs)
    return _certificate(cert, "FPP", a.witness, a.file)


def cmd_kun(ctx: Context, a) -> Outcome:
    if a.action == "build":
        res = assembly.build_kun(ctx.budget)
        _write(a.output, res.space.to_json())
        ok = res.report["verify"]["ok"]
        return Outcome({"points": len(res.space), **res.report, "output": a.output},
                       EXIT_OK if ok else EXIT_REFUTED, summary="Kun space built and verified")
    if not a.file:
        raise InputError("kun verify: a poset file is required")
    X = ctx.poset(a.file)
    missing = [p for p in assembly.KUN_NAMES if p not in X]
    if missing:
        raise InputError(f"{a.file}: points: missing the named points {missing}")
    rep = assembly.verify_kun(X, budget=ctx.budget)
    failed = [k for k, v in rep["checks"].items() if not v.get("ok")]
    return Outcome(rep, EXIT_OK if rep["ok"] else EXIT_REFUTED,
                   summary="all six checks pass" if rep["ok"] else f"failed: {failed}")


def _load_assembly_inputs(ctx: Context, a):
    K = ctx.complex(a.complex)
    reals = formats.read_realizations(ctx.track(a.realizations), K)
    return K, reals


def _plan(K, reals, a, theorem: str):
    mode = "explicit" if a.mode == "toy" else "bound"
    depths = _depths(a.depths)
    if mode == "explicit" and depths is None:
        raise InputError("--mode toy needs --depths")
    try:
        return assembly.plan_depths(K, reals, mode, depths, theorem=theorem, multiplier=a.multiplier,
                                    ceiling=a.ceiling)
    except assembly.AssemblyError as e:
        raise InputError(str(e)) from None


def _refused(e: assembly.BuildRefused) -> Outcome:
    return Outcome("refused", EXIT_INCONCLUSIVE, stats={"plan": e.plan.to_json()},
                   summary=f"build refused: forecast {e.plan.forecast['facets']} facets "
                           f"exceeds the ceiling {e.plan.ceiling}")


def cmd_thm4(ctx: Context, a) -> Outcome:
    K, reals = _load_assembly_inputs(ctx, a)
    plan = _plan(K, reals, a, "thm4")
    if a.action == "plan":
        return Outcome(plan.to_json(), summary=f"depths {plan.s}, forecast {plan.forecast['facets']} facets, "
                                              f"feasible {plan.feasible}")
    try:
        out = assembly.assemble_thm4(K, reals, plan=plan, ceiling=a.ceiling,
                                     fsp_budget=ctx.budget if a.check_fsp else None)
    except assembly.BuildRefused as e:
        return _refused(e)
    except assembly.AssemblyError as e:
        raise InputError(str(e)) from None
    _write(a.output, out.space.to_json())
    if a.log:
        formats.write_json(a.log, _plain({**out.to_json(), "subobject_names": out.subobjects}))
    return Outcome(out.to_json(), summary=f"L built in {out.log['mode']} mode with {out.log['facets']} facets")


def cmd_main_thm(ctx: Context, a) -> Outcome:
    K, reals = _load_assembly_inputs(ctx, a)
    plan = _plan(K, reals, a, "main")
    if a.action == "plan":
        return Outcome(plan.to_json(), summary=f"depths {plan.s}, feasible {plan.feasible}")
    try:
        out = assembly.assemble_main(K, reals, plan=plan, ceiling=a.ceiling,
                                     fpp_budget=ctx.budget if a.check_fpp else None)
    except assembly.BuildRefused as e:
        return _refused(e)
    except assembly.AssemblyError as e:
        raise InputError(str(e)) from None
    _write(a.output, out.space.to_json())
    if a.log:
        formats.write_json(a.log, _plain({**out.to_json(), "subobject_names": out.subobjects}))
    code = EXIT_OK
    if out.checks.get("fpp") == "inconclusive":
        code = EXIT_INCONCLUSIVE
    elif out.checks.get("fpp") == "refuted":
        code = EXIT_REFUTED
    return Outcome(out.to_json(), code, summary=f"X built in {out.log['mode']} mode with {out.log['points']} points")


def cmd_core(ctx: Context, a) -> Outcome:
    X = ctx.poset(a.file)
    C = fposet.core(X)
    _write(a.output, C.to_json())
    verdict = "contractible" if len(C) == 1 else "not contractible by dismantling"
    return Outcome({"points": len(C), "removed": len(X) - len(C), "core": list(C.points),
                    "contractibility": verdict, "output": a.output},
                   summary=f"core has {len(C)} of {len(X)} points")


def cmd_weak_points(ctx: Context, a) -> Outcome:
    X = ctx.poset(a.file)
    weak = fposet.weak_points(X)
    beat = fposet.beat_points(X)
    return Outcome({"weak_points": weak, "beat_points": beat}, summary=f"{len(weak)} weak points")


# -- parser ----------------------------------------------------------------

class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="finfpp", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"finfpp {__version__}")
    p.add_argument("--budget", type=int, default=50_000_000, help="node budget for exhaustive searches")
    p.add_argument("--time-limit", type=float, default=None, help="seconds before a search gives up")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (results do not depend on it)")
    p.add_argument("--seedless", action="store_true",
                   help="assert that no randomness is used (every command is deterministic)")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        return sp

    sp = cmd("validate", cmd_validate, help="check a complex or poset file")
    sp.add_argument("file")
    sp.add_argument("--repair", action="store_true", help="drop covers implied by transitivity")
    sp.add_argument("-o", "--output", help="write the canonical form")
    sp.add_argument("--dot", help="write a DOT Hasse diagram (posets)")

    sp = cmd("subdivide", cmd_subdivide, help="barycentric or stellar subdivision")
    sp.add_argument("file")
    sp.add_argument("--times", type=int, default=1)
    sp.add_argument("--stellar", help="comma-separated simplex to star instead")
    sp.add_argument("-o", "--output")

    sp = cmd("face-poset", cmd_face_poset, help="X(K)")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")

    sp = cmd("order-complex", cmd_order_complex, help="K(X)")
    sp.add_argument("file")
    sp.add_argument("--repair", action="store_true")
    sp.add_argument("-o", "--output")

    sp = cmd("cylinder", cmd_cylinder, help="simplicial mapping cylinder of a map file")
    sp.add_argument("--map", required=True)
    sp.add_argument("--order", help="comma-separated total order of the source vertices")
    sp.add_argument("-o", "--output")

    sp = cmd("nh-cylinder", cmd_nh_cylinder, help="non-Hausdorff mapping cylinder")
    sp.add_argument("--map", required=True)
    sp.add_argument("-o", "--output")

    sp = cmd("homology", cmd_homology, help="integral homology")
    sp.add_argument("file")
    sp.add_argument("--reduced", action="store_true")
    sp.add_argument("--with-generators", action="store_true")
    sp.add_argument("--repair", action="store_true")

    sp = cmd("lefschetz", cmd_lefschetz, help="Lefschetz number of a self-map")
    sp.add_argument("--space", required=True)
    sp.add_argument("--map", required=True)

    sp = cmd("cycles", cmd_cycles, help="all k-cycles up to a norm bound")
    sp.add_argument("file")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--norm-bound", type=int, required=True)
    sp.add_argument("--ceiling", type=int, default=10 ** 9)

    sp = cmd("retraction", cmd_retraction, help="ordering, approximation and cylinder retraction")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--check-lemma3", action="store_true", help="check the norm bounds on every simplex")

    sp = cmd("aut", cmd_aut, help="automorphism group")
    sp.add_argument("file")
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--list", action="store_true", help="include every automorphism")

    sp = cmd("asymmetrize", cmd_asymmetrize, help="subdivide until no nontrivial automorphism remains")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp.add_argument("--certify", action="store_true", help="include the certificate in the report")
    sp.add_argument("--max-passes", type=int, default=10)

    sp = cmd("fsp", cmd_fsp, help="fixed simplex property")
    sp.add_argument("file")
    sp.add_argument("--witness", nargs="?", const="", default=None, help="also write the witness map here")
    sp.add_argument("--v0", help="fall back to the Lefschetz decomposition around this vertex")

    sp = cmd("fpp", cmd_fpp, help="fixed point property of a finite poset")
    sp.add_argument("file")
    sp.add_argument("--witness", nargs="?", const="", default=None, help="also write the witness map here")
    sp.add_argument("--repair", action="store_true")

    sp = cmd("kun", cmd_kun, help="build or verify the 14-point space")
    sp.add_argument("action", choices=["build", "verify"])
    sp.add_argument("file", nargs="?")
    sp.add_argument("-o", "--output")

    for name, fn in (("thm4", cmd_thm4), ("main-thm", cmd_main_thm)):
        sp = cmd(name, fn, help="assembly pipeline: plan depths or build")
        sp.add_argument("action", choices=["plan", "build"])
        sp.add_argument("--complex", required=True)
        sp.add_argument("--realizations", required=True)
        sp.add_argument("--mode", choices=["bound", "toy"], default="bound")
        sp.add_argument("--depths", help="explicit depths k:s,... (toy mode)")
        sp.add_argument("--multiplier", type=int, default=None)
        sp.add_argument("--ceiling", type=int, default=assembly.DEFAULT_CEILING)
        sp.add_argument("-o", "--output")
        sp.add_argument("--log", help="write the full build log here")
        if name == "thm4":
            sp.add_argument("--check-fsp", action="store_true", help="run the FSP search on L")
        else:
            sp.add_argument("--check-fpp", action="store_true", help="run the FPP search on X")

    sp = cmd("core", cmd_core, help="core by beat point removal")
    sp.add_argument("file")
    sp.add_argument("--repair", action="store_true")
    sp.add_argument("-o", "--output")

    sp = cmd("weak-points", cmd_weak_points, help="weak and beat points")
    sp.add_argument("file")
    sp.add_argument("--repair", action="store_true")
    return p


def dispatch(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    except UsageError as e:
        report = {"command": None, "version": __version__, "inputs": {}, "result": "input error",
                  "witnesses": [], "stats": {"error": str(e)}, "exit_code": EXIT_INPUT}
        stdout.write(json.dumps(report, sort_keys=True, ensure_ascii=False) + "\n")
        parser.print_usage(stderr)
        stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    report = {"command": args.command, "version": __version__, "inputs": {}, "result": None,
              "witnesses": [], "stats": {}}
    t0 = time.monotonic()
    try:
        ctx = Context(args)
    except ValueError as e:
        report.update(result="input error", stats={"error": str(e)}, exit_code=EXIT_INPUT)
        stdout.write(json.dumps(report, sort_keys=True, ensure_ascii=False) + "\n")
        stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    try:
        out = args.fn(ctx, args)
    except (InputError, ComplexError, PosetError) as e:
        out = Outcome("input error", EXIT_INPUT, stats={"error": str(e)}, summary=f"error: {e}")
    except BudgetExceeded as e:
        out = Outcome("inconclusive", EXIT_INCONCLUSIVE, stats={"nodes": e.nodes, "reason": str(e)},
                      summary=f"inconclusive: {e}")
    except OSError as e:
        out = Outcome("input error", EXIT_INPUT, stats={"error": str(e)}, summary=f"error: {e}")
    report["inputs"] = dict(sorted(ctx.inputs.items()))
    report["result"] = _plain(out.result)
    report["witnesses"] = _plain(out.witnesses)
    report["stats"] = _plain(out.stats)
    report["exit_code"] = out.code
    if args.seedless:
        report["seedless"] = True
    stdout.write(json.dumps(report, sort_keys=True, ensure_ascii=False) + "\n")
    nodes = out.stats.get("nodes") if isinstance(out.stats, dict) else None
    effort = f"{nodes} nodes, " if nodes is not None else ""
    stderr.write(f"{args.command}: {out.summary} ({effort}{time.monotonic() - t0:.2f}s)\n")
    return out.code


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
