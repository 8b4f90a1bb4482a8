"""Command-line front end.

Every subcommand loads a scenario (or a catalogue entry), runs one pipeline
and prints a deterministic report. Exit codes: 0 success, 2 invariant
violation, 3 bad input or unmet precondition.
"""

import argparse
import json
import sys

from .alignment import alignment_dichotomy
from .colimits import colimit_report, strictness_verdict
from .entries import ENTRIES, run_entry
from .errors import InputError, InvariantViolation, NoRoom, OrbitLimError
from .grading import OnePS, ell_bar_for, grade_vec, leading_term, tangent_of_approach
from .forms import rep_from_json
from .normal_cone import FullGL, membership_Jk
from .serialize import dumps, form_from_json, to_jsonable, vector_from_json
from .stabilizers import full_report, orbit_tangent, stabilizer_algebra
from .strata import face_of, face_restrict, intermediate_face, support, support_dim

EXIT_OK, EXIT_INVARIANT, EXIT_INPUT = 0, 2, 3


class Scenario:
    """A parsed scenario file: rep, named vectors, named 1-PS, params, functions."""

    def __init__(self, doc):
        if not isinstance(doc, dict) or "rep" not in doc:
            raise InputError("scenario needs a 'rep' section")
        self.rep = rep_from_json(doc["rep"])
        self.vectors = {k: vector_from_json(self.rep, v) for k, v in doc.get("vectors", {}).items()}
        self.onps = {k: OnePS(v) for k, v in doc.get("onps", {}).items()}
        for name, w in self.onps.items():
            if len(w) != self.rep.n:
                raise InputError(f"1-PS {name!r} has {len(w)} weights, expected {self.rep.n}")
        self.params = doc.get("params", {})
        self.functions = {
            k: form_from_json(v, self.rep.ambient_dim) for k, v in doc.get("functions", {}).items()
        }

    @classmethod
    def load(cls, path):
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read scenario {path}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"scenario {path} is not valid JSON: {exc}") from exc
        return cls(doc)

    def _lookup(self, table, name, what):
        if name is None:
            if len(table) == 1:
                return next(iter(table.values()))
            raise InputError(f"specify which {what} to use")
        if name not in table:
            raise InputError(f"unknown {what} {name!r}")
        return table[name]

    def vector(self, name):
        return self._lookup(self.vectors, name, "vector")

    def onps_(self, name):
        return self._lookup(self.onps, name, "1-PS")

    def function(self, name):
        return self._lookup(self.functions, name, "function")

    def param(self, key, default=None):
        return self.params.get(key, default)


def cmd_stab(sc, args):
    v = sc.vector(args.vector)
    K = stabilizer_algebra(sc.rep, v)
    T = orbit_tangent(sc.rep, v)
    return {"command": "stab", "stabilizer": K, "tangent_dim": T.dim}


def cmd_limit(sc, args):
    v = sc.vector(args.vector)
    gv = grade_vec(sc.rep, sc.onps_(args.onps), v)
    d, z = leading_term(gv)
    tan = tangent_of_approach(gv)
    return {
        "command": "limit",
        "d": d,
        "z": z,
        "e": tan[0] if tan else None,
        "y_e": tan[1] if tan else None,
        "components": {str(k): c for k, c in gv.components.items()},
    }


def cmd_hatk(sc, args):
    rpt = full_report(sc.rep, sc.vector(args.vector), sc.onps_(args.onps))
    return {
        "command": "hatk",
        "d": rpt.d,
        "z": rpt.z,
        "e": rpt.e,
        "y_e": rpt.y_e,
        "dims": rpt.dims,
        "K": rpt.K,
        "H": rpt.H,
        "Hye": rpt.Hye,
        "Khat": rpt.Khat,
        "checks": rpt.checks,
    }


def cmd_align(sc, args):
    res = alignment_dichotomy(
        sc.rep, sc.vector(args.vector), sc.onps_(args.onps), seed=args.seed, max_samples=args.samples
    )
    return {"command": "align", "result": res}


def cmd_nc_test(sc, args):
    z = sc.vector(args.vector)
    ye = sc.vector(args.direction)
    f = sc.function(args.function)
    k = int(args.k if args.k is not None else sc.param("k", 1))
    res = membership_Jk(sc.rep, f, k, z, ye, FullGL(sc.rep.n), n_samples=args.samples, seed=args.seed)
    return {"command": "nc-test", "k": k, "result": res}


def cmd_strata(sc, args):
    y = sc.vector(args.vector)
    w = sc.onps_(args.onps)
    cs = support(sc.rep, y)
    d, _ = leading_term(grade_vec(sc.rep, w, y))
    ell = ell_bar_for(sc.rep, w, d).flat()[:: sc.rep.n + 1]
    Fz = face_of(cs, ell)
    out = {
        "command": "strata",
        "support": cs,
        "support_dim": support_dim(cs),
        "ell_bar": ell,
        "z_face": Fz.members,
        "z_face_dim": support_dim(Fz.members),
    }
    try:
        res = intermediate_face(cs, Fz, ell)
    except NoRoom as exc:
        out["intermediate"] = None
        out["no_room"] = str(exc)
        return out
    out["intermediate"] = {
        "s": res.s,
        "epsilon": res.epsilon,
        "t_prime": res.t_prime,
        "face": res.face.members,
        "y_F": face_restrict(sc.rep, y, res.face),
        "dims": res.dims,
    }
    return out


def cmd_colimit(sc, args):
    d = args.degree if args.degree is not None else sc.param("d")
    bound = args.bound if args.bound is not None else sc.param("bound")
    rpt = colimit_report(sc.rep, sc.vector(args.vector), sc.onps_(args.onps), d=d, bound=bound)
    return {"command": "colimit", "report": rpt, "dims": rpt.dims, **strictness_verdict(rpt)}


def _entry_report(name, args):
    kwargs = {}
    if name == "popov":
        kwargs["colimit"] = args.colimit
    if name in ("conjugation", "quadric"):
        kwargs.update(samples=args.samples, seed=args.seed)
    return run_entry(name, **kwargs)


def cmd_catalog(args):
    if args.action == "list":
        return {"command": "catalog list", "entries": sorted(ENTRIES)}
    if args.entry is None:
        raise InputError("catalog run needs an entry name or 'all'")
    names = list(ENTRIES) if args.entry == "all" else [args.entry]
    reports = {n: _entry_report(n, args) for n in names}
    if args.entry != "all":
        return {"command": "catalog run", **reports[args.entry]}
    return {
        "command": "catalog run all",
        "entries": {n: {"ok": r["ok"], "checks": r["checks"], "discrepancies": r["discrepancies"]} for n, r in reports.items()},
        "ok": all(r["ok"] for r in reports.values()),
    }


def _text(obj, prefix=""):
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            lines.extend(_text(obj[k], f"{prefix}{k}."))
    elif isinstance(obj, list) and obj and any(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            lines.extend(_text(x, f"{prefix}{i}."))
    else:
        val = "PASS" if obj is True else "FAIL" if obj is False else json.dumps(obj)
        lines.append(f"{prefix[:-1]}: {val}")
    return lines


def _global_flags(p, defaults):
    kw = (lambda v: {"default": v}) if defaults else (lambda v: {"default": argparse.SUPPRESS})
    p.add_argument("--seed", type=int, **kw(0))
    p.add_argument("--samples", type=int, **kw(40))
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", **kw("json"))
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", **kw("json"))


def build_parser():
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, defaults=False)
    p = argparse.ArgumentParser(prog="orbitlim", description="Exact stabilizer-limit computations.")
    _global_flags(p, defaults=True)
    sub = p.add_subparsers(dest="command", required=True)

    def scenario_cmd(name, func, onps=True, helptext=None):
        s = sub.add_parser(name, help=helptext, parents=[common])
        s.add_argument("--scenario", required=True)
        s.add_argument("--vector")
        if onps:
            s.add_argument("--onps")
        s.set_defaults(func=func)
        return s

    scenario_cmd("stab", cmd_stab, onps=False, helptext="stabilizer algebra and orbit tangent")
    scenario_cmd("limit", cmd_limit, helptext="graded components, leading term, tangent of approach")
    scenario_cmd("hatk", cmd_hatk, helptext="K-hat and the containment chain")
    scenario_cmd("align", cmd_align, helptext="Case A / Case B dichotomy")
    nc = scenario_cmd("nc-test", cmd_nc_test, onps=False, helptext="tangent-ideal membership test")
    nc.add_argument("--direction", required=True)
    nc.add_argument("--function")
    nc.add_argument("--k", type=int)
    scenario_cmd("strata", cmd_strata, helptext="character support, faces, intermediate face")
    co = scenario_cmd("colimit", cmd_colimit, helptext="d-stabilizers and co-limit tangent")
    co.add_argument("--degree", type=int)
    co.add_argument("--bound", type=int, help="fail with exit 2 if dim F exceeds this")

    cat = sub.add_parser("catalog", help="built-in worked examples", parents=[common])
    cat.add_argument("action", choices=["run", "list"])
    cat.add_argument("entry", nargs="?")
    cat.add_argument("--colimit", action="store_true")
    cat.set_defaults(func=None)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "catalog":
            report = cmd_catalog(args)
        else:
            report = args.func(Scenario.load(args.scenario), args)
    except InvariantViolation as exc:
        err = {"error": type(exc).__name__, "message": str(exc), "witness": _safe(exc.witness)}
        print(json.dumps(err, sort_keys=True), file=sys.stderr)
        return EXIT_INVARIANT
    except OrbitLimError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True), file=sys.stderr)
        return EXIT_INPUT
    if args.fmt == "text":
        print("\n".join(_text(to_jsonable(report))))
    else:
        print(dumps(report))
    if report.get("ok") is False:
        return EXIT_INVARIANT
    return EXIT_OK


def _safe(obj):
    try:
        return to_jsonable(obj)
    except TypeError:
        return repr(obj)


if __name__ == "__main__":
    sys.exit(main())
