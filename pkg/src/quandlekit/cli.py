"""Command line entry point: ``quandlekit <command> ...``.

Exit codes: 0 success, 2 input error, 3 infeasible size, 64 usage error.
With ``--json`` every command prints one JSON document carrying a run
manifest (command, input digests, version, wall time) and the result.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from pathlib import Path

from . import __version__
from .cochain import as_module
from .cycles import is_cycle, is_null_homologous
from .diagram import KnotDiagram
from .errors import InfeasibleSizeError, InputError, UnsupportedError
from .extensions import abelian_extension, alexander_extension, extension_cocycle
from .homology import THEORIES, cohomology, homology, is_coboundary, is_cocycle
from .invariants import bracket, cocycle_invariant, col, jones, normalized, surface_state_sum, \
    twisted_cocycle_invariant
from .io import dump_json, load_chain, load_cochain, load_diagram, load_quandle, \
    load_triple_points, read_json
from .quandle import AlexanderModule, FiniteQuandle, make_alexander, make_dihedral, make_qs6, \
    make_trivial, parse_poly, verify_axioms

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_USAGE = 0, 2, 3, 64

# grouped spellings accepted as synonyms of the flat commands
ALIASES = {
    ("quandle", "make"): "make-quandle",
    ("quandle", "verify"): "verify-quandle",
    ("quandle", "extend"): "extend",
    ("homology", "compute"): "homology",
    ("homology", "check-cocycle"): "check-cocycle",
    ("invariant", "col"): "col",
    ("invariant", "phi"): "phi",
    ("invariant", "phit"): "phit",
    ("invariant", "surface"): "surface",
    ("invariant", "jones"): "jones",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class Report:
    """Collects human text and the JSON result of one command."""

    def __init__(self):
        self.lines: list[str] = []
        self.result: object = None
        self.inputs: dict[str, str] = {}
        self.code = EXIT_OK

    def say(self, text: str = ""):
        self.lines.append(str(text))

    def track(self, spec) -> None:
        path = Path(str(spec))
        if path.is_file():
            self.inputs[str(spec)] = hashlib.sha256(path.read_bytes()).hexdigest()


# ---------------------------------------------------------------- helpers

def _quandle(rep: Report, spec) -> FiniteQuandle:
    rep.track(spec)
    return load_quandle(spec)


def _diagram(rep: Report, spec) -> KnotDiagram:
    rep.track(spec)
    return load_diagram(spec)


def _cochain(rep: Report, spec, quandle=None):
    rep.track(spec)
    return load_cochain(spec, quandle)


def _module(rep: Report, spec) -> AlexanderModule:
    if spec is None:
        return as_module(None)
    path = Path(str(spec))
    if path.is_file():
        rep.track(spec)
        return AlexanderModule.from_json(read_json(path))
    return AlexanderModule.from_spec(str(spec))


def _twist_flag(args) -> bool | None:
    return {"auto": None, "yes": True, "no": False}[args.twisted]


# --------------------------------------------------------------- commands

def cmd_verify_quandle(args, rep: Report):
    path = Path(args.file)
    if path.is_file():
        rep.track(args.file)
        data = read_json(path)
        table = data.get("table") if isinstance(data, dict) else data
    else:
        table = load_quandle(args.file).table
    report = verify_axioms(table)
    rep.result = {"ok": report.ok, "axiom": report.axiom,
                  "witness": list(report.witness) if report.witness else None,
                  "size": len(table) if table is not None else 0}
    if report.ok:
        rep.say(f"ok: quandle of order {len(table)}")
    else:
        rep.say(str(report))
        rep.code = EXIT_INPUT


def cmd_make_quandle(args, rep: Report):
    kind = args.kind.lower()
    a = args.args
    try:
        if kind == "trivial":
            q = make_trivial(int(a[0]))
        elif kind == "dihedral":
            q = make_dihedral(int(a[0]))
        elif kind == "alexander":
            q = make_alexander(int(a[0]), parse_poly(a[1]))
        elif kind == "qs6":
            q = make_qs6()
        elif kind == "named":
            q = load_quandle(a[0])
        else:
            raise InputError(f"unknown quandle kind {args.kind!r} "
                             "(trivial N, dihedral N, alexander P POLY, qs6, named NAME)")
    except IndexError:
        raise InputError(f"missing argument for quandle kind {args.kind!r}") from None
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from None
    rep.result = q.to_json()
    _write_or_say(args, rep, q.to_json())


def _write_or_say(args, rep: Report, obj):
    text = dump_json(obj)
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
        rep.say(f"wrote {args.output}")
    else:
        rep.say(text)


def cmd_extend(args, rep: Report):
    if args.digits:
        p, m, h = args.digits
        phi = extension_cocycle(int(p), int(m), parse_poly(h))
        rep.result = phi.to_json()
        if args.output:
            _write_or_say(args, rep, phi.to_json())
        else:
            rep.say(phi.chi_string())
        return
    if not (args.base and args.fiber and args.cocycle):
        raise UsageError("extend needs --base, --fiber and --cocycle, or --digits P M H")
    X = _quandle(rep, args.base)
    A = _module(rep, args.fiber)
    phi = _cochain(rep, args.cocycle, X)
    kind = args.kind
    if kind == "auto":
        kind = "abelian" if A.trivial_action else "alexander"
    E = (abelian_extension if kind == "abelian" else alexander_extension)(X, A, phi)
    rep.result = E.to_json()
    _write_or_say(args, rep, E.to_json())


def cmd_homology(args, rep: Report):
    X = _quandle(rep, args.quandle)
    A = _module(rep, args.coeff)
    func = cohomology if args.cohomology else homology
    g = func(X, args.level, A, theory=args.theory, twisted=_twist_flag(args))
    rep.result = {"group": str(g), "rank": g.rank, "torsion": list(g.torsion),
                  "level": args.level, "theory": args.theory, "coefficients": A.label,
                  "cohomology": args.cohomology}
    rep.say(str(g))


def cmd_check_cocycle(args, rep: Report):
    X = _quandle(rep, args.quandle) if args.quandle else None
    f = _cochain(rep, args.file, X)
    tw = _twist_flag(args)
    chk = is_cocycle(f, args.theory, tw)
    out = {"cocycle": chk.ok, "witness": list(chk.witness) if chk.witness else None,
           "coboundary": None}
    rep.say(str(chk))
    if chk.ok:
        psi = is_coboundary(f, args.theory, tw)
        out["coboundary"] = psi is not None
        if psi is None:
            rep.say("not a coboundary")
        else:
            out["primitive"] = psi.to_json()
            rep.say(f"coboundary of {psi.chi_string()}")
    rep.result = out


def cmd_col(args, rep: Report):
    n = col(_diagram(rep, args.pd), _quandle(rep, args.quandle))
    rep.result = {"count": n}
    rep.say(str(n))


def cmd_phi(args, rep: Report):
    X = _quandle(rep, args.quandle)
    value = cocycle_invariant(_diagram(rep, args.pd), X, _cochain(rep, args.cocycle, X))
    rep.result = value.to_json()
    rep.say(str(value))


def cmd_phit(args, rep: Report):
    X = _quandle(rep, args.quandle)
    phi = _cochain(rep, args.cocycle, X)
    A = _module(rep, args.coeff) if args.coeff else phi.coefficients
    value = twisted_cocycle_invariant(_diagram(rep, args.pd), X, A, phi)
    rep.result = value.to_json()
    rep.say(str(value))


def cmd_surface(args, rep: Report):
    X = _quandle(rep, args.quandle) if args.quandle else None
    theta = _cochain(rep, args.cocycle, X)
    rep.track(args.data)
    value = surface_state_sum(load_triple_points(args.data), theta, _twist_flag(args))
    rep.result = value.to_json()
    rep.say(str(value))


def cmd_jones(args, rep: Report):
    K = _diagram(rep, args.pd)
    if args.bracket:
        value = bracket(K, loop_norm=args.loop_norm)
    elif args.normalized:
        value = normalized(K, loop_norm=args.loop_norm)
    else:
        value = jones(K)
    rep.result = value.to_json()
    rep.say(str(value))


def cmd_cycles(args, rep: Report):
    X = _quandle(rep, args.quandle)
    rep.track(args.file)
    c = load_chain(args.file)
    ok, d = is_cycle(c, X)
    if args.action == "check":
        rep.result = {"cycle": ok, "boundary": d.to_json()}
        rep.say(f"{c} is a cycle" if ok else f"not a cycle: boundary {d}")
        return
    if not ok:
        raise InputError(f"{c} is not a cycle: boundary {d}")
    w = is_null_homologous(c, X, _module(rep, args.coeff))
    rep.result = {"bounds": w is not None, "witness": w.to_json() if w is not None else None}
    rep.say(f"{c} bounds {w}" if w is not None else f"{c} does not bound")


def cmd_reproduce(args, rep: Report):
    from .reproduce import CRITERIA, run_all, run_criterion

    theta = _cochain(rep, args.theta) if args.theta else None
    if args.only:
        bad = [n for n in args.only if not 1 <= n <= len(CRITERIA)]
        if bad:
            raise InputError(f"criteria are numbered 1 to {len(CRITERIA)}; got {bad}")
        results = [run_criterion(n, theta=theta, seed=args.seed) for n in args.only]
    else:
        results = run_all(theta=theta, seed=args.seed)
    for r in results:
        rep.say(r.line())
    passed = sum(r.passed for r in results)
    rep.say(f"{passed}/{len(results)} passed")
    rep.result = {"items": [r.to_json() for r in results], "passed": passed,
                  "total": len(results)}
    if passed != len(results):
        rep.code = 1


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    # --json may come before or after the command name
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document")

    parser = _Parser(prog="quandlekit",
                     description="Quandle cohomology, cocycle invariants and knot diagrams.")
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    def twist(p):
        p.add_argument("--twisted", choices=("auto", "yes", "no"), default="auto",
                       help="twisted complex (auto: when the coefficients have nontrivial T)")

    p = add("verify-quandle", cmd_verify_quandle, "check the quandle axioms")
    p.add_argument("file", help="quandle JSON file or name")

    p = add("make-quandle", cmd_make_quandle, "write a quandle table as JSON")
    p.add_argument("kind", help="trivial, dihedral, alexander, qs6 or named")
    p.add_argument("args", nargs="*")
    p.add_argument("-o", "--output")

    p = add("extend", cmd_extend, "build an extension quandle or an extension cocycle")
    p.add_argument("--base")
    p.add_argument("--fiber", help="coefficient module: JSON file or spec such as Z2, R3, 3:T+1")
    p.add_argument("--cocycle")
    p.add_argument("--kind", choices=("auto", "alexander", "abelian"), default="auto")
    p.add_argument("--digits", nargs=3, metavar=("P", "M", "H"),
                   help="print the extension cocycle of Z_(P^M)[T]/(H) over Z_(P^(M-1))")
    p.add_argument("-o", "--output")

    p = add("homology", cmd_homology, "compute a (co)homology group")
    p.add_argument("--quandle", required=True)
    p.add_argument("--theory", choices=THEORIES, default="quandle")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--coeff", default="Z")
    p.add_argument("--cohomology", action="store_true")
    twist(p)

    p = add("check-cocycle", cmd_check_cocycle, "test a cochain for the cocycle condition")
    p.add_argument("file")
    p.add_argument("--quandle")
    p.add_argument("--theory", choices=THEORIES, default="quandle")
    twist(p)

    p = add("col", cmd_col, "count colorings")
    p.add_argument("--pd", required=True)
    p.add_argument("--quandle", required=True)

    p = add("phi", cmd_phi, "cocycle invariant")
    p.add_argument("--pd", required=True)
    p.add_argument("--quandle", required=True)
    p.add_argument("--cocycle", required=True)

    p = add("phit", cmd_phit, "twisted cocycle invariant")
    p.add_argument("--pd", required=True)
    p.add_argument("--quandle", required=True)
    p.add_argument("--coeff")
    p.add_argument("--cocycle", required=True)

    p = add("surface", cmd_surface, "state sum over colored triple points")
    p.add_argument("--data", required=True)
    p.add_argument("--cocycle", required=True)
    p.add_argument("--quandle")
    twist(p)

    p = add("jones", cmd_jones, "Jones polynomial or Kauffman bracket")
    p.add_argument("--pd", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--bracket", action="store_true")
    g.add_argument("--normalized", action="store_true")
    p.add_argument("--loop-norm", action="store_true",
                   help="bracket with the unknot normalized to 1")

    p = add("cycles", cmd_cycles, "check or bound a 2-chain")
    p.add_argument("action", choices=("check", "bound"))
    p.add_argument("file")
    p.add_argument("--quandle", required=True)
    p.add_argument("--coeff", default="Z")

    p = add("reproduce", cmd_reproduce, "run the bundled checks")
    p.add_argument("--theta", help="replacement R3 3-cocycle (JSON)")
    p.add_argument("--only", type=int, nargs="+", metavar="N")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _normalize(argv: list[str]) -> list[str]:
    for i, tok in enumerate(argv):
        if tok.startswith("-"):
            continue
        if i + 1 < len(argv) and (tok, argv[i + 1]) in ALIASES:
            return argv[:i] + [ALIASES[(tok, argv[i + 1])]] + argv[i + 2:]
        return argv
    return argv


def dispatch(argv: list[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_normalize(list(argv)))
    except UsageError as exc:
        print(str(exc), file=stderr)
        print(parser.format_usage(), file=stderr, end="")
        return EXIT_USAGE
    except SystemExit as exc:          # --help / --version
        return int(exc.code or 0)
    if not getattr(args, "func", None):
        print(parser.format_usage(), file=stderr, end="")
        return EXIT_USAGE

    rep = Report()
    start = time.perf_counter()
    error = None
    try:
        args.func(args, rep)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return EXIT_USAGE
    except InfeasibleSizeError as exc:
        rep.code, error = EXIT_INFEASIBLE, f"infeasible: {exc}"
    except (InputError, UnsupportedError) as exc:
        rep.code, error = EXIT_INPUT, f"error: {exc}"
    elapsed = time.perf_counter() - start

    if args.json:
        doc = {"command": args.command, "inputs": rep.inputs, "version": __version__,
               "wall_time": round(elapsed, 4), "exit_code": rep.code, "result": rep.result}
        if error:
            doc["error"] = error
        print(dump_json(doc), file=stdout)
    else:
        for line in rep.lines:
            print(line, file=stdout)
    if error:
        print(error, file=stderr)
    return rep.code


def main(argv: list[str] | None = None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
