"""Command-line front end.

Every subcommand takes the generators through ``--gens`` or ``--file`` and
prints plain text, or canonical JSON with ``--json``.  Exit status is 0 on
success, 2 for invalid input and 3 when a search budget runs out.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import __version__
from . import catenary as cat
from . import invariants as inv
from . import toric
from .errors import ArithmeticOverflow, BudgetExceeded, CatenaError, InvalidSemigroup
from .fibers import distance, lengths, nabla_graph
from .semigroup import (
    AffineSemigroup,
    lift_eq,
    lift_hom,
    minimize,
    new_semigroup,
    parse_element,
    parse_generators,
)

EXIT_OK, EXIT_INVALID, EXIT_BUDGET = 0, 2, 3
SCAN_FACTOR = 20


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


# --------------------------------------------------------------------------
# formatting


def _rat(q: Fraction) -> str:
    return str(Fraction(q))


def _elem_text(x: Sequence[int]) -> str:
    return " ".join(map(str, x))


def _vec_json(x: Sequence[int]) -> list[int]:
    return [int(v) for v in x]


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _gens_text(S: AffineSemigroup) -> str:
    if S.d == 1:
        return ",".join(str(g[0]) for g in S.generators)
    return "; ".join(_elem_text(g) for g in S.generators)


def semigroup_echo(S: AffineSemigroup) -> dict:
    return {
        "generators": [_vec_json(g) for g in S.generators],
        "rho": [_rat(q) for q in S.rho],
        "omega_witness": None if S.omega is None else [_rat(q) for q in S.omega],
        "atoms_verified": S.atoms_verified,
    }


def _result_json(r: cat.CatenaryResult) -> dict:
    return {
        "value": r.value,
        "variant": r.variant,
        "pair": None if r.pair is None else [_vec_json(u) for u in r.pair],
        "chain": [_vec_json(u) for u in r.chain],
    }


def _scan_json(r: cat.BoundedScan) -> dict:
    return {
        "value": r.value,
        "method": r.method,
        "bound": _rat(r.bound),
        "element": None if r.element is None else _vec_json(r.element),
    }


def _scan_text(r: cat.BoundedScan) -> str:
    where = "" if r.element is None else f", attained at {_elem_text(r.element)}"
    return f"{r.value} (bounded scan up to degree {_rat(r.bound)}{where})"


# --------------------------------------------------------------------------
# input


def _load(args) -> AffineSemigroup:
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidSemigroup(f"cannot read {args.file}: {exc.strerror}") from None
        if not text.lstrip().startswith(("{", "[")):
            raise InvalidSemigroup("--file expects the JSON generator form")
    else:
        text = args.gens
    S = new_semigroup(parse_generators(text))
    if args.minimize:
        S = minimize(S)
    return S


def _element(args, S: AffineSemigroup, required: bool = True):
    if args.element is None:
        if required:
            raise _UsageError("--element is required for this subcommand")
        return None
    return parse_element(args.element, S.d)


def _factorization(text: str, n: int) -> tuple[int, ...]:
    return parse_element(text, n)


def _bound(args, S: AffineSemigroup) -> Fraction:
    if args.bound is not None:
        try:
            b = Fraction(args.bound)
        except (ValueError, ZeroDivisionError):
            raise InvalidSemigroup(f"bad bound {args.bound!r}") from None
        if b < 0:
            raise InvalidSemigroup("the scan bound must be nonnegative")
        return b
    return SCAN_FACTOR * max(S.generator_degrees)


# --------------------------------------------------------------------------
# subcommands; each returns (text, json-able data)


def cmd_factorizations(args, S):
    a = _element(args, S)
    fib = S.factorizations(a)
    text = "\n".join(_elem_text(u) for u in fib)
    return text, {"element": _vec_json(a), "factorizations": [_vec_json(u) for u in fib], "lengths": lengths(S, a)}


def cmd_distance(args, S):
    if args.u is None or args.v is None:
        raise _UsageError("distance needs --u and --v")
    u, v = _factorization(args.u, S.n), _factorization(args.v, S.n)
    dist = distance(u, v)
    return str(dist), {"u": _vec_json(u), "v": _vec_json(v), "distance": dist, "same_element": S.project(u) == S.project(v)}


def cmd_nabla(args, S):
    a = _element(args, S)
    g = nabla_graph(S, a)
    if args.dot:
        return g.to_dot(show_missing=args.show_missing).rstrip("\n"), None
    lines = [f"{i}: {_elem_text(u)}" for i, u in enumerate(g.vertices)]
    lines += [f"{i} -- {j} [{w}]" for (i, j), w in sorted(g.edges.items())]
    if args.show_missing:
        lines += [f"{i} .. {j} [{w}]" for i, j, w in g.missing_pairs()]
    lines.append(f"components: {len(g.components)}")
    data = {
        "element": _vec_json(a),
        "vertices": [_vec_json(u) for u in g.vertices],
        "edges": [[i, j, w] for (i, j), w in sorted(g.edges.items())],
        "missing": [[i, j, w] for i, j, w in g.missing_pairs()],
        "components": [list(c) for c in g.components],
        "betti": g.is_betti,
    }
    return "\n".join(lines), data


def cmd_betti(args, S):
    betti = toric.betti_elements(S)
    sep = " " if S.d == 1 else "\n"
    text = sep.join(_elem_text(b.element) for b in betti)
    return text, {"betti": [{"element": _vec_json(b.element), "components": b.components} for b in betti]}


def cmd_presentation(args, S):
    p = toric.minimal_generators(S)
    return p.text(), p.as_dict()


def _catenary_cmd(variant: str):
    monoid = {
        "ordinary": cat.catenary_monoid,
        "equal": cat.equal_catenary_monoid,
        "homogeneous": cat.homogeneous_catenary_monoid,
    }

    def run(args, S):
        a = _element(args, S, required=False)
        if a is not None:
            r = cat.ELEMENT_FUNCTIONS[variant](S, a)
            return str(r.value), {"element": _vec_json(a), **_result_json(r)}
        if variant == "monotone":
            r = cat.monotone_catenary_monoid_bounded(S, _bound(args, S), args.threads)
            return _scan_text(r), {"variant": variant, **_scan_json(r)}
        value = monoid[variant](S)
        return str(value), {"variant": variant, "value": value}

    return run


def cmd_omega(args, S):
    a = _element(args, S, required=False)
    if a is not None:
        value = inv.omega_element(S, a)
        return str(value), {"element": _vec_json(a), "omega": value}
    value = inv.omega_monoid(S)
    return str(value), {"omega": value}


def cmd_tame(args, S):
    a = _element(args, S, required=False)
    if a is not None:
        value = inv.tame_element(S, a)
        return str(value), {"element": _vec_json(a), "tame": value}
    value = inv.tame_monoid(S)
    return str(value), {"tame": value, "method": "candidate-set"}


def cmd_half_factorial(args, S):
    hf = S.half_factorial
    witness = None if S.omega is None else [_rat(q) for q in S.omega]
    text = "true" if hf else "false"
    if hf:
        text += " (" + " ".join(witness) + ")"
    return text, {"half_factorial": hf, "omega_witness": witness}


def cmd_lift(args, S):
    T = lift_hom(S) if args.kind == "hom" else lift_eq(S)
    return _gens_text(T), {"kind": args.kind, **semigroup_echo(T)}


def report(S: AffineSemigroup, bound=None, threads: int = 1, witnesses: bool = False) -> dict:
    """The full invariant panel as a JSON-ready dict."""
    if bound is None:
        bound = SCAN_FACTOR * max(S.generator_degrees)
    betti = toric.betti_elements(S)
    mon = cat.monotone_catenary_monoid_bounded(S, bound, threads)
    data = {
        "version": __version__,
        **semigroup_echo(S),
        "half_factorial": S.half_factorial,
        "betti": [{"element": _vec_json(b.element), "components": b.components} for b in betti],
        "catenary": max((cat.catenary_element(S, b.element, b.fiber).value for b in betti), default=0),
        "catenary_eq": cat.equal_catenary_monoid(S),
        "catenary_hom": cat.homogeneous_catenary_monoid(S),
        "catenary_mon": _scan_json(mon),
        "omega": None,
        "tame": None,
        "tame_method": None,
    }
    if S.atoms_verified:
        data["omega"] = inv.omega_monoid(S)
        data["tame"] = inv.tame_monoid(S)
        data["tame_method"] = "candidate-set"
    if witnesses:
        data["presentation"] = toric.minimal_generators(S, betti).as_dict()
        data["betti_chains"] = [
            {"element": _vec_json(b.element), **_result_json(cat.catenary_element(S, b.element, b.fiber))} for b in betti
        ]
    return data


def cmd_report(args, S):
    data = report(S, _bound(args, S), args.threads, args.witnesses)

    def show(v):
        return "n/a (generators are not all atoms)" if v is None else str(v)

    mon = data["catenary_mon"]
    where = "" if mon["element"] is None else f", attained at {_elem_text(mon['element'])}"
    lines = [
        f"generators: {_gens_text(S)}",
        f"atoms verified: {str(data['atoms_verified']).lower()}",
        f"half-factorial: {str(data['half_factorial']).lower()}",
        "betti: " + ", ".join(_elem_text(b["element"]) for b in data["betti"]),
        f"catenary: {data['catenary']}",
        f"equal catenary: {data['catenary_eq']}",
        f"homogeneous catenary: {data['catenary_hom']}",
        f"monotone catenary: {mon['value']} (bounded scan up to degree {mon['bound']}{where})",
        f"omega-primality: {show(data['omega'])}",
        f"tame degree: {show(data['tame'])}",
    ]
    return "\n".join(lines), data


COMMANDS = {
    "factorizations": (cmd_factorizations, "list the factorizations of an element"),
    "distance": (cmd_distance, "distance between two factorizations"),
    "nabla": (cmd_nabla, "shared-support graph on the factorizations of an element"),
    "betti": (cmd_betti, "Betti elements"),
    "presentation": (cmd_presentation, "minimal binomial generators of the toric ideal"),
    "catenary": (_catenary_cmd("ordinary"), "catenary degree of an element or of the monoid"),
    "catenary-eq": (_catenary_cmd("equal"), "equal catenary degree"),
    "catenary-mon": (_catenary_cmd("monotone"), "monotone catenary degree (bounded scan for the monoid)"),
    "catenary-hom": (_catenary_cmd("homogeneous"), "homogeneous catenary degree"),
    "omega": (cmd_omega, "omega-primality"),
    "tame": (cmd_tame, "tame degree"),
    "half-factorial": (cmd_half_factorial, "half-factoriality test with its witness"),
    "lift": (cmd_lift, "print the generators of a lifted monoid"),
    "report": (cmd_report, "full invariant panel"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--gens", help='generators, e.g. "31,47,57" or "1 0; 1 3; 1 5"')
    src.add_argument("--file", help='JSON file of the form {"generators": [[...], ...]}')
    common.add_argument("--element", help='an element: "564" or "4 17"')
    common.add_argument("--json", action="store_true", help="emit canonical JSON")
    common.add_argument("--bound", help="degree bound for bounded scans")
    common.add_argument("--threads", type=int, default=1, help="worker threads for scans")
    common.add_argument("--minimize", action="store_true", help="drop generators that are not atoms first")

    parser = _Parser(prog="catena", description="Factorization invariants of affine semigroups.")
    parser.add_argument("--version", action="version", version=f"catena {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "distance":
            p.add_argument("--u", help="first factorization")
            p.add_argument("--v", help="second factorization")
        elif name == "nabla":
            p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
            p.add_argument("--show-missing", action="store_true", help="draw non-edges dashed")
        elif name == "lift":
            p.add_argument("--kind", choices=("eq", "hom"), default="hom")
        elif name == "report":
            p.add_argument("--witnesses", action="store_true", help="include relations and chains")
    return parser


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise _UsageError("--threads must be at least 1")
        S = _load(args)
        text, data = COMMANDS[args.command][0](args, S)
    except SystemExit as exc:  # --help and --version
        return int(exc.code or 0)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_INVALID
    except (BudgetExceeded, ArithmeticOverflow) as exc:
        print(f"catena: {exc}", file=stderr)
        return EXIT_BUDGET
    except (CatenaError, ValueError) as exc:
        print(f"catena: {exc}", file=stderr)
        return EXIT_INVALID
    if args.json and data is not None:
        stdout.write(_dump(data))
    else:
        stdout.write(text + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())
