"""Command-line front end.

Exit codes: 0 success, 1 enumeration cap refused, 2 malformed input or usage,
3 precondition violated, 4 an internal check or the acceptance suite failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import acceptance, adversary, approx, constructors as C, graphops, laminar
from .cuts import cdim_alpha, cut_dimension, mincuts, near_mincuts
from .errors import (
    CapExceededError,
    CutDimError,
    InvariantViolation,
    MalformedInputError,
    PreconditionError,
)
from .graph import Graph, Shore, format_rational, parse_rational

EXIT_OK, EXIT_CAP, EXIT_INPUT, EXIT_PRECONDITION, EXIT_CHECK = 0, 1, 2, 3, 4


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON in {path}: {exc}") from exc


def _graph(path: str) -> Graph:
    return Graph.from_json_obj(_read_json(path))


def _vertices(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise MalformedInputError(f"expected comma-separated vertices, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, obj=None, dot: str | None = None) -> None:
    if args.format == "dot":
        if dot is None:
            raise PreconditionError(f"--format dot is not available for '{args.command}'")
        text = dot
    else:
        text = json.dumps(obj, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- subcommands --------------------------------------------------------------


def cmd_construct(args) -> int:
    kind = args.kind
    report = None
    if kind == "cycle":
        G = C.cycle(args.n)
    elif kind == "complete":
        G = C.complete(args.n, args.weight)
    elif kind == "explicit":
        fam = laminar.random_maximal_cross_free(args.n, args.seed)
        report = C.explicit_from_family(fam, args.n, cap=args.cap)
    elif kind == "merge":
        report = C.merge_construction(args.n, cap=args.cap)
    elif kind == "k4-union":
        G = C.k4_union(args.k)
    elif kind == "cycle-eps":
        if args.alpha is None:
            raise PreconditionError("cycle-eps needs --alpha")
        G = C.cycle_plus_eps(args.n, args.alpha)
    elif kind == "fig8":
        G = C.fixture_fig8()
    else:
        G = C.fixture_fig2()
    if report is not None:
        _emit(args, report.to_json_obj(), report.graph.to_dot())
    else:
        _emit(args, {"graph": G.to_json_obj()}, G.to_dot())
    return EXIT_OK


def cmd_cdim(args) -> int:
    G = _graph(args.input)
    if args.alpha is not None:
        _emit(args, {"alpha": format_rational(args.alpha), "cdim_alpha": cdim_alpha(G, args.alpha, args.cap)})
    else:
        _emit(args, {"cdim": cut_dimension(G, args.cap)})
    return EXIT_OK


def cmd_mincuts(args) -> int:
    _emit(args, mincuts(_graph(args.input), args.cap).to_json_obj())
    return EXIT_OK


def cmd_near_cuts(args) -> int:
    if args.alpha is None:
        raise PreconditionError("near-cuts needs --alpha")
    _emit(args, near_mincuts(_graph(args.input), args.alpha, args.cap).to_json_obj())
    return EXIT_OK


def cmd_tree_repr(args) -> int:
    obj = _read_json(args.input)
    if isinstance(obj, dict) and "sets" in obj:
        try:
            n = obj["n"]
            F = laminar.SetFamily.of([list(s) for s in obj["sets"]], n)
        except (KeyError, TypeError) as exc:
            raise MalformedInputError(f'family JSON needs "n" and "sets": {exc}') from None
    else:
        G = Graph.from_json_obj(obj)
        cuts = laminar.maximal_cross_free_subset(list(mincuts(G, args.cap).mincuts), "mincuts-only", G.n)
        F = laminar.beach(cuts, G.n)
    rep = laminar.tree_representation(F)
    _emit(args, {"family": F.to_json_obj(), "tree": rep.to_json_obj()}, rep.to_dot())
    return EXIT_OK


def cmd_sep(args) -> int:
    G = _graph(args.input)
    try:
        X = Shore.of(_vertices(args.shore), G.n)
    except CutDimError as exc:
        raise PreconditionError(str(exc)) from None
    _emit(args, graphops.separation(G, X).to_json_obj())
    return EXIT_OK


def cmd_mer(args) -> int:
    G0, G1 = _graph(args.input0), _graph(args.input1)
    G = graphops.merge(G0, args.v1, G1, args.v0)
    _emit(args, {"graph": G.to_json_obj()}, G.to_dot())
    return EXIT_OK


def cmd_union(args) -> int:
    G0, G1 = _graph(args.input0), _graph(args.input1)
    G = graphops.direct_union(G0, args.v0, G1, args.v1)
    _emit(args, {"graph": G.to_json_obj()}, G.to_dot())
    return EXIT_OK


def cmd_classify(args) -> int:
    _emit(args, {"structure": graphops.classify_mincut_structure(_graph(args.input), args.cap).value})
    return EXIT_OK


def cmd_adversary(args) -> int:
    G = _graph(args.input)
    A = adversary.query_matrix_from_json_obj(_read_json(args.queries))
    if args.cut:
        S = Shore.of(_vertices(args.cut), G.n)
        _emit(args, {"cut": list(S.members), **adversary.alpha(G.w, A, S).to_json_obj()})
        return EXIT_OK
    pair = adversary.find_fooling(G, A, args.cap)
    _emit(args, {"fooling": None if pair is None else pair.to_json_obj()})
    return EXIT_OK


def cmd_perturb_check(args) -> int:
    obj = _read_json(args.input)
    try:
        inst = approx.PerturbationInstance.of(
            [[parse_rational(x) for x in r] for r in obj["M"]],
            [parse_rational(x) for x in obj["w"]],
            [parse_rational(x) for x in obj["c"]],
            [[parse_rational(x) for x in r] for r in obj["P"]],
        )
    except (KeyError, TypeError) as exc:
        raise MalformedInputError(f'perturbation JSON needs "M", "w", "c", "P": {exc}') from None
    _emit(args, approx.perturbation_valid(inst).to_json_obj())
    return EXIT_OK


def cmd_verify(args) -> int:
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        results = acceptance.run_all(lambda line: (out.write(line + "\n"), out.flush()))
        passed = sum(r.passed for r in results)
        out.write(f"{passed}/{len(results)} criteria passed\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK if passed == len(results) else EXIT_CHECK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="largest n to enumerate (default 16 or $CUTDIM_CAP)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--alpha", type=_rational, default=None, help='rational such as "3/2"')
    common.add_argument("--format", choices=("json", "dot"), default="json")
    common.add_argument("--out", default=None, help="write to this path instead of stdout")

    p = argparse.ArgumentParser(prog="cutdim", description="Cut dimension toolkit with exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("construct", parents=[common], help="build a graph family")
    s.add_argument("kind", choices=C.CONSTRUCTORS)
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--weight", type=_rational, default=Fraction(1))
    s.set_defaults(func=cmd_construct)

    for name, func, text in (
        ("cdim", cmd_cdim, "cut dimension (or alpha-near dimension with --alpha)"),
        ("mincuts", cmd_mincuts, "list minimum cuts"),
        ("near-cuts", cmd_near_cuts, "list cuts of weight <= alpha * lambda"),
        ("classify", cmd_classify, "classify the minimum-cut structure"),
        ("tree-repr", cmd_tree_repr, "tree representation of a laminar family or of a graph's mincuts"),
        ("perturb-check", cmd_perturb_check, "check an approximate-rank perturbation"),
    ):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("input", help='JSON file, or "-" for stdin')
        s.set_defaults(func=func)

    s = sub.add_parser("sep", parents=[common], help="separate a graph along a cut")
    s.add_argument("input")
    s.add_argument("--shore", required=True, help="comma-separated vertices of one shore")
    s.set_defaults(func=cmd_sep)

    for name, func, text in (("mer", cmd_mer, "merge two graphs"), ("union", cmd_union, "direct union")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("input0")
        s.add_argument("input1")
        s.add_argument("--v0", type=int, default=0)
        s.add_argument("--v1", type=int, default=0)
        s.set_defaults(func=func)

    s = sub.add_parser("adversary", parents=[common], help="search for a fooling graph")
    s.add_argument("input")
    s.add_argument("--queries", required=True, help='query matrix JSON {"rows": [[...]]}')
    s.add_argument("--cut", default=None, help="only solve the distance LP for this shore")
    s.set_defaults(func=cmd_adversary)

    s = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"cutdim: refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except MalformedInputError as exc:
        print(f"cutdim: malformed input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"cutdim: internal check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except CutDimError as exc:
        print(f"cutdim: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
