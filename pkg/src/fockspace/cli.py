"""Command-line front end.

Operators compose with ``*`` acting right to left: in ``adj(h[1])*mul(e[2])``
the multiplication by ``e_2`` happens first.  ``p`` is never defaulted.

Exit status: 0 on success, 1 when a verification suite fails, 2 on usage,
parse or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import verify
from .dsl import ParseError, format_operator, parse_operator, parse_state
from .fock import EvaluationError, basic_rep_span, evaluate, weight_label
from .partitions import format_partition, p_core_and_quotient, parse_partition
from .symfunc import Basis, convert, format_coeff, format_elt, hall_inner, to_json, twist


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_apply(args) -> int:
    op = parse_operator(args.expr)
    v = parse_state(args.state)
    out = evaluate(op, v, args.p)
    _emit(args, format_elt(out), {
        "operator": format_operator(op), "p": args.p, "state": to_json(v), "result": to_json(out),
    })
    return 0


def cmd_inner(args) -> int:
    val = hall_inner(parse_state(args.a), parse_state(args.b))
    _emit(args, format_coeff(val), {"num": str(val.numerator), "den": str(val.denominator)})
    return 0


def cmd_convert(args) -> int:
    try:
        target = Basis.coerce(args.target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = convert(parse_state(args.elt), target)
    _emit(args, format_elt(out), to_json(out))
    return 0


def cmd_twist(args) -> int:
    out = twist(parse_state(args.elt), args.p)
    _emit(args, format_elt(out), to_json(out))
    return 0


def cmd_core(args) -> int:
    lam = _partition(args.partition)
    core, quotient = p_core_and_quotient(lam, args.p)
    text = f"core {format_partition(core)}; quotient " + " ".join(format_partition(q) for q in quotient)
    _emit(args, text, {
        "partition": list(lam), "p": args.p, "core": list(core),
        "quotient": [list(q) for q in quotient],
        "weight": sum(q.size for q in quotient),
    })
    return 0


def cmd_blocks(args) -> int:
    if args.p < 2:
        raise UsageError("blocks need --p >= 2")
    groups: dict = {}
    for text in args.partitions:
        lam = _partition(text)
        groups.setdefault(weight_label(lam, args.p), []).append(lam)
    blocks = []
    lines = []
    for label, members in sorted(groups.items(), key=lambda kv: (kv[0].size, kv[0].counts)):
        core = p_core_and_quotient(members[0], args.p)[0]
        blocks.append({
            "label": {str(k): v for k, v in label.counts},
            "size": label.size,
            "core": list(core),
            "partitions": [list(m) for m in members],
        })
        counts = ",".join(str(c) for c in label.vector())
        lines.append(f"({counts}) core {format_partition(core)}: "
                     + " ".join(format_partition(m) for m in members))
    _emit(args, "\n".join(lines), {"p": args.p, "blocks": blocks})
    return 0


def cmd_basic_rep(args) -> int:
    if args.p < 2:
        raise UsageError("basic-rep needs --p >= 2")
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    layers = basic_rep_span(args.p, args.max_degree)
    payload = {"p": args.p, "degrees": [
        {"n": n, "dimension": len(layer), "basis": [to_json(v) for v in layer]}
        for n, layer in enumerate(layers)
    ]}
    lines = []
    for n, layer in enumerate(layers):
        lines.append(f"degree {n}: dimension {len(layer)}")
        lines.extend(f"  {format_elt(v)}" for v in layer)
    _emit(args, "\n".join(lines), payload)
    return 0


def _bounds(pairs):
    out = {}
    for item in pairs or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--bound expects NAME=INT, got {item!r}")
        try:
            out[key] = int(val)
        except ValueError:
            raise UsageError(f"--bound expects NAME=INT, got {item!r}") from None
    return out


def cmd_verify(args) -> int:
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for name in names:
        cfg = verify.default_config(name)
        changes = {}
        if args.p is not None:
            changes["p_values"] = tuple(args.p)
        if args.max_degree is not None:
            changes["max_degree"] = args.max_degree
        if args.seed is not None:
            changes["seed"] = args.seed
        if args.bound:
            changes["generator_bounds"] = {**cfg.generator_bounds, **_bounds(args.bound)}
        if args.negative_control:
            changes.setdefault("max_failures", 1)
        cfg = replace(cfg, **changes)
        if args.negative_control:
            reports.append(verify.run_negative_control(name, cfg))
        else:
            reports.append(verify.run_suite(cfg))
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, sort_keys=True, indent=2))
    else:
        for r in reports:
            print(r.summary())
            for note in r.notes:
                print(f"  note: {note}")
            for f in r.failures[:5]:
                print(f"  {f.input}: expected {f.expected}, got {f.got}")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockspace",
        description="Exact computations on the Fock space of symmetric functions.",
        epilog="In operator expressions '*' is composition acting right to left: "
               "'adj(h[1])*mul(e[2])' multiplies by e_2 first.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, description=help_, epilog=parser.epilog)
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
        sp.set_defaults(func=func)
        return sp

    sp = add("apply", cmd_apply, "apply an operator expression to a state")
    sp.add_argument("expr")
    sp.add_argument("state")
    sp.add_argument("--p", type=int, required=True)

    sp = add("inner", cmd_inner, "Hall inner product of two states")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("convert", cmd_convert, "rewrite a state in another basis (s, e, h or p)")
    sp.add_argument("elt")
    sp.add_argument("target")

    sp = add("twist", cmd_twist, "substitute x_i -> x_i^p")
    sp.add_argument("elt")
    sp.add_argument("--p", type=int, required=True)

    sp = add("core", cmd_core, "p-core and p-quotient of a partition such as [4,4,2,1]")
    sp.add_argument("partition")
    sp.add_argument("--p", type=int, required=True)

    sp = add("blocks", cmd_blocks, "group partitions by residue-count label")
    sp.add_argument("partitions", nargs="+")
    sp.add_argument("--p", type=int, required=True)

    sp = add("basic-rep", cmd_basic_rep, "basis of U(g).1 degree by degree")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-degree", type=int, required=True)

    sp = add("verify", cmd_verify, "run a verification suite (or 'all')")
    sp.add_argument("suite")
    sp.add_argument("--p", type=int, nargs="+")
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--bound", action="append", metavar="NAME=INT")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--negative-control", action="store_true",
                    help="run against the suite's deliberately broken generator")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, EvaluationError, verify.ConfigError, UsageError, ValueError) as exc:
        print(f"fockspace {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
