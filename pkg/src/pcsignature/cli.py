"""Command-line front end: ``pcsign <command> ...``.

Element arguments are paths to documents in the text format, or ``-`` for
standard input.  Commands taking several elements read them in application
order, leftmost applied last (``compose f g`` prints ``f ∘ g``).

Exit status: 0 on success, 1 when ``verify`` finds a failing property, 2 for
usage, parse and precondition errors.
"""

from __future__ import annotations

import argparse
import sys

from . import decomposition, elements, subgroups
from .intervals import format_rational, make_partition, parse_rational
from .render import render_svg
from .signature import signature, signature_at
from .textformat import ElementParseError, parse_element, serialize_element
from .verify import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> elements.PwMap:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_element(text)
    except ElementParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _rat(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _flip_list(intervals) -> str:
    return " ".join(str(iv) for iv in intervals) if intervals else "(none)"


def cmd_eval(args, out):
    h = _read(args.element)
    out.write(format_rational(elements.apply(h, _rat(args.x))) + "\n")


def cmd_sign(args, out):
    h = _read(args.element)
    if args.partition:
        p = make_partition(_rat(x) for x in args.partition.split(","))
        out.write(f"{int(signature_at(h, p))}\n")
    else:
        out.write(f"{int(signature(h))}\n")


def cmd_compose(args, out):
    out.write(serialize_element(elements.compose_all(_read(p) for p in args.elements)))


def cmd_invert(args, out):
    out.write(serialize_element(elements.inverse(_read(args.element))))


def cmd_decompose(args, out):
    h = _read(args.element)
    if args.kind == "rsf":
        d = decomposition.decompose_r_sigma_f(h)
        out.write(f"# r\n{_flip_list(d.r)}\n# sigma\n{d.sigma}\n# f\n{serialize_element(d.f)}")
    elif args.kind == "gts":
        d = decomposition.decompose_g_tau_s(h)
        out.write(f"# g\n{serialize_element(d.g)}# tau\n{d.tau}\n# s\n{_flip_list(d.s)}\n")
    elif args.kind == "homeo":
        d = decomposition.normalize_to_iet(h)
        out.write(f"# f\n{serialize_element(d.f)}# phi\n{serialize_element(d.phi)}")
    elif args.kind == "swaps":
        for i, j in decomposition.swaps_factorization(h):
            out.write(f"{i} {j}\n")
    else:
        w = decomposition.flips_factorization(h)
        out.write(f"# flips\n{_flip_list(w.flips)}\n# residual\n{w.residual}\n")


def cmd_classify(args, out):
    h = _read(args.element)
    feats = elements.classify_features(h)
    for key, value in vars(feats).items():
        out.write(f"{key}: {str(value).lower() if isinstance(value, bool) else value}\n")
    out.write(f"minimal_partition: {elements.minimal_partition(h)}\n")
    out.write(f"signature: {int(signature(h))}\n")
    out.write(f"normal_level: {subgroups.classify_normal(h).name}\n")


def cmd_witness(args, out):
    g = _read(args.element)
    if args.kind == "simplicity":
        i, h = subgroups.simplicity_witness(g)
        out.write(f"# interval\n{i}\n# commutator\n{serialize_element(h)}")
    elif args.kind == "rc":
        out.write(serialize_element(subgroups.normalizer_witness_rc(g)))
    else:
        out.write(serialize_element(subgroups.normalizer_witness_orientation(g)))


def cmd_order(args, out):
    out.write(f"{elements.element_order_upto(_read(args.element), args.max)}\n")


def cmd_render(args, out):
    svg = render_svg(_read(args.element))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        out.write(svg)


def cmd_verify(args, out):
    results = run_all(args.seed, args.count)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        out.write(f"{status} {r.name} ({r.checks} checks)\n")
        for what in r.failures[:5]:
            out.write(f"    {what}\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcsign", description="Signature and decompositions of piecewise-affine bijections of [0,1)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an element at a point")
    p.add_argument("element")
    p.add_argument("x", help="rational point p/q in [0,1)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sign", help="print the signature (0 or 1)")
    p.add_argument("element")
    p.add_argument("--partition", help="comma-separated cut points of an associated partition")
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("compose", help="compose elements, leftmost applied last")
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("invert", help="inverse element")
    p.add_argument("element")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("decompose", help="factorizations")
    p.add_argument("kind", choices=["rsf", "gts", "homeo", "swaps", "flips"])
    p.add_argument("element")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify", help="features and normal-subgroup level")
    p.add_argument("element")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", help="simplicity and normalizer witnesses")
    p.add_argument("kind", choices=["simplicity", "rc", "orientation"])
    p.add_argument("element")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("order", help="order of an element, up to a bound")
    p.add_argument("element")
    p.add_argument("--max", type=int, default=12)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("render", help="SVG graph")
    p.add_argument("element")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run the seeded property battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=40, help="samples per suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "max", 1) < 1:
        print("pcsign: --max must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        status = args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"pcsign: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if status is None else status


if __name__ == "__main__":
    sys.exit(main())
