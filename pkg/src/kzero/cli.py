"""Command line interface.

One verb per calculator operation; every verb prints its result on the last
line of stdout in the canonical text form, so outputs are byte-stable and
re-parseable.  Exit codes: 0 on success, 2 when an input (file or argument)
cannot be parsed, 3 when a documented precondition is violated.
"""

from __future__ import annotations

import argparse
import sys

from .classpoly import ClassPoly, parse_poly
from .classseries import macdonald_series
from .errors import InputSyntaxError, PreconditionError
from .permgroups import (
    cyclic_product_class,
    parse_group_text,
    permutation_product_class,
)
from .polyhedral import (
    PolyPair,
    delta_config_class,
    fat_wedge_class,
    m_complement_class,
    polyhedral_product_class,
    polyhedral_product_complement_class,
)
from .quotients import (
    burnside_class,
    centralizer_sum_class,
    crystal_chi,
    descriptor_class,
    has_unique_fixed_point,
    orbifold_euler,
    orbit_sum_class,
    parse_affine_map_text,
    parse_cells_text,
    parse_descriptor_text,
    parse_gspace_text,
    parse_isometry_classes_text,
)
from .simplicial import SimplicialComplex
from .zerocycles import ZeroCycleTable, closed_series, ratio_series


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputSyntaxError(f"cannot read {path}: {e.strerror or e}") from None


def _class_arg(text: str) -> ClassPoly:
    return parse_poly(text)


def _render_poly(p: ClassPoly, latex: bool) -> str:
    return p.latex() if latex else str(p)


def _render_series(s, latex: bool) -> str:
    return s.latex() if latex else str(s)


def _print_poset(rendered: str) -> None:
    for line in rendered.splitlines():
        print(f"# {line}")


def cmd_polyprod(args: argparse.Namespace) -> None:
    K = SimplicialComplex.from_text(_read_file(args.complex))
    pair = PolyPair(_class_arg(args.X), _class_arg(args.A))
    print(_render_poly(polyhedral_product_class(K, pair), args.latex))


def cmd_complement(args: argparse.Namespace) -> None:
    K = SimplicialComplex.from_text(_read_file(args.complex))
    pair = PolyPair(_class_arg(args.X), _class_arg(args.A))
    result, rendered = polyhedral_product_complement_class(K, pair, show_poset=True)
    if args.show_poset:
        _print_poset(rendered)
    print(_render_poly(result, args.latex))


def cmd_fatwedge(args: argparse.Namespace) -> None:
    print(_render_poly(fat_wedge_class(args.n, args.d, _class_arg(args.X)), args.latex))


def cmd_config(args: argparse.Namespace) -> None:
    K = SimplicialComplex.from_text(_read_file(args.complex))
    print(_render_poly(delta_config_class(K, _class_arg(args.X)), args.latex))


def cmd_config_complement(args: argparse.Namespace) -> None:
    K = SimplicialComplex.from_text(_read_file(args.complex))
    result, rendered = m_complement_class(K, _class_arg(args.X), show_poset=True)
    if args.show_poset:
        _print_poset(rendered)
    print(_render_poly(result, args.latex))


def cmd_permprod(args: argparse.Namespace) -> None:
    G = parse_group_text(_read_file(args.group))
    print(_render_poly(permutation_product_class(G, _class_arg(args.X)), args.latex))


def cmd_cycprod(args: argparse.Namespace) -> None:
    print(_render_poly(cyclic_product_class(args.n, _class_arg(args.X)), args.latex))


def cmd_symprod_series(args: argparse.Namespace) -> None:
    print(_render_series(macdonald_series(_class_arg(args.X), args.order), args.latex))


def cmd_zerocycles(args: argparse.Namespace) -> None:
    if args.table:
        table = ZeroCycleTable(args.m, args.n, _class_arg(args.X), args.order)
        for d, value in table.entries():
            print(f"{','.join(map(str, d))}: {_render_poly(value, args.latex)}")
        return
    print(_render_series(closed_series(args.m, args.n, _class_arg(args.X), args.order), args.latex))


def cmd_ratio(args: argparse.Namespace) -> None:
    print(_render_series(ratio_series(args.m, args.n, _class_arg(args.X), args.order), args.latex))


def cmd_quotient(args: argparse.Namespace) -> None:
    space = parse_gspace_text(_read_file(args.space))
    result = centralizer_sum_class(space)
    check = burnside_class(space)
    orbit = orbit_sum_class(space)
    if result != check or result != orbit:
        raise RuntimeError("internal error: quotient routes disagree")
    print(_render_poly(result, args.latex))


def cmd_quotient_descriptor(args: argparse.Namespace) -> None:
    descriptor = parse_descriptor_text(_read_file(args.descriptor))
    print(_render_poly(descriptor_class(descriptor), args.latex))


def cmd_orbifold_euler(args: argparse.Namespace) -> None:
    cells = parse_cells_text(_read_file(args.cells))
    print(orbifold_euler(cells))


def cmd_crystal(args: argparse.Namespace) -> None:
    classes = parse_isometry_classes_text(_read_file(args.descriptor))
    print(crystal_chi(classes))


def cmd_fixed_point(args: argparse.Namespace) -> None:
    affine = parse_affine_map_text(_read_file(args.map))
    print("yes" if has_unique_fixed_point(affine) else "no")


def cmd_eval(args: argparse.Namespace) -> None:
    poly = parse_poly(args.expr)
    if not args.at:
        print(_render_poly(poly, args.latex))
        return
    assignment: dict[str, int] = {}
    for item in args.at:
        if "=" not in item:
            raise InputSyntaxError(f"expected NAME=INT, got {item!r}")
        name, _, value = item.partition("=")
        try:
            assignment[name.strip()] = int(value.strip())
        except ValueError:
            raise InputSyntaxError(f"expected an integer value in {item!r}") from None
    print(poly.evaluate(assignment))


def _add_latex(p: argparse.ArgumentParser) -> None:
    p.add_argument("--latex", action="store_true", help="render output for LaTeX")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kzero",
        description="exact Grothendieck class calculator for stratified spaces",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("polyprod", help="class of a polyhedral product (X, A)^K")
    p.add_argument("--complex", required=True, metavar="PATH")
    p.add_argument("--X", required=True, help="class of X (polynomial or integer)")
    p.add_argument("--A", required=True, help="class of A")
    _add_latex(p)
    p.set_defaults(run=cmd_polyprod)

    p = sub.add_parser("complement", help="class of X^n minus a polyhedral product")
    p.add_argument("--complex", required=True, metavar="PATH")
    p.add_argument("--X", required=True)
    p.add_argument("--A", required=True)
    p.add_argument("--show-poset", action="store_true", help="print the intersection poset")
    _add_latex(p)
    p.set_defaults(run=cmd_complement)

    p = sub.add_parser("fatwedge", help="class of tuples with at most d coordinates off basepoint")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--X", required=True)
    _add_latex(p)
    p.set_defaults(run=cmd_fatwedge)

    p = sub.add_parser("config", help="class of the diagonal arrangement Delta_K(X)")
    p.add_argument("--complex", required=True, metavar="PATH")
    p.add_argument("--X", required=True)
    _add_latex(p)
    p.set_defaults(run=cmd_config)

    p = sub.add_parser("config-complement", help="class of X^n minus Delta_K(X)")
    p.add_argument("--complex", required=True, metavar="PATH")
    p.add_argument("--X", required=True)
    p.add_argument("--show-poset", action="store_true", help="print the intersection poset")
    _add_latex(p)
    p.set_defaults(run=cmd_config_complement)

    p = sub.add_parser("permprod", help="class of X^n / G for a subgroup G of S_n")
    p.add_argument("--group", required=True, metavar="PATH")
    p.add_argument("--X", required=True)
    _add_latex(p)
    p.set_defaults(run=cmd_permprod)

    p = sub.add_parser("cycprod", help="class of the cyclic product X^n / (Z/n)")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--X", required=True)
    _add_latex(p)
    p.set_defaults(run=cmd_cycprod)

    p = sub.add_parser("symprod-series", help="symmetric product series (1 - t)^(-x)")
    p.add_argument("--X", required=True)
    p.add_argument("--order", required=True, type=int)
    _add_latex(p)
    p.set_defaults(run=cmd_symprod_series)

    p = sub.add_parser("zerocycles", help="0-cycle series, or the full table with --table")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--X", required=True)
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--table", action="store_true", help="dump degree vector -> class lines")
    _add_latex(p)
    p.set_defaults(run=cmd_zerocycles)

    p = sub.add_parser("ratio", help="0-cycle series divided by the symmetric product series")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--X", required=True)
    p.add_argument("--order", required=True, type=int)
    _add_latex(p)
    p.set_defaults(run=cmd_ratio)

    p = sub.add_parser("quotient", help="class of X/G from a stratified G-space file")
    p.add_argument("--space", required=True, metavar="PATH")
    _add_latex(p)
    p.set_defaults(run=cmd_quotient)

    p = sub.add_parser("quotient-descriptor", help="class of X/Gamma from an action descriptor")
    p.add_argument("--descriptor", required=True, metavar="PATH")
    _add_latex(p)
    p.set_defaults(run=cmd_quotient_descriptor)

    p = sub.add_parser("orbifold-euler", help="orbifold Euler characteristic from cell data")
    p.add_argument("--cells", required=True, metavar="PATH")
    p.set_defaults(run=cmd_orbifold_euler)

    p = sub.add_parser("crystal", help="Euler characteristic of R^n / Gamma from isometry classes")
    p.add_argument("--descriptor", required=True, metavar="PATH")
    p.set_defaults(run=cmd_crystal)

    p = sub.add_parser("fixed-point", help="does an affine map have a unique fixed point")
    p.add_argument("--map", required=True, metavar="PATH")
    p.set_defaults(run=cmd_fixed_point)

    p = sub.add_parser("eval", help="parse a polynomial; evaluate it with --at assignments")
    p.add_argument("expr", help="polynomial text")
    p.add_argument("--at", action="append", default=[], metavar="NAME=INT")
    _add_latex(p)
    p.set_defaults(run=cmd_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.run(args)
    except InputSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
