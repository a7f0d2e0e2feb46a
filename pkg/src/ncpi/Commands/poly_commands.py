# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""poly 子命令：规范化输出、齐次分量、多重齐次分量、括号映射、标准多项式"""

__all__ = ["add_parsers"]

import argparse

from ..Constants import Grading
from ..Core.circuit import standard_circuit
from ..Core.freealg import (
    bracket_map,
    format_poly,
    homogeneous_part,
    is_multilinear,
    multihomogeneous_components,
    standard_poly,
    x,
)
from .inputs import read_poly
from .reporting import Report
from .run_config import RunConfig


def run_show(args: argparse.Namespace, config: RunConfig) -> Report:
    f = read_poly(config.inputs[0], config.field)
    report = Report(config)
    variables = f.variables()
    report.data = {
        "poly": format_poly(f),
        "degree": f.degree(),
        "terms": len(f),
        "variables": [str(v) for v in variables],
        "multilinear": is_multilinear(f, variables),
    }
    report.add(f"poly: {report.data['poly']}")
    report.add(f"degree: {report.data['degree']}, terms: {len(f)}")
    report.add(f"variables: {', '.join(report.data['variables']) or '-'}")
    report.add(f"multilinear: {'yes' if report.data['multilinear'] else 'no'}")
    return report


def run_homogeneous(args: argparse.Namespace, config: RunConfig) -> Report:
    f = read_poly(config.inputs[0], config.field)
    part = homogeneous_part(f, args.degree, Grading(args.grading))
    report = Report(config, data={"degree": args.degree, "grading": args.grading, "poly": format_poly(part)})
    report.add(f"{args.grading} degree {args.degree} part: {format_poly(part)}")
    return report


def run_components(args: argparse.Namespace, config: RunConfig) -> Report:
    f = read_poly(config.inputs[0], config.field)
    components = [format_poly(c) for c in multihomogeneous_components(f)]
    report = Report(config, data={"components": components})
    for text in components:
        report.add(text)
    return report


def run_bracket(args: argparse.Namespace, config: RunConfig) -> Report:
    f = read_poly(config.inputs[0], config.field)
    image = format_poly(bracket_map(f))
    report = Report(config, data={"poly": image})
    report.add(f"<f> = {image}")
    return report


def run_standard(args: argparse.Namespace, config: RunConfig) -> Report:
    n = args.n
    report = Report(config)
    if args.circuit:
        circuit = standard_circuit(n, field=config.field)
        report.data = {"n": n, "circuit_size": circuit.size}
        report.add(f"S_{n} subset circuit: {circuit.size} gates")
    else:
        f = standard_poly([x(i) for i in range(1, n + 1)], config.field)
        report.data = {"n": n, "poly": format_poly(f), "terms": len(f)}
        report.add(f"S_{n} = {report.data['poly']}")
    return report


def add_parsers(subparsers, common: argparse.ArgumentParser, texts: dict[str, str]) -> None:
    """注册 poly 子命令"""

    poly = subparsers.add_parser("poly", help=texts.get("poly"), description=texts.get("poly"))
    actions = poly.add_subparsers(dest="action", required=True, metavar="ACTION")

    show = actions.add_parser("show", parents=[common], help="normalise and print a polynomial")
    show.add_argument("inputs", nargs=1, metavar="POLY")
    show.set_defaults(handler=run_show)

    homogeneous = actions.add_parser("homogeneous", parents=[common], help="homogeneous part of a given degree")
    homogeneous.add_argument("inputs", nargs=1, metavar="POLY")
    homogeneous.add_argument("--degree", type=int, required=True)
    homogeneous.add_argument("--grading", choices=[g.value for g in Grading], default=Grading.total.value)
    homogeneous.set_defaults(handler=run_homogeneous)

    components = actions.add_parser("components", parents=[common], help="multi-homogeneous components")
    components.add_argument("inputs", nargs=1, metavar="POLY")
    components.set_defaults(handler=run_components)

    bracket = actions.add_parser("bracket", parents=[common], help="bracket map M1 z M2 -> z M2 M1")
    bracket.add_argument("inputs", nargs=1, metavar="POLY")
    bracket.set_defaults(handler=run_bracket)

    standard = actions.add_parser("standard", parents=[common], help="standard polynomial S_n")
    standard.add_argument("n", type=int)
    standard.add_argument("--circuit", action="store_true", help="build the subset circuit instead of expanding")
    standard.set_defaults(handler=run_standard)
