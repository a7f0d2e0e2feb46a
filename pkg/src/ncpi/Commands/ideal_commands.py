# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""cert、q、membership 子命令"""

__all__ = ["add_parsers"]

import argparse

from ..Core.freealg import format_poly, parse_poly, parse_var, x
from ..Core.ideals import (
    builtin_basis_element,
    certificate_from_document,
    certificate_to_document,
    compose_certificates,
    composition_bound,
    composition_from_document,
    linear_reduce_certificate,
    membership_from_document,
    multilinear_membership,
    q_commutator_exact,
    verify_certificate,
)
from ..Core.validators import DocumentPathValidator
from .inputs import read_document, read_poly
from .reporting import Report
from .run_config import RunConfig


def run_cert_verify(args: argparse.Namespace, config: RunConfig) -> Report:
    certificate = certificate_from_document(read_document(config.inputs[0]))
    check = verify_certificate(certificate)
    report = Report(
        config,
        ok=check.valid,
        data={"valid": check.valid, "instance_count": check.instance_count, "residual": format_poly(check.residual)},
    )
    report.add(f"certificate {'valid' if check.valid else 'INVALID'}, {check.instance_count} instance(s)")
    if not check.valid:
        report.add(f"residual: {format_poly(check.residual)}")
    return report


def run_cert_compose(args: argparse.Namespace, config: RunConfig) -> Report:
    outer, inner = composition_from_document(read_document(config.inputs[0]))
    composed = compose_certificates(outer, inner)
    check = verify_certificate(composed)
    r, q = composition_bound(outer, inner)
    report = Report(
        config,
        ok=check.valid and check.instance_count <= r * q,
        data={
            "valid": check.valid,
            "instance_count": check.instance_count,
            "bound": r * q,
            "certificate": certificate_to_document(composed),
        },
    )
    report.add(f"composed certificate {'valid' if check.valid else 'INVALID'}: {check.instance_count} <= {r}*{q}")
    return report


def run_cert_reduce(args: argparse.Namespace, config: RunConfig) -> Report:
    certificate = certificate_from_document(read_document(config.inputs[0]))
    reduced = linear_reduce_certificate(certificate, args.degree)
    check = verify_certificate(reduced)
    report = Report(
        config,
        ok=check.valid,
        data={"valid": check.valid, "instance_count": check.instance_count, "certificate": certificate_to_document(reduced)},
    )
    report.add(f"degree-{args.degree} part certified with {check.instance_count} instance(s)")
    return report


def run_q(args: argparse.Namespace, config: RunConfig) -> Report:
    f = read_poly(config.inputs[0], config.field)
    result = q_commutator_exact(f)
    check = verify_certificate(result.certificate)
    report = Report(
        config,
        ok=check.valid,
        data={"q": result.q, "rank": result.rank, "certificate": certificate_to_document(result.certificate)},
    )
    report.add(f"Q = {result.q} (antisymmetric rank {result.rank}), certificate {'valid' if check.valid else 'INVALID'}")
    return report


def run_membership(args: argparse.Namespace, config: RunConfig) -> Report:
    source = config.inputs[0]
    if DocumentPathValidator.validate(source):
        target, generators, variables = membership_from_document(read_document(source))
    else:
        field = config.field
        target = parse_poly(source, field)
        generators = []
        for text in args.generator or []:
            builtin = builtin_basis_element(text, field)
            generators.append(builtin if builtin is not None else parse_poly(text, field))
        if args.vars is None:
            variables = list(target.variables())
        elif args.vars.isdigit():
            variables = [x(i) for i in range(1, int(args.vars) + 1)]
        else:
            variables = [parse_var(v) for v in args.vars.split(",")]

    result = multilinear_membership(target, generators, variables)
    report = Report(
        config,
        data={
            "member": result.member,
            "rank": result.rank,
            "dimension": result.dimension,
            "spanning": result.spanning,
        },
    )
    if result.certificate is not None:
        report.data["certificate"] = certificate_to_document(result.certificate)
    verdict = "member" if result.member else "non_member"
    report.add(f"{verdict} (span rank {result.rank} of {result.dimension}, {result.spanning} spanning products)")
    if args.expect is not None:
        report.ok = args.expect == verdict
    return report


def add_parsers(subparsers, common: argparse.ArgumentParser, texts: dict[str, str]) -> None:
    """注册 cert、q、membership 子命令"""

    cert = subparsers.add_parser("cert", help=texts.get("cert"), description=texts.get("cert"))
    actions = cert.add_subparsers(dest="action", required=True, metavar="ACTION")

    verify = actions.add_parser("verify", parents=[common], help="verify a generation certificate")
    verify.add_argument("inputs", nargs=1, metavar="CERT")
    verify.set_defaults(handler=run_cert_verify)

    compose = actions.add_parser("compose", parents=[common], help="compose an outer certificate with inner ones")
    compose.add_argument("inputs", nargs=1, metavar="COMPOSITION")
    compose.set_defaults(handler=run_cert_compose)

    reduce = actions.add_parser("reduce", parents=[common], help="certify the homogeneous part of a given degree")
    reduce.add_argument("inputs", nargs=1, metavar="CERT")
    reduce.add_argument("--degree", type=int, required=True)
    reduce.set_defaults(handler=run_cert_reduce)

    q = subparsers.add_parser("q", parents=[common], help=texts.get("q"), description=texts.get("q"))
    q.add_argument("inputs", nargs=1, metavar="POLY")
    q.set_defaults(handler=run_q)

    membership = subparsers.add_parser(
        "membership", parents=[common], help=texts.get("membership"), description=texts.get("membership")
    )
    membership.add_argument("inputs", nargs=1, metavar="TARGET", help="membership document or polynomial text")
    membership.add_argument("--generator", action="append", help="generator text or built-in name (repeatable)")
    membership.add_argument("--vars", default=None, help="number of variables or a comma-separated list")
    membership.add_argument("--expect", choices=["member", "non_member"], default=None)
    membership.set_defaults(handler=run_membership)
