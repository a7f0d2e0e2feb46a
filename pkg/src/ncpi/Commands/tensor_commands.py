# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""tensor 与 bound 子命令"""

__all__ = ["add_parsers"]

import argparse

from ..Core.errors import DocumentError
from ..Core.freealg import format_poly
from ..Core.ideals import certificate_to_document, verify_certificate
from ..Core.spoly import (
    cert_from_decomposition,
    counting_bound,
    poly_from_tensor,
    tensor_from_document,
    tensor_rank_bruteforce,
)
from .inputs import read_document
from .reporting import Report
from .run_config import RunConfig


def _load(args: argparse.Namespace, config: RunConfig):
    document = read_document(config.inputs[0])
    if args.field is not None and isinstance(document, dict):
        document = {**document, "field": args.field}
    return tensor_from_document(document)


def run_to_poly(args: argparse.Namespace, config: RunConfig) -> Report:
    tensor, _ = _load(args, config)
    polys = [format_poly(f) for f in poly_from_tensor(tensor)]
    report = Report(config, data={"polys": polys})
    for j, text in enumerate(polys, start=1):
        report.add(f"f_{j} = {text}")
    return report


def run_to_cert(args: argparse.Namespace, config: RunConfig) -> Report:
    tensor, decomposition = _load(args, config)
    if decomposition is None:
        raise DocumentError("Tensor document carries no 'decomposition'.")
    certificates = cert_from_decomposition(decomposition)
    checks = [verify_certificate(c) for c in certificates]
    ok = all(c.valid and c.instance_count <= len(decomposition) for c in checks) and decomposition.tensor() == tensor
    report = Report(
        config,
        ok=ok,
        data={
            "rank_bound": len(decomposition),
            "certificates": [certificate_to_document(c) for c in certificates],
            "instance_counts": [c.instance_count for c in checks],
            "valid": [c.valid for c in checks],
        },
    )
    for j, check in enumerate(checks, start=1):
        report.add(f"f_{j}: {check.instance_count} <= {len(decomposition)} instance(s), {'valid' if check.valid else 'INVALID'}")
    return report


def run_rank(args: argparse.Namespace, config: RunConfig) -> Report:
    tensor, _ = _load(args, config)
    result = tensor_rank_bruteforce(tensor, args.max_rank, config.threads)
    report = Report(
        config,
        data={
            "rank": result.rank,
            "exceeded": result.exceeded,
            "max_rank": args.max_rank,
            "candidates_checked": result.candidates_checked,
        },
    )
    if result.exceeded:
        report.add(f"rank exceeds {args.max_rank} over {tensor.field}")
    else:
        report.add(f"rank {result.rank} over {tensor.field}")
    if args.expect is not None:
        report.ok = result.rank == args.expect
    return report


def run_bound(args: argparse.Namespace, config: RunConfig) -> Report:
    bound = counting_bound(args.n, args.d)
    report = Report(config, data={"value": bound.value, "binomial": bound.binomial, "expression": bound.expression})
    report.add(bound.value)
    return report


def add_parsers(subparsers, common: argparse.ArgumentParser, texts: dict[str, str]) -> None:
    """注册 tensor、bound 子命令"""

    tensor = subparsers.add_parser("tensor", help=texts.get("tensor"), description=texts.get("tensor"))
    actions = tensor.add_subparsers(dest="action", required=True, metavar="ACTION")

    to_poly = actions.add_parser("to-poly", parents=[common], help="corresponding polynomials of a tensor")
    to_poly.add_argument("inputs", nargs=1, metavar="TENSOR")
    to_poly.set_defaults(handler=run_to_poly)

    to_cert = actions.add_parser("to-cert", parents=[common], help="certificates from a rank decomposition")
    to_cert.add_argument("inputs", nargs=1, metavar="TENSOR")
    to_cert.set_defaults(handler=run_to_cert)

    rank = actions.add_parser("rank", parents=[common], help="brute-force tensor rank over a small prime field")
    rank.add_argument("inputs", nargs=1, metavar="TENSOR")
    rank.add_argument("--max-rank", type=int, required=True)
    rank.add_argument("--expect", type=int, default=None)
    rank.set_defaults(handler=run_rank)

    bound = subparsers.add_parser("bound", parents=[common], help=texts.get("bound"), description=texts.get("bound"))
    bound.add_argument("--n", type=int, required=True)
    bound.add_argument("--d", type=int, required=True)
    bound.set_defaults(handler=run_bound)
