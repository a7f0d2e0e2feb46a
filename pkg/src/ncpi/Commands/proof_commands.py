# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""proof 子命令：检查证明、可靠性抽查与行数统计"""

__all__ = ["add_parsers"]

import argparse
from typing import Optional

from ..Constants import Limits
from ..Core.errors import DocumentError
from ..Core.fields import parse_field
from ..Core.ideals import certificate_from_document
from ..Core.proofsys import (
    ProofScript,
    SystemSpec,
    check_proof,
    count_lines,
    make_system,
    proof_from_document,
    soundness_spotcheck,
)
from .inputs import read_document
from .reporting import Report
from .run_config import RunConfig


def _system(args: argparse.Namespace) -> Optional[SystemSpec]:
    if args.system is None:
        return None
    basis = None
    if args.basis is not None:
        document = read_document(args.basis)
        if not isinstance(document, dict):
            raise DocumentError("Basis document must map names to polynomials.")
        basis = {str(k): str(v) for k, v in (document.get("basis", document)).items()}
    field = parse_field(args.field) if args.field is not None else None
    return make_system(args.system, field, args.d, basis)


def _load(args: argparse.Namespace, config: RunConfig) -> ProofScript:
    return proof_from_document(read_document(config.inputs[0]), _system(args))


def _count(report: Report, script: ProofScript, certificate_path: Optional[str]) -> None:
    certificate = None
    if certificate_path is not None:
        certificate = certificate_from_document(read_document(certificate_path))
    count = count_lines(script, certificate)
    report.data["lines"] = count.lines
    if count.certificate_instances is not None:
        report.data["certificate_instances"] = count.certificate_instances
        report.add(f"lines: {count.lines}, goal certificate instances: {count.certificate_instances}")


def run_check(args: argparse.Namespace, config: RunConfig) -> Report:
    script = _load(args, config)
    result = check_proof(script)
    report = Report(config, ok=result.accepted, data={"system": script.system.to_dict(), **result.to_dict()})
    if result.accepted:
        report.add(f"accepted in {script.system.name}, {result.line_count} line(s)")
    elif result.failed_line is not None:
        report.add(f"rejected at line {result.failed_line}: {result.reason} ({result.detail})")
    else:
        report.add(f"rejected: {result.reason} ({result.detail})")
    _count(report, script, args.certificate)

    if args.spotcheck and result.accepted:
        d = args.d or script.system.d or 1
        spot = soundness_spotcheck(script, d, args.p, args.trials, config.seed, config.threads)
        report.data["spotcheck"] = spot.to_dict()
        report.ok = spot.clean
        report.add(
            f"spot check on Mat_{d} over GF({spot.p}), {spot.trials} trials: "
            + ("clean" if spot.clean else f"{len(spot.discrepancies)} discrepancies")
        )
    return report


def run_count(args: argparse.Namespace, config: RunConfig) -> Report:
    script = _load(args, config)
    report = Report(config)
    report.add(f"lines: {len(script)}")
    _count(report, script, args.certificate)
    return report


def add_parsers(subparsers, common: argparse.ArgumentParser, texts: dict[str, str]) -> None:
    """注册 proof 子命令"""

    proof = subparsers.add_parser("proof", help=texts.get("proof"), description=texts.get("proof"))
    actions = proof.add_subparsers(dest="action", required=True, metavar="ACTION")

    system_options = argparse.ArgumentParser(add_help=False)
    system_options.add_argument("inputs", nargs=1, metavar="PROOF")
    system_options.add_argument("--system", default=None, help="pc, pcbool, pmatd or pmat<d>; overrides the document")
    system_options.add_argument("--d", type=int, default=None)
    system_options.add_argument("--basis", default=None, help="basis document {name: polynomial}")
    system_options.add_argument("--certificate", default=None, help="goal certificate for the line-count report")

    check = actions.add_parser("check", parents=[common, system_options], help="check a proof")
    check.add_argument("--spotcheck", action="store_true", help="evaluate every line on random matrices")
    check.add_argument("--p", type=int, default=Limits.DEFAULT_PRIME)
    check.add_argument("--trials", type=int, default=50)
    check.set_defaults(handler=run_check)

    count = actions.add_parser("count", parents=[common, system_options], help="count proof lines")
    count.set_defaults(handler=run_count)
