# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""identity、al、lower 子命令"""

__all__ = ["add_parsers"]

import argparse

from ..Constants import CheckMethod, Limits, VerdictKind
from ..Core.circuit import Circuit, expand, from_poly, lowering_size_bound, matrix_expand
from ..Core.errors import PreconditionError
from ..Core.freealg import format_poly
from ..Core.matcheck import IdentityVerdict, al_suite, check_identity, verify_witness
from ..Core.validators import PrimeValidator
from .inputs import read_target
from .reporting import Report
from .run_config import RunConfig


def _describe(label: str, verdict: IdentityVerdict) -> str:
    if verdict.kind is VerdictKind.identity:
        return f"{label}: yes"
    if verdict.kind is VerdictKind.probable:
        caveat = ", heuristic" if verdict.heuristic else ""
        return f"{label}: probably (failure bound {float(verdict.failure_bound or 0):.3g}{caveat})"
    witness = ", ".join(
        f"{v}={[[verdict.field.to_str(c) for c in row] for row in m.to_list()]}"
        for v, m in sorted((verdict.witness or {}).items())
    )
    return f"{label}: no (witness {witness})"


def run_identity(args: argparse.Namespace, config: RunConfig) -> Report:
    if args.p is not None and not PrimeValidator.validate(args.p):
        raise PreconditionError(f"{args.p} is not a usable prime.")
    target = read_target(config.inputs[0], config.field)
    verdict = check_identity(
        target, args.d, CheckMethod(args.method), args.p, args.trials, config.seed, config.threads
    )
    report = Report(config, data=verdict.to_dict())
    report.add(_describe(f"identity of Mat_{args.d}", verdict))
    if verdict.witness is not None:
        report.data["witness_verified"] = verify_witness(target, verdict)
    if args.expect is not None:
        expected = VerdictKind(args.expect)
        report.ok = verdict.kind is expected or (
            expected is VerdictKind.identity and verdict.kind is VerdictKind.probable and not verdict.heuristic
        )
    return report


def run_al(args: argparse.Namespace, config: RunConfig) -> Report:
    result = al_suite(args.d, args.trials, config.seed, config.threads)
    report = Report(config, ok=result.passed, data=result.to_dict())
    report.add(
        "; ".join(
            [
                _describe(f"S_{2 * args.d} identity of Mat_{args.d}", result.even),
                _describe(f"S_{2 * args.d - 1}", result.odd),
            ]
        )
    )
    return report


def run_lower(args: argparse.Namespace, config: RunConfig) -> Report:
    target = read_target(config.inputs[0], config.field)
    circuit = target if isinstance(target, Circuit) else from_poly(target)
    family = matrix_expand(circuit, args.d)
    bound = lowering_size_bound(circuit, args.d)
    report = Report(
        config,
        ok=family.size <= bound,
        data={
            "d": args.d,
            "size": circuit.size,
            "lowered_size": family.size,
            "bound": bound,
            "constant": Limits.LOWERING_SIZE_CONSTANT,
        },
    )
    report.add(f"size {circuit.size} -> {family.size} (bound {bound} = {Limits.LOWERING_SIZE_CONSTANT}*d^3*size)")
    if args.entry is not None:
        i, j = args.entry
        poly = expand(family.entry_circuit(i, j))[0]
        report.data["entry"] = {"i": i, "j": j, "poly": format_poly(poly)}
        report.add(f"entry ({i},{j}): {format_poly(poly)}")
    return report


def add_parsers(subparsers, common: argparse.ArgumentParser, texts: dict[str, str]) -> None:
    """注册 identity、al、lower 子命令"""

    identity = subparsers.add_parser(
        "identity", parents=[common], help=texts.get("identity"), description=texts.get("identity")
    )
    identity.add_argument("inputs", nargs=1, metavar="TARGET", help="polynomial text or circuit document")
    identity.add_argument("--d", type=int, required=True)
    identity.add_argument("--method", choices=[m.value for m in CheckMethod], default=CheckMethod.symbolic.value)
    identity.add_argument("--p", type=int, default=None)
    identity.add_argument("--trials", type=int, default=None)
    identity.add_argument("--expect", choices=[k.value for k in VerdictKind], default=None)
    identity.set_defaults(handler=run_identity)

    al = subparsers.add_parser("al", parents=[common], help=texts.get("al"), description=texts.get("al"))
    al.add_argument("--d", type=int, required=True)
    al.add_argument("--trials", type=int, default=None)
    al.set_defaults(handler=run_al)

    lower = subparsers.add_parser("lower", parents=[common], help=texts.get("lower"), description=texts.get("lower"))
    lower.add_argument("inputs", nargs=1, metavar="TARGET")
    lower.add_argument("--d", type=int, required=True)
    lower.add_argument("--entry", type=int, nargs=2, metavar=("I", "J"), default=None)
    lower.set_defaults(handler=run_lower)
