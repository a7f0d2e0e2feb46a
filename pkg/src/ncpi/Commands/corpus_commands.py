# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""corpus 子命令：运行随包发布的全部语料

每个语料文件用 kind 键声明类型，由对应的运行函数检查其中记录的期望结果。
各文件并行运行，结果按文件名顺序汇总。
"""

__all__ = [
    "add_parsers",
    "run_fixture",
    "CORPUS_RUNNERS",
]

import argparse
import logging
from typing import Any, Callable

from ..Constants import CheckMethod, VerdictKind
from ..Core.circuit import circuit_from_document, expand, lowering_size_bound, matrix_expand
from ..Core.errors import NcpiError
from ..Core.fields import parse_field
from ..Core.freealg import format_poly, parse_poly
from ..Core.ideals import (
    builtin_basis_element,
    certificate_from_document,
    compose_certificates,
    composition_bound,
    composition_from_document,
    membership_from_document,
    multilinear_membership,
    verify_certificate,
)
from ..Core.matcheck import check_identity, verify_witness
from ..Core.proofsys import check_proof, proof_from_document, soundness_spotcheck
from ..Core.spoly import cert_from_decomposition, poly_from_tensor, tensor_from_document, tensor_rank_bruteforce
from ..Utilities.documents import list_corpus, load_document
from ..Utilities.parallel import ordered_map
from .reporting import Report
from .run_config import RunConfig

logger = logging.getLogger(__name__)

FixtureRunner = Callable[[dict[str, Any], RunConfig], list[str]]


def _run_identities(document: dict[str, Any], config: RunConfig) -> list[str]:
    errors = []
    for number, case in enumerate(document.get("cases") or [], start=1):
        field = parse_field(case.get("field", "QQ"))
        if "element" in case:
            target = builtin_basis_element(str(case["element"]), field)
            if target is None:
                errors.append(f"case {number}: unknown element {case['element']!r}")
                continue
        else:
            target = parse_poly(str(case["poly"]), field)
        verdict = check_identity(
            target,
            int(case["d"]),
            CheckMethod(case.get("method", "symbolic")),
            case.get("p"),
            case.get("trials"),
            config.seed,
            config.threads,
        )
        expected = VerdictKind(case["expect"])
        if verdict.kind is not expected:
            errors.append(f"case {number}: expected {expected.value}, got {verdict.kind.value}")
        elif verdict.witness is not None and not verify_witness(target, verdict):
            errors.append(f"case {number}: witness does not evaluate to a nonzero matrix")
    return errors


def _run_lowering(document: dict[str, Any], config: RunConfig) -> list[str]:
    circuit = circuit_from_document(document)
    d = int(document["d"])
    family = matrix_expand(circuit, d)
    errors = []
    if family.size > lowering_size_bound(circuit, d):
        errors.append(f"lowered size {family.size} exceeds the bound {lowering_size_bound(circuit, d)}")
    i, j = document.get("entry", [1, 1])
    got = expand(family.entry_circuit(int(i), int(j)))[0]
    if got != parse_poly(str(document["expect"]), circuit.field):
        errors.append(f"entry ({i},{j}) expands to {format_poly(got)}")
    return errors


def _run_proof(document: dict[str, Any], config: RunConfig) -> list[str]:
    script = proof_from_document(document)
    result = check_proof(script)
    errors = []
    if not result.accepted:
        return [f"rejected at line {result.failed_line}: {result.reason} ({result.detail})"]
    if "expect_lines" in document and result.line_count != int(document["expect_lines"]):
        errors.append(f"expected {document['expect_lines']} lines, found {result.line_count}")
    spot = soundness_spotcheck(script, script.system.d or 1, trials=int(document.get("trials", 50)), seed=config.seed)
    if not spot.clean:
        errors.append(f"spot check found {len(spot.discrepancies)} discrepancies")
    return errors


def _run_certificate(document: dict[str, Any], config: RunConfig) -> list[str]:
    check = verify_certificate(certificate_from_document(document))
    errors = []
    if not check.valid:
        errors.append(f"certificate does not verify, residual {format_poly(check.residual)}")
    if "expect_instances" in document and check.instance_count != int(document["expect_instances"]):
        errors.append(f"expected {document['expect_instances']} instances, found {check.instance_count}")
    return errors


def _run_composition(document: dict[str, Any], config: RunConfig) -> list[str]:
    outer, inner = composition_from_document(document)
    composed = compose_certificates(outer, inner)
    check = verify_certificate(composed)
    r, q = composition_bound(outer, inner)
    errors = []
    if not check.valid:
        errors.append(f"composed certificate does not verify, residual {format_poly(check.residual)}")
    if check.instance_count > r * q:
        errors.append(f"composed certificate uses {check.instance_count} > {r}*{q} instances")
    return errors


def _run_membership(document: dict[str, Any], config: RunConfig) -> list[str]:
    target, generators, variables = membership_from_document(document)
    result = multilinear_membership(target, generators, variables)
    errors = []
    verdict = "member" if result.member else "non_member"
    if verdict != document["expect"]:
        errors.append(f"expected {document['expect']}, got {verdict}")
    if result.certificate is not None and not verify_certificate(result.certificate).valid:
        errors.append("membership certificate does not verify")
    return errors


def _run_tensor(document: dict[str, Any], config: RunConfig) -> list[str]:
    tensor, decomposition = tensor_from_document(document)
    errors = []
    if "expect_polys" in document:
        polys = poly_from_tensor(tensor)
        expected = [parse_poly(str(text), tensor.field) for text in document["expect_polys"]]
        if polys != expected:
            errors.append(f"corresponding polynomials are {[format_poly(f) for f in polys]}")
    if decomposition is not None and tensor.order % 2 == 1 and tensor.order >= 3:
        for j, check in enumerate(map(verify_certificate, cert_from_decomposition(decomposition)), start=1):
            if not check.valid or check.instance_count > len(decomposition):
                errors.append(f"certificate for f_{j} fails ({check.instance_count} instances)")
    if "expect_rank" in document:
        result = tensor_rank_bruteforce(tensor, int(document.get("max_rank", document["expect_rank"])), config.threads)
        if result.rank != int(document["expect_rank"]):
            errors.append(f"expected rank {document['expect_rank']}, found {result.rank}")
    return errors


CORPUS_RUNNERS: dict[str, FixtureRunner] = {
    "identities": _run_identities,
    "lowering": _run_lowering,
    "proof": _run_proof,
    "certificate": _run_certificate,
    "composition": _run_composition,
    "membership": _run_membership,
    "tensor": _run_tensor,
}


def run_fixture(name: str, config: RunConfig) -> list[str]:
    """运行单个语料文件，返回错误信息列表（为空表示通过）"""

    try:
        document = load_document(f"corpus:{name}")
        kind = document.get("kind") if isinstance(document, dict) else None
        runner = CORPUS_RUNNERS.get(kind) if isinstance(kind, str) else None
        if runner is None:
            return [f"unsupported fixture kind {kind!r}"]
        return runner(document, config)
    except (NcpiError, KeyError, TypeError) as e:
        return [f"{type(e).__name__}: {e}"]


def run_corpus(args: argparse.Namespace, config: RunConfig) -> Report:
    names = list_corpus()
    if args.only:
        names = [n for n in names if any(n.startswith(prefix) for prefix in args.only)]
    report = Report(config)
    if args.list:
        report.data = {"fixtures": names}
        report.lines.extend(names)
        return report

    results = ordered_map(lambda name: run_fixture(name, config), names, config.threads)
    failures = {name: errors for name, errors in zip(names, results) if errors}
    report.ok = not failures
    report.data = {"fixtures": len(names), "failures": failures}
    for name, errors in zip(names, results):
        report.add(f"{'ok  ' if not errors else 'FAIL'} {name}")
        for error in errors:
            report.add(f"  - {error}")
            logger.info("%s: %s", name, error)
    report.add(f"[corpus] {'OK' if report.ok else 'FAIL'} ({len(names) - len(failures)}/{len(names)} fixtures)")
    return report


def add_parsers(subparsers, common: argparse.ArgumentParser, texts: dict[str, str]) -> None:
    """注册 corpus 子命令"""

    corpus = subparsers.add_parser("corpus", parents=[common], help=texts.get("corpus"), description=texts.get("corpus"))
    corpus.add_argument("--list", action="store_true", help="list the packaged fixtures and exit")
    corpus.add_argument("--only", action="append", default=None, help="run fixtures whose name starts with PREFIX")
    corpus.set_defaults(handler=run_corpus)
