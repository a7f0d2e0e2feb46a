# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""命令行输入的读取：文档路径、语料名或直接给出的公式文本"""

__all__ = [
    "read_document",
    "read_target",
    "read_poly",
]

from typing import Any, Union

from ..Core.circuit import Circuit, circuit_from_document
from ..Core.errors import DocumentError
from ..Core.fields import Field
from ..Core.freealg import NcPoly, parse_poly
from ..Core.ideals import builtin_basis_element
from ..Core.validators import DocumentPathValidator
from ..Utilities.documents import load_document


def read_document(path: str) -> Any:
    """:raise DocumentError: 路径不可读"""

    if not DocumentPathValidator.validate(path):
        raise DocumentError(f"Cannot read document {path!r}.")
    return load_document(path)


def _parse(value: str, field: Field) -> NcPoly:
    builtin = builtin_basis_element(value.strip(), field)
    return builtin if builtin is not None else parse_poly(value, field)


def read_poly(value: str, field: Field) -> NcPoly:
    """公式文本、内置元素名（S4、hall、commutator），或含 poly 键的文档"""

    if DocumentPathValidator.validate(value):
        document = load_document(value)
        if isinstance(document, dict) and "poly" in document:
            return parse_poly(str(document["poly"]), field)
        raise DocumentError(f"Document {value!r} has no 'poly'.")
    return _parse(value, field)


def read_target(value: str, field: Field) -> Union[NcPoly, Circuit]:
    """电路文档（含 gates 键）、多项式文档，或公式文本"""

    if DocumentPathValidator.validate(value):
        document = load_document(value)
        if isinstance(document, dict) and "gates" in document:
            return circuit_from_document(document)
        if isinstance(document, dict) and "poly" in document:
            return parse_poly(str(document["poly"]), field)
        raise DocumentError(f"Document {value!r} is neither a circuit nor a polynomial.")
    return _parse(value, field)
