# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""本 package 包含非交换多项式、算术电路、矩阵恒等式检查、理想与证书、张量以及证明检查等（后端）的类与函数
"""

from .circuit import (
    Circuit,
    CircuitBuilder,
    LoweredFamily,
    expand,
    formula_equal,
    gate_isomorphic,
    matrix_expand,
    parse_circuit,
    print_circuit,
)
from .errors import (
    CapExceededError,
    CircuitStructureError,
    DocumentError,
    FieldMismatchError,
    NcpiError,
    ParseError,
    PreconditionError,
)
from .fields import QQ_FIELD, Field, parse_field, prime_field
from .freealg import NcPoly, VarRef, format_poly, parse_poly, standard_poly, x, z
from .ideals import (
    GenerationCertificate,
    SubstitutionInstance,
    compose_certificates,
    multilinear_membership,
    q_commutator_exact,
    verify_certificate,
)
from .matcheck import IdentityVerdict, al_suite, check_identity, matrix_unit_check, random_check, symbolic_check
from .proofsys import ProofScript, SystemSpec, check_proof, count_lines, make_system, soundness_spotcheck
from .spoly import RankDecomposition, Tensor, counting_bound, make_s_poly, poly_from_tensor, tensor_rank_bruteforce
from .validators import DocumentPathValidator, PrimeValidator
