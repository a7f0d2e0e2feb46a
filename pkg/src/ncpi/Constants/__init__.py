# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""各类常量、枚举值与全局变量"""

from .algebra_constants import (
    AxiomKind,
    CheckMethod,
    GateOp,
    Grading,
    OutputFormat,
    RuleKind,
    SystemVariant,
    VarKind,
    VerdictKind,
)
from .app_constants import AppConstant, Limits
from .runtime_info import RUNTIME_INFO, RuntimeInfo, get_runtime_info
