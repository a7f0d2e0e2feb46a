# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""公共基础功能类与函数"""

from .documents import (
    DocumentOpen,
    dump_yaml,
    list_corpus,
    load_document,
    load_yaml_text,
    read_text,
)
from .expr_parser import ExpressionSyntaxError, Node, parse_expression
from .linalg import SpanSolution, solve_in_span
from .parallel import ordered_map
from .random_tools import trial_rng, trial_rngs
