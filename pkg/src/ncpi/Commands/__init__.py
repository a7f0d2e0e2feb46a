# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""命令行界面：子命令的参数解析、执行与报告输出"""

from .dispatcher import build_parser, dispatch
from .reporting import Report, render
from .run_config import RunConfig
