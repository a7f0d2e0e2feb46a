# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""命令执行结果的报告与渲染

结构化报告（json）的键按字母序输出，相同配置下多次运行的输出逐字节相同。
"""

__all__ = [
    "Report",
    "render",
]

import json
from dataclasses import dataclass, field
from typing import Any

from ..Constants import OutputFormat
from .run_config import RunConfig


@dataclass
class Report:
    """一个子命令的执行结果

    ok 为 False 表示验证失败（退出码 1）；lines 是面向人的文本，data 是结构化数据。
    """

    config: RunConfig
    ok: bool = True
    data: dict[str, Any] = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def add(self, line: str) -> None:
        self.lines.append(line)

    def to_dict(self) -> dict[str, Any]:
        return {"config": self.config.to_dict(), "ok": self.ok, "result": self.data}


def render(report: Report) -> str:
    """按配置中的输出格式渲染报告"""

    if report.config.output is OutputFormat.json:
        return json.dumps(report.to_dict(), sort_keys=True, indent=2, ensure_ascii=False, default=str)
    return "\n".join([*report.lines, f"seed: {report.config.seed}"])
