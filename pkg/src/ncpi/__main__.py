# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""ncpi 软件包入口

包含一个名为 `main()` 的入口函数
"""

import sys

from .Commands import dispatch


def main() -> None:
    """应用程序主入口函数，便于 Poetry 由此函数级入口构建启动脚本"""

    sys.exit(dispatch())


if __name__ == "__main__":
    main()
