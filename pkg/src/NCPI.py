# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""程序入口脚本
由于整个程序作为单一 Python 包发布，直接运行 ncpi/__main__.py 会导致相对导入错误
需要在包外留有这个显式的入口模块来提供“通过运行某个 .py 文件启动程序”功能

ncpi 启动方式：
    python NCPI.py al --d 2
或
    python -m ncpi al --d 2
"""

from ncpi.__main__ import main

main()
