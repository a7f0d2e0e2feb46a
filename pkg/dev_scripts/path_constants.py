"""开发脚本中使用的路径常量

所有脚本应以项目根目录为工作目录运行
"""

from pathlib import Path

PROJECT_ROOT = Path(__file__).parent.parent  # 项目根目录
SRC_PATH = PROJECT_ROOT / "src"  # 源码目录
SRC_PKG_PATH = SRC_PATH / "ncpi"  # 包目录
RESOURCES_PATH = SRC_PKG_PATH / "Resources"  # 静态资源文件目录
CORPUS_PATH = RESOURCES_PATH / "Corpus"  # 随包发布的语料
TESTS_PATH = PROJECT_ROOT / "tests"  # 测试目录
README_FILE_LIST = [
    PROJECT_ROOT / "README.md",
    PROJECT_ROOT / "README_zh.md",
]  # README 文件列表
