"""各种清理函数，如清理 Python 编译缓存、pytest 与 mypy 缓存、构建输出等
"""

__all__ = [
    "clear_build_outputs",
    "clear_pycache",
]

from pathlib import Path
from shutil import rmtree

from dev_scripts.path_constants import PROJECT_ROOT, SRC_PATH


def clear_build_outputs(project_root: Path) -> list[Path]:
    """清理 poetry build 的输出目录与各工具的缓存目录

    :param project_root: 项目根目录
    :return: 被删除的目录列表
    """

    removed = []
    for name in ("dist", "build", ".pytest_cache", ".mypy_cache", ".ruff_cache"):
        path = project_root / name
        if path.is_dir():
            rmtree(path)
            removed.append(path)

    print("Build outputs and tool caches all cleaned.")
    return removed


def clear_pycache(src_path: Path) -> None:
    """清理给定路径下的所有 `.pyc` `.pyo` 文件与 `__pycache__` 目录

    ref: https://stackoverflow.com/a/41386937

    :param src_path: 源码 src 目录路径
    """

    [p.unlink() for p in src_path.rglob("*.py[co]")]
    [p.rmdir() for p in src_path.rglob("__pycache__")]
    print("PyCache all cleaned.")


if __name__ == "__main__":
    clear_build_outputs(PROJECT_ROOT)
    clear_pycache(SRC_PATH)
