# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""将文档读取包装成 Python 的 `with open() as` 风格，并提供 YAML 文档的加载与导出

文档可以是磁盘上的文件，也可以是随包发布的资源：
    "corpus/<name>" 或 "corpus:<name>"  ->  ncpi/Resources/Corpus/<name>[.yaml]
    "texts:<name>"                       ->  ncpi/Resources/Texts/<name>
磁盘上存在同名文件时优先读取磁盘文件。
"""

__all__ = [
    "DocumentOpen",
    "load_yaml_text",
    "dump_yaml",
    "read_text",
    "load_document",
    "list_corpus",
]
__author__ = "ncpi developers"

import io
import os
import pathlib
from importlib import resources
from typing import Any, Optional, Union

import yaml

_RESOURCE_PACKAGE = "ncpi.Resources"
_SCHEMES = {"corpus": "Corpus", "texts": "Texts"}


def load_yaml_text(text: str) -> Any:
    """解析 YAML 文本（JSON 是 YAML 的子集，同样适用）

    :param text: YAML 文本
    :return: 解析结果
    """

    try:
        # 优先使用性能更高的 C 扩展
        return yaml.load(text, Loader=yaml.CSafeLoader)
    except AttributeError:
        # 如果没有可用的 C 扩展，则使用纯 Python 解析
        return yaml.load(text, Loader=yaml.SafeLoader)


def dump_yaml(data: Any) -> str:
    """将数据导出为 YAML 文本，保持键的插入顺序"""

    try:
        dumper = yaml.CSafeDumper
    except AttributeError:
        dumper = yaml.SafeDumper
    return yaml.dump(data, Dumper=dumper, sort_keys=False, allow_unicode=True)


class DocumentOpen:
    """读取文档的上下文管理器，使资源文件与普通文件的读取风格统一

    使用举例：

    with DocumentOpen("corpus/s4_instance.proof", encoding="utf-8") as f:
        print(f.read())
    """

    def __init__(self, file: Union[str, bytes, os.PathLike], encoding: Optional[str] = "utf-8"):
        """
        :param file: 文件路径或资源名
        :param encoding: 文本编码
        """

        self.name = self.deal_path(file)
        self.encoding = encoding or "utf-8"
        self.io_obj: Optional[io.TextIOBase] = None

    def __enter__(self) -> io.TextIOBase:
        disk_path = pathlib.Path(self.name)
        if disk_path.exists() or self._resource_target() is None:
            self._detect_error(disk_path)
            self.io_obj = open(disk_path, encoding=self.encoding)  # noqa: SIM115
        else:
            self.io_obj = io.StringIO(self._read_resource())
        return self.io_obj

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.io_obj is not None:
            self.io_obj.close()

    @staticmethod
    def deal_path(path: Union[str, bytes, os.PathLike]) -> str:
        """预处理文件路径，统一成 posix 风格的字符串

        :param path: 文件路径
        :return: 使用正斜杠（/）的路径字符串
        """

        if isinstance(path, bytes):
            path = path.decode("utf-8")
        text = os.fspath(path)
        if ":" in text and text.split(":", 1)[0] in _SCHEMES:
            return text
        return str(pathlib.PurePath(text).as_posix())

    @staticmethod
    def _detect_error(input_file: pathlib.Path) -> None:
        """检查传入的文件是否存在错误，如有则抛出对应的异常

        :param input_file: 文件路径
        :raise IsADirectoryError: 传入的文件路径实际是目录时抛出此异常
        :raise FileNotFoundError: 传入的文件路径不存在时抛出此异常
        """

        if input_file.is_dir():
            raise IsADirectoryError(f"File '{input_file}' is a directory.")
        if not input_file.exists():
            raise FileNotFoundError(f'File "{input_file}" not found.')

    def _resource_target(self) -> Optional[tuple[str, str]]:
        """解析资源名，返回 (资源目录, 文件名)，不是资源名时返回 None"""

        for scheme, folder in _SCHEMES.items():
            for prefix in (f"{scheme}:", f"{scheme}/"):
                if self.name.startswith(prefix):
                    return folder, self.name[len(prefix) :]
        return None

    def _read_resource(self) -> str:
        target = self._resource_target()
        assert target is not None
        folder, name = target
        base = resources.files(_RESOURCE_PACKAGE) / folder
        for candidate in (name, f"{name}.yaml"):
            entry = base / candidate
            if entry.is_file():
                return entry.read_text(encoding=self.encoding)
        raise FileNotFoundError(f'Resource "{self.name}" not found.')


def read_text(path: Union[str, os.PathLike]) -> str:
    """读取文档的全部文本"""

    with DocumentOpen(path) as f:
        return f.read()


def load_document(path: Union[str, os.PathLike]) -> Any:
    """读取并解析 YAML / JSON 文档"""

    return load_yaml_text(read_text(path))


def list_corpus() -> list[str]:
    """随包发布的语料文件名（不含目录），按名称排序"""

    base = resources.files(_RESOURCE_PACKAGE) / "Corpus"
    return sorted(entry.name for entry in base.iterdir() if entry.name.endswith(".yaml"))
