# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""命令行帮助文本的加载"""

__all__ = ["load_command_texts"]

import functools
import warnings

from ..Utilities.documents import load_yaml_text, read_text


@functools.lru_cache(maxsize=1)
def load_command_texts() -> dict[str, str]:
    """从数据文件中读取子命令与全局选项的说明文本

    若加载失败，则发出警告、返回空字典，命令行仍可使用，只是缺少帮助文本

    :return: 说明文本字典，{command 或 option: description}
    """

    try:
        text = read_text("texts:commands_en.yaml")
    except OSError as e:
        warnings.warn(f"Failed to load command texts: {e}", RuntimeWarning, stacklevel=1)
        return dict()

    data = load_yaml_text(text) or {}
    texts = {item["command"]: item["description"] for item in data.get("commands", [])}
    texts.update({item["option"].split()[0]: item["description"] for item in data.get("options", [])})
    return texts
