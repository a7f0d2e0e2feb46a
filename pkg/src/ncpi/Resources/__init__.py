# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""随包发布的静态资源：命令帮助文本与语料库"""
