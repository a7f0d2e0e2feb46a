# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

import pytest

pytest.importorskip("tomllib")

from dev_scripts.check_funcs import check_license_statement, check_version_num  # noqa: E402


def test_license_statement() -> None:
    assert check_license_statement() == 0


def test_version_numbers_agree() -> None:
    assert check_version_num() == 0
