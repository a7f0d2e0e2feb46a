# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""文档读取、运行时信息与校验器"""

import pytest

from ncpi.Constants import get_runtime_info
from ncpi.Core.validators import DocumentPathValidator, PrimeValidator
from ncpi.Utilities.documents import DocumentOpen, dump_yaml, list_corpus, load_document, load_yaml_text, read_text


def test_corpus_prefixes() -> None:
    with DocumentOpen("corpus:commutator_example.cert.yaml") as f:
        text = f.read()
    assert read_text("corpus/commutator_example.cert") == text
    assert load_document("corpus:commutator_example.cert")["kind"] == "certificate"


def test_disk_files_are_read(tmp_path) -> None:
    path = tmp_path / "poly.yaml"
    path.write_text("poly: x1*x2\n", encoding="utf-8")
    assert load_document(path) == {"poly": "x1*x2"}
    with pytest.raises(FileNotFoundError):
        read_text(tmp_path / "missing.yaml")
    with pytest.raises(IsADirectoryError):
        read_text(tmp_path)
    with pytest.raises(FileNotFoundError):
        read_text("corpus/no_such_fixture")


def test_list_corpus() -> None:
    names = list_corpus()
    assert len(names) == 18
    assert names == sorted(names)
    assert "w_state.tensor.yaml" in names


def test_yaml_text_round_trip() -> None:
    data = {"b": [1, 2], "a": "x1*x2"}
    assert load_yaml_text(dump_yaml(data)) == data
    assert dump_yaml(data).startswith("b:")
    assert load_yaml_text('{"json": true}') == {"json": True}


def test_runtime_info_from_environment() -> None:
    info = get_runtime_info({"NCPI_SEED": "0x10", "NCPI_THREADS": "4", "NCPI_OUTPUT": "json"})
    assert info.seed == 16
    assert info.threads == 4
    assert info.output == "json"
    assert info.standard_cap is None


def test_runtime_info_warns_on_bad_values() -> None:
    with pytest.warns(RuntimeWarning):
        info = get_runtime_info({"NCPI_SEED": "many"})
    assert info.seed is None
    with pytest.warns(RuntimeWarning):
        info = get_runtime_info({"NCPI_OUTPUT": "xml"})
    assert info.output is None


def test_prime_validator() -> None:
    assert PrimeValidator.validate(10007)
    assert not PrimeValidator.validate(10)
    assert not PrimeValidator.validate(1)
    with pytest.warns(RuntimeWarning):
        assert PrimeValidator.validate(7, degree=4, d=2)


def test_document_path_validator(tmp_path) -> None:
    path = tmp_path / "a.yaml"
    path.write_text("poly: x1\n", encoding="utf-8")
    assert DocumentPathValidator.validate(path)
    assert DocumentPathValidator.validate("corpus/s4_instance.proof")
    assert not DocumentPathValidator.validate(tmp_path)
    assert not DocumentPathValidator.validate("x1*x2 - x2*x1")
    assert not DocumentPathValidator.validate("x1*x2" * 200)
