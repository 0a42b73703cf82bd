import pytest

from coinmard.errors import FormatError
from coinmard.hadamard import kronecker, paley_i, sylvester
from coinmard import matrix_io


MATRICES = [sylvester(0), sylvester(1), sylvester(4), paley_i(3), paley_i(11), kronecker(paley_i(3), sylvester(2))]


@pytest.mark.parametrize("matrix", MATRICES, ids=lambda m: f"n{m.n}")
def test_text_round_trip(tmp_path, matrix):
    path = tmp_path / "m.had"
    matrix_io.write_text(path, matrix)
    n, rows = matrix_io.read_text(path)
    assert n == matrix.n and tuple(rows) == matrix.rows
    # byte-identical re-write
    text = path.read_text()
    assert text == matrix_io.to_text(n, rows)
    assert not any(line != line.rstrip() for line in text.splitlines())


@pytest.mark.parametrize("matrix", MATRICES, ids=lambda m: f"n{m.n}")
def test_packed_round_trip(tmp_path, matrix):
    path = tmp_path / "m.hadb"
    matrix_io.write_packed(path, matrix)
    n, rows = matrix_io.read_packed(path)
    assert n == matrix.n and tuple(rows) == matrix.rows


def test_text_format_example():
    h = sylvester(1)
    assert matrix_io.to_text(h.n, h.rows) == "2\n++\n+-\n"


def test_packed_format_layout():
    h = sylvester(1)
    data = matrix_io.to_packed(h.n, h.rows)
    # 8-byte little-endian order, then one byte per row (LSB-first bits)
    assert data[:8] == (2).to_bytes(8, "little")
    assert data[8:] == bytes([0b00, 0b10])


def test_ragged_rejected():
    with pytest.raises(FormatError) as exc:
        matrix_io.from_text("2\n++\n+\n")
    assert exc.value.line == 3


def test_bad_inputs_rejected():
    with pytest.raises(FormatError):
        matrix_io.from_text("")
    with pytest.raises(FormatError) as exc:
        matrix_io.from_text("x\n")
    assert exc.value.line == 1
    with pytest.raises(FormatError):
        matrix_io.from_text("2\n++\n")  # missing row
    with pytest.raises(FormatError):
        matrix_io.from_text("2\n+*\n++\n")  # bad character
    with pytest.raises(FormatError):
        matrix_io.from_packed(b"\x01")
    with pytest.raises(FormatError):
        matrix_io.from_packed((2).to_bytes(8, "little") + b"\x00")
    with pytest.raises(FormatError):
        matrix_io.from_packed((2).to_bytes(8, "little") + bytes([0b100, 0]))  # padding bit


def test_load_verified(tmp_path):
    path = tmp_path / "m.had"
    matrix_io.write_text(path, paley_i(7))
    m = matrix_io.load_verified(path)
    assert m.n == 8
