import pytest

from hopfconst import fileformat
from hopfconst.catalog import group_algebra, group_selfdual_witness, taft, taft2_witness, tensor_with_dual
from hopfconst.duality import dualize
from hopfconst.errors import ParseError
from hopfconst.ihopf import i_construct_general
from hopfconst.linalg import matrix
from hopfconst.scalars import QQ, CyclotomicField, PrimeField

CATALOG = {
    "H2": taft(2),
    "H3": taft(3),
    "H4": taft(4),
    "H3/GF7": taft(3, PrimeField(7)),
    "kZ4": group_algebra(4, CyclotomicField(4)),
    "kZ2xZ3": group_algebra((2, 3), CyclotomicField(6)),
    "H2*": dualize(taft(2)),
    "H2xH2*": tensor_with_dual(taft(2)),
}


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_round_trip(name, tmp_path):
    P = CATALOG[name]
    path = tmp_path / "p.txt"
    fileformat.save(P, path)
    doc = fileformat.load(path)
    assert doc.presentation() == P
    assert fileformat.dumps(doc) == path.read_text()


def test_witness_and_note_round_trip():
    F = CyclotomicField(4)
    W = group_selfdual_witness(4, F)
    text = fileformat.dumps(group_algebra(4, F), witnesses={"selfdual": W}, note="character table")
    doc = fileformat.loads(text)
    assert doc.witness("selfdual") == W
    assert doc.note == "character table"
    assert fileformat.dumps(doc) == text


def test_ialgebra_round_trip():
    I = i_construct_general(taft(2), taft2_witness(), ["d1", "d2", "d3", "d4"])
    doc = fileformat.loads(fileformat.dumps(I))
    assert doc.kind == "ialgebra" and doc.G is None
    assert doc.ialgebra() == I


def test_committed_fixture_is_canonical(fixtures_dir):
    text = (fixtures_dir / "h2.txt").read_text()
    doc = fileformat.loads(text)
    assert fileformat.dumps(doc) == text
    assert doc.presentation() == taft(2)
    assert doc.witness("selfdual") == taft2_witness()


def test_matrix_file():
    M = matrix(QQ, [[1, 2], [0, -1]])
    doc = fileformat.loads(fileformat.dumps_matrix(M))
    assert doc.kind == "matrix" and doc.matrix == M


def test_comments_and_blank_lines():
    text = fileformat.dumps(group_algebra(2))
    noisy = "# a comment\n\n" + text.replace("dim 2\n", "dim 2\n\n# more\n")
    assert fileformat.loads(noisy).presentation() == group_algebra(2)


def _mutate(old, new):
    text = fileformat.dumps(taft(2))
    assert old in text
    return text.replace(old, new, 1)


@pytest.mark.parametrize(
    "text,line,col,fragment",
    [
        (lambda: _mutate("F 1 2 2 = 1", "F 1 5 2 = 1"), 18, 5, "index 5 out of range"),
        (lambda: _mutate("F 1 2 2 = 1", "F 1 2 2 = 1/0"), 18, 11, "zero denominator"),
        (lambda: _mutate("mu 2 = 1", "mu 2 = [0, 1] @ zeta(3)"), 14, 8, "field mismatch"),
        (lambda: _mutate("hopfconst 1", "hopfconst 2"), 1, 11, "version"),
        (lambda: _mutate("G 1 1 1 = 1", "G 1 1 = 1"), 29, 1, "takes 3 argument"),
        (lambda: _mutate("G 1 1 1 = 1", "Q 1 1 1 = 1"), 29, 1, "unknown record"),
        (lambda: _mutate("F 1 1 1 = 1", "F 1 2 2 = 7"), 18, 1, "duplicate"),
        (lambda: _mutate("lambda 1 = 1", "lambda 1 = x"), 9, 12, "bad scalar"),
    ],
)
def test_parse_errors(text, line, col, fragment):
    with pytest.raises(ParseError) as info:
        fileformat.loads(text())
    err = info.value
    assert (err.line, err.column) == (line, col)
    assert fragment in str(err)
    assert str(err).startswith(f"line {line}, column {col}: ")


def test_missing_entries():
    with pytest.raises(ParseError, match="mu is missing"):
        fileformat.loads(_mutate("mu 3 = 0\n", ""))
    with pytest.raises(ParseError, match="labels missing"):
        fileformat.loads(_mutate("label 2 = g\n", ""))
    with pytest.raises(ParseError, match="precede"):
        fileformat.loads("hopfconst 1\nlabel 1 = a\n")
    with pytest.raises(ParseError, match="empty"):
        fileformat.loads("# nothing\n")
