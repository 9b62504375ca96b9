import pytest

from mindist.errors import ParseError
from mindist.fileformat import format_complex, parse_text, read_complex, write_complex


def test_facets_file(triangle):
    assert parse_text("n=3\n0,1\n1,2\n0,2\n") == triangle


def test_comments_whitespace_and_keyword(triangle):
    text = "# hollow triangle\n n = 3 \n\nfacets\n0, 1\n 1,2\n0 ,2\n"
    assert parse_text(text) == triangle


def test_ideal_stanza(triangle):
    assert parse_text("n=3\nideal\n0,1,2\n") == triangle


def test_round_trip(tmp_path, two_edges):
    path = tmp_path / "c.cplx"
    write_complex(two_edges, path)
    assert read_complex(path) == two_edges
    assert format_complex(two_edges) == "n=4\n0,1\n2,3\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("n=3\n0,1 x\n", 2),
        ("m=3\n0,1\n", 1),
        ("n=3\n0,1\n0,7\n", 3),
        ("n=3\n0,1\n1,2\nideal\n", 4),
        ("n=3\n0,,1\n", 2),
        ("n=3\n0,1\n1,2\n0,2\ntrailing\n", 5),
    ],
)
def test_rejects_with_line_number(text, line):
    with pytest.raises(ParseError) as exc:
        parse_text(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_missing_rows_and_policy():
    with pytest.raises(ParseError):
        parse_text("n=3\n")
    with pytest.raises(ParseError):
        parse_text("")
    with pytest.raises(ParseError, match="reindex"):
        parse_text("n=4\n0,1\n1,2\n")
    assert parse_text("n=4\n0,1\n1,2\n", reindex=True).n == 3
