import pytest

from grouplab.constructions import builtin_example
from grouplab.errors import ParseError
from grouplab.groupfile import (HEADER, format_generators, parse_fixture_file, parse_generator_text,
                                parse_group_file, write_fixture_file, write_group_file)
from grouplab.constructions import symmetric


def write(tmp_path, text, name="g.txt"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_sym3_file(tmp_path):
    path = write(tmp_path, f"{HEADER}\ndegree 3\ngen (1 2)\ngen (2 3)\n")
    G = parse_group_file(path)
    assert G.order == 6
    assert G.name == "g"


def test_repeated_point_rejected_with_position(tmp_path):
    path = write(tmp_path, f"{HEADER}\ndegree 3\ngen (1 1 2)\n")
    with pytest.raises(ParseError) as err:
        parse_group_file(path)
    assert err.value.line == 3
    assert err.value.column is not None and err.value.column > 4
    assert "repeated" in str(err.value)


@pytest.mark.parametrize("text,line", [
    ("degree 3\n", 1),
    (f"{HEADER}\ngen (1 2)\n", 2),
    (f"{HEADER}\ndegree three\n", 2),
    (f"{HEADER}\ndegree 3\ngen (1 4)\n", 3),
    (f"{HEADER}\ndegree 3\nfoo bar\n", 3),
    (f"{HEADER}\ndegree 3\ndegree 4\n", 3),
])
def test_malformed_files(text, line):
    with pytest.raises(ParseError) as err:
        parse_generator_text(text)
    assert err.value.line == line


def test_comments_and_identity():
    gf = parse_generator_text(f"{HEADER}\ndegree 4\n# a comment\ngen () # trailing\ngen (1 2 3 4)\n")
    assert len(gf.generators) == 2
    assert gf.generators[0].is_identity()
    assert gf.group().order == 4


def test_writer_layout():
    text = format_generators(3, symmetric(3).generators, comment="Sym(3)")
    lines = text.splitlines()
    assert lines[0] == HEADER
    assert lines[1] == "degree 3"
    assert all(line.startswith("gen ") for line in lines[2:-1])


def test_group_round_trip(tmp_path):
    G = symmetric(4)
    path = tmp_path / "s4.txt"
    write_group_file(G, path)
    H = parse_group_file(path)
    assert H.generators == G.generators and H.order == 24


def test_exported_300_fixture_round_trip(tmp_path):
    fx = builtin_example("sg300_25")
    path = tmp_path / "sg300.txt"
    write_fixture_file(fx, path)
    back = parse_fixture_file(path)
    assert back.G.order == 300
    assert back.A.order == 100 and back.B.order == 75
    assert parse_group_file(path).order == 300


def test_fixture_defaults_and_errors(tmp_path):
    path = write(tmp_path, f"{HEADER}\ndegree 3\ngen (1 2)\ngen (2 3)\nsubgroup A\ngen (1 2 3)\n")
    fx = parse_fixture_file(path)
    assert fx.A.order == 3 and fx.B.order == 6
    bad = write(tmp_path, f"{HEADER}\ndegree 4\ngen (1 2 3)\nsubgroup A\ngen (1 2)\n", "bad.txt")
    with pytest.raises(ParseError):
        parse_fixture_file(bad)
    extra = write(tmp_path, f"{HEADER}\ndegree 3\ngen (1 2)\nsubgroup C\ngen (1 2)\n", "x.txt")
    with pytest.raises(ParseError):
        parse_fixture_file(extra)
