import pytest

from spotty.code import LinearCode
from spotty.errors import ParseError
from spotty.ring import make_ring
from spotty.specfile import format_spec, load_spec, parse_spec

R2 = make_ring("Rk", 2)


def test_every_fixture_parses(fixtures):
    files = sorted(fixtures.glob("*.spec"))
    assert len(files) >= 8
    for f in files:
        spec = load_spec(f)
        for code in spec.build_all():
            assert code.size >= 1


def test_single_and_paired_blocks(fixtures):
    one = load_spec(fixtures / "r2_three_gens.spec")
    assert one.names == ["C"] and one.ring == R2 and (one.b, one.n) == (3, 2)
    assert one.build().size == 256
    two = load_spec(fixtures / "r2_pair.spec")
    C, D = two.build_all()
    assert two.names == ["C", "D"] and (C.size, D.size) == (32, 2)


def test_syntax_variants():
    a = parse_spec("ring Rk(2)\nbytes b=2, n=1\ngen (1+u, uv)\n")
    b = parse_spec("ring rk 2   # same ring\nbytes n=1 b=2\ngen 1+u uv\n")
    assert a.codes == b.codes == {"C": [[3, 8]]}
    z = parse_spec("ring IntegersMod 4\nbytes b=1 n=1\n")
    assert z.build().size == 1


def test_round_trip():
    C = LinearCode(R2, 3, 2, [[1, 0, 0, 2, 4, 3], [0, 2, 0, 6, 8, 2]])
    D = LinearCode(R2, 3, 2, [[8, 0, 8, 0, 0, 0]])
    text = format_spec([C, D])
    spec = parse_spec(text)
    C2, D2 = spec.build_all()
    assert C2.same_codewords(C) and D2.same_codewords(D)
    assert format_spec([C2, D2]) == text


@pytest.mark.parametrize("text", [
    "bytes b=1 n=1\n",
    "ring Rk 2\n",
    "ring Rk 2\nring Rk 2\nbytes b=1 n=1\n",
    "ring Rk 9\nbytes b=1 n=1\n",
    "ring Galois 4\nbytes b=1 n=1\n",
    "ring Rk 2\nbytes b=1\n",
    "ring Rk 2\nbytes b=x n=1\n",
    "ring Rk 2\nbytes b=2 n=1\ngen 1\n",
    "ring Rk 2\nbytes b=1 n=1\ngen w\n",
    "ring Rk 2\nbytes b=1 n=1\ncode C\ncode C\n",
    "ring Rk 2\nbytes b=1 n=1\ncode D\nbytes b=2 n=1\n",
    "gen 1\nring Rk 2\nbytes b=1 n=1\n",
    "ring Rk 2\nbytes b=1 n=1\nmatrix 1\n",
    "ring Rk 2\nbytes b=0 n=1\n",
])
def test_malformed_specs(text):
    with pytest.raises(ParseError):
        parse_spec(text)


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_spec(tmp_path / "absent.spec")
