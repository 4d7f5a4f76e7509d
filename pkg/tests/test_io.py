from fractions import Fraction

import pytest

from srcore.complex import complete_skeleton, cycle, disjoint_union
from srcore.io import ParseError, parse_facet_json, parse_facet_text, parse_inline, parse_matrix


def test_text_facets():
    c = parse_facet_text("v1 v2 v3\n\nv3 v4  # shared vertex\n")
    assert c.names == ("v1", "v2", "v3", "v4")
    assert c.facets == ((0, 1, 2), (2, 3))


def test_text_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_facet_text("a b\nc d!\n")
    assert err.value.line == 2 and err.value.column == 3
    with pytest.raises(ParseError):
        parse_facet_text("# nothing here\n")


def test_json_facets():
    c = parse_facet_json('{"vertices": ["x", "y", "z"], "facets": [["x", "z"], ["y", "z"]]}')
    assert c.facets == ((0, 2), (1, 2))
    with pytest.raises(ParseError):
        parse_facet_json('{"vertices": ["x"], "facets": [["x", "w"]]}')
    with pytest.raises(ParseError) as err:
        parse_facet_json('{"facets": [[1, 2]')
    assert err.value.line == 1


def test_inline_specs():
    assert parse_inline("cycle:4") == cycle(4)
    assert parse_inline("skeleton:2,5") == complete_skeleton(2, 5)
    assert parse_inline("cycle:3+skeleton:1,2") == disjoint_union(cycle(3), complete_skeleton(1, 2))
    for bad in ["", "cycle:2", "torus:4", "skeleton:3"]:
        with pytest.raises(ParseError):
            parse_inline(bad)


def test_matrix():
    assert parse_matrix("1,1,2;1,2,1") == [[1, 1, 2], [1, 2, 1]]
    assert parse_matrix("[1/3 0; -2 5]") == [[Fraction(1, 3), 0], [-2, 5]]
    for bad in ["1,2;3", "1,x", ";"]:
        with pytest.raises(ParseError):
            parse_matrix(bad)
