import pytest

from slee.canonical import canonical_form
from slee.errors import ArgumentError, ParseError
from slee.families import (
    FamilySpec,
    family_roles,
    make,
    make_cqp,
    make_cqs,
    make_cycle,
    make_g1,
    make_g2,
    make_gd,
    make_gmin2,
    make_path,
    make_star,
    parse_family_spec,
)
from slee.graphs import diameter, is_unicyclic, unique_cycle


def test_cqs_matches_named_families():
    n = 7
    assert canonical_form(make_cqs(3, [n - 3, 0, 0])) == canonical_form(make_g1(n))
    assert canonical_form(make_cqs(3, [n - 4, 1, 0])) == canonical_form(make_g2(n))
    assert canonical_form(make_cqs(4, [0, 0, 0, 0])) == canonical_form(make_cycle(4))


def test_cqp_matches_named_families():
    n = 7
    assert canonical_form(make_cqp(n - 1, [1, 0, 0, 0, 0, 0])) == canonical_form(make_gmin2(n))
    assert canonical_form(make_cqp(5, [0] * 5)) == canonical_form(make_cycle(5))
    tadpole = make_cqp(3, [2, 0, 0])
    assert tadpole.n == 5 and tadpole.m == 5 and is_unicyclic(tadpole)


def test_vertex_counts():
    assert make_cqs(4, [2, 0, 1, 3]).n == 10
    assert make_cqp(3, [2, 2, 0]).n == 7


def test_constructor_validation():
    with pytest.raises(ArgumentError):
        make_cqs(3, [1, 0])  # arity
    with pytest.raises(ArgumentError):
        make_cqs(3, [-1, 0, 0])
    with pytest.raises(ArgumentError):
        make_cqs(2, [0, 0])
    with pytest.raises(ArgumentError):
        make_g2(4)  # needs n >= 5
    make_g1(4)  # the n=4 case is allowed


def test_gd_construction():
    g = make_gd(5, 2)
    assert g.n == 5 and g.m == 5 and diameter(g) == 2
    assert make_gd(7, 5).degree(7 - 1) == 2  # closing vertex u sits on a triangle
    assert make_gd(6, 4).n == 6  # zero pendants when d = n - 2
    g63 = make_gd(6, 3)
    assert is_unicyclic(g63) and diameter(g63) == 3
    with pytest.raises(ArgumentError):
        make_gd(5, 4)
    with pytest.raises(ArgumentError):
        make_gd(5, 1)


def test_gd_triangle_sits_mid_path():
    g = make_gd(9, 4)
    a = 2
    assert set(unique_cycle(g)) == {a, a + 1, g.n - 1}


def test_gd_diameter_exhaustive():
    for n in range(4, 13):
        for d in range(2, n - 1):
            g = make_gd(n, d)
            assert is_unicyclic(g)
            assert diameter(g) == d


def test_every_family_is_unicyclic():
    specs = ["C:6", "C3S:2,1,0", "C4P:1,2,0,0", "G1:7", "G2:7", "Gmin2:7", "Gd:7,3"]
    for text in specs:
        assert is_unicyclic(make(text)), text
    # trees are the documented exceptions
    assert not is_unicyclic(make("P:6"))
    assert not is_unicyclic(make("S:6"))


def test_parse_round_trips():
    for text in ["C:6", "P:4", "S:5", "C3S:2,0,0", "C5P:1,0,0,0,0", "G1:7", "Gmin2:7", "Gd:7,3"]:
        spec = parse_family_spec(text)
        assert str(spec) == text
        make(spec)


def test_parse_dispatch():
    assert canonical_form(make("G1:6")) == canonical_form(make_g1(6))
    assert make("P:1").n == 1


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_family_spec("C3S:2,0")  # arity
    with pytest.raises(ArgumentError):
        parse_family_spec("Gd:5,4")  # constraint
    with pytest.raises(ParseError):
        parse_family_spec("X:3")
    with pytest.raises(ParseError):
        parse_family_spec("C:")
    with pytest.raises(ParseError):
        parse_family_spec("C:a")
    with pytest.raises(ParseError) as err:
        parse_family_spec("C3S")
    assert err.value.position is not None


def test_family_spec_kind_validation():
    with pytest.raises(ArgumentError):
        FamilySpec("bogus", (3,))


def test_roles_g2():
    roles = family_roles("G2:6")
    assert roles["v1"] == 0 and roles["v2"] == 1 and roles["v3"] == 2
    assert roles["x1"] == 3 and roles["x2"] == 4 and roles["y"] == 5
    g = make("G2:6")
    assert g.degree(roles["y"]) == 1
    assert g.has_edge(roles["v2"], roles["y"])


def test_roles_gd():
    roles = family_roles("Gd:7,3")
    g = make("Gd:7,3")
    assert roles["v0"] == 0 and roles["v3"] == 3
    assert g.has_edge(roles["u"], roles["v1"]) and g.has_edge(roles["u"], roles["v2"])
    assert g.degree(roles["x1"]) == 1


def test_roles_generic_families():
    roles = family_roles("C3S:1,1,0")
    g = make("C3S:1,1,0")
    assert g.has_edge(roles["v1"], roles["x1_1"])
    assert g.has_edge(roles["v2"], roles["x2_1"])
    roles = family_roles("C3P:2,0,0")
    g = make("C3P:2,0,0")
    assert g.has_edge(roles["v1"], roles["u1_1"])
    assert g.has_edge(roles["u1_1"], roles["u1_2"])


def test_small_gd_coincides_with_top_family():
    # structural observation, checked rather than assumed
    for n in (4, 5, 6, 8):
        assert canonical_form(make_gd(n, 2)) == canonical_form(make_g1(n))


def test_path_and_star_shapes():
    p = make_path(5)
    assert p.m == 4 and diameter(p) == 4
    s = make_star(5)
    assert s.degree(0) == 4 and all(s.degree(v) == 1 for v in range(1, 5))
