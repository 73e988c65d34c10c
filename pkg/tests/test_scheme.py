import pytest
from hypothesis import given, settings, strategies as st

from tcurves import ParseError, SchemeNode, SchemeTree, canonical_scheme, parse_scheme


def leaf():
    return SchemeNode()


def node(*children):
    n = SchemeNode()
    n.children = list(children)
    return n


def test_empty_even_scheme():
    assert canonical_scheme(SchemeTree(leaf(), False)) == "<0>"


def test_single_pseudoline():
    assert canonical_scheme(SchemeTree(leaf(), True)) == "<J>"


def test_unnested_ovals():
    assert canonical_scheme(SchemeTree(node(leaf(), leaf(), leaf()), False)) == "<3>"


def test_nested_pair_with_pseudoline():
    # root -> child -> leaf, with the pseudoline marker
    tree = SchemeTree(node(node(leaf())), True)
    assert canonical_scheme(tree) == "<J u 1<1>>"


def test_two_free_ovals_one_nest_of_two():
    tree = SchemeTree(node(leaf(), leaf(), node(leaf(), leaf())), False)
    assert canonical_scheme(tree) == "<2 u 1<2>>"


def test_equal_interiors_group():
    tree = SchemeTree(node(node(leaf()), node(leaf())), False)
    assert canonical_scheme(tree) == "<2<1>>"


def test_group_ordering_by_interior_bytes():
    # interiors "1" and "2": "1" sorts first
    tree = SchemeTree(node(node(leaf(), leaf()), node(leaf())), False)
    assert canonical_scheme(tree) == "<1<1> u 1<2>>"


def test_parse_roundtrip_examples():
    for s in ("<0>", "<J>", "<1>", "<2 u 1<2>>", "<J u 3>", "<J u 1<1>>",
              "<1<1<1>>>", "<22>"):
        assert canonical_scheme(parse_scheme(s)) == s


def test_parse_normalizes_item_order():
    assert canonical_scheme(parse_scheme("<1<2> u 2>")) == "<2 u 1<2>>"
    assert canonical_scheme(parse_scheme("<1<2> u 1<1>>")) == "<1<1> u 1<2>>"


def test_parse_expands_counted_groups():
    t = parse_scheme("<3<2>>")
    assert t.oval_count() == 9
    assert canonical_scheme(t) == "<3<2>>"


def test_parse_scheme_j_structure():
    t = parse_scheme("<J u 3>")
    assert t.has_pseudoline
    assert len(t.root.children) == 3
    assert all(not c.children for c in t.root.children)


def test_parse_errors():
    for bad in ("", "<", "<1", "1>", "<J u J>", "<1 u J>", "<x>", "<1<>>",
                "<0 u 1>", "<1>extra", "< 1>", "<1  u 2>"):
        with pytest.raises(ParseError):
            parse_scheme(bad)


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_scheme("<1 u x>")
    assert err.value.position == 5


@st.composite
def scheme_trees(draw, depth=0):
    n_children = draw(st.integers(0, 3 if depth < 3 else 0))
    children = [draw(scheme_trees(depth + 1)) for _ in range(n_children)]
    root = SchemeNode()
    root.children = children
    return root


@given(scheme_trees(), st.booleans())
@settings(max_examples=200, deadline=None)
def test_canonical_parse_roundtrip(root, pseudoline):
    tree = SchemeTree(root, pseudoline)
    s = canonical_scheme(tree)
    back = parse_scheme(s)
    assert canonical_scheme(back) == s
    assert back.oval_count() == tree.oval_count()
    assert back.has_pseudoline == pseudoline


@given(scheme_trees())
@settings(max_examples=100, deadline=None)
def test_canonical_independent_of_child_order(root):
    import random as _random

    tree = SchemeTree(root, False)
    s = canonical_scheme(tree)

    def shuffle(n, rng):
        rng.shuffle(n.children)
        for c in n.children:
            shuffle(c, rng)

    rng = _random.Random(5)
    for _ in range(3):
        shuffle(root, rng)
        assert canonical_scheme(tree) == s
