from sylvmon import trees as T
from sylvmon.render import graded_graph_dot, hasse_dot, render_ascii, tree_dot
from sylvmon.words import parse_word


def test_render_small():
    assert render_ascii(None) == "(empty)"
    assert render_ascii(T.parse_tree("(. a .)"), letters=True) == "a"
    assert render_ascii(T.parse_tree("((. 1 .) 2 (. 3 .))")) == "  2\n / \\\n1   3"


def test_render_worked_p_tree():
    art = render_ascii(T.p_symbol(parse_word("bacaabca")), letters=True).splitlines()
    assert len(art) == 7  # four levels with link rows between
    assert art[0].strip() == "a"
    assert sorted(art[-1].split()) == ["a", "b", "c"]


def test_dot_outputs():
    dot = tree_dot(T.parse_tree("((. 1 .) 2 .)"))
    assert dot.startswith("digraph tree {") and "n -> nl;" in dot
    shapes = T.enumerate_shapes(2)
    assert '"((. * .) * .)" -> "(. * (. * .))";' in hasse_dot([(shapes[1], shapes[0])], shapes)
    from sylvmon.graphs import build_gamma

    assert graded_graph_dot(build_gamma(2)).count("->") == 3
