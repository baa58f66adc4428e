import unittest

from gerg_double_logic.exceptions import AddressError, GraphSyntaxError
from gerg_double_logic.graph import (LAMBDA, Address, CutA, CutC, GraphAltAtom, GraphAtom, canonical_equal,
                                     canonical_text, canonicalize, classify_graph, context_at, depth,
                                     item_count, plug, print_graph, region_of, replace_at, subgraph_at)
from gerg_double_logic.render import render_graph
from gerg_double_logic.syntax import parse_address, parse_graph

a, b = GraphAtom("a"), GraphAtom("b")
x = GraphAltAtom("x")


class TestGraphSyntax(unittest.TestCase):
    """Test cases for graph parsing and printing."""

    def test_parse_nested_cuts(self):
        self.assertEqual(parse_graph("a ([b] @x)"), (a, CutC((CutA((b,)), x))))

    def test_lambda_and_empty_text(self):
        self.assertEqual(parse_graph("lambda"), LAMBDA)
        self.assertEqual(parse_graph(""), LAMBDA)
        self.assertEqual(parse_graph("(lambda)"), (CutC(()),))

    def test_print_graph(self):
        self.assertEqual(print_graph(parse_graph("a ( [ b ] @x )")), "a ([b] @x)")

    def test_unbalanced_graph(self):
        with self.assertRaises(GraphSyntaxError):
            parse_graph("(a [b)")

    def test_parse_addresses(self):
        self.assertEqual(parse_address("#"), Address())
        self.assertEqual(parse_address("#/1/0"), Address((1, 0)))
        self.assertEqual(parse_address("#/1/0:2"), Address((1,), (0, 2)))
        self.assertEqual(parse_address("#/0:0"), Address((), (0, 0)))

    def test_address_printing(self):
        for text in ("#", "#/1/0", "#/1/0:2", "#/0:0"):
            with self.subTest(text=text):
                self.assertEqual(str(parse_address(text)), text)

    def test_bad_address(self):
        with self.assertRaises(GraphSyntaxError):
            parse_address("#/a")


class TestCanonicalForm(unittest.TestCase):
    """Test cases for juxtaposition order and canonical equality."""

    def test_juxtaposition_is_commutative(self):
        self.assertTrue(canonical_equal(parse_graph("a (b) [c]"), parse_graph("[c] (b) a")))

    def test_cut_kinds_are_distinguished(self):
        self.assertFalse(canonical_equal(parse_graph("(a)"), parse_graph("[a]")))

    def test_multiplicity_matters(self):
        self.assertFalse(canonical_equal(parse_graph("a a"), parse_graph("a")))

    def test_canonical_order_ranks_atoms_before_cuts(self):
        self.assertEqual(canonical_text(parse_graph("[b] (a) @x b a")), "a b @x (a) [b]")

    def test_canonicalize_is_idempotent(self):
        g = canonicalize(parse_graph("((b a) [@y @x]) c"))
        self.assertEqual(canonicalize(g), g)

    def test_sizes(self):
        g = parse_graph("a ([b] @x)")
        self.assertEqual(item_count(g), 5)
        self.assertEqual(depth(g), 2)
        self.assertEqual(depth(LAMBDA), 0)


class TestAddressing(unittest.TestCase):
    """Test cases for selection, regions and one-hole contexts."""

    def setUp(self):
        self.g = parse_graph("a ([b] c)")

    def test_subgraph_at_item(self):
        self.assertEqual(subgraph_at(self.g, parse_address("#/1/0")), CutA((b,)))

    def test_subgraph_at_slice(self):
        self.assertEqual(subgraph_at(self.g, parse_address("#/1/0:2")), (CutA((b,)), GraphAtom("c")))

    def test_subgraph_at_root(self):
        self.assertEqual(subgraph_at(self.g, Address()), self.g)

    def test_dangling_address(self):
        with self.assertRaises(AddressError):
            subgraph_at(self.g, parse_address("#/5"))
        with self.assertRaises(AddressError):
            subgraph_at(self.g, parse_address("#/0/0"))

    def test_region_parity(self):
        self.assertTrue(region_of(self.g, parse_address("#/0")).even)
        inside_classical = region_of(self.g, parse_address("#/1/1"))
        self.assertEqual(inside_classical.parity, "odd")
        self.assertTrue(inside_classical.classical)
        inside_alternate = region_of(self.g, parse_address("#/1/0/0"))
        self.assertEqual(inside_alternate.parity, "even")
        self.assertFalse(inside_alternate.classical)
        self.assertEqual(inside_alternate.depth_alternate, 1)

    def test_replace_at_returns_new_value(self):
        replaced = replace_at(self.g, parse_address("#/1/1"), (x,))
        self.assertEqual(print_graph(replaced), "a ([b] @x)")
        self.assertEqual(print_graph(self.g), "a ([b] c)")

    def test_replace_slice_with_nothing(self):
        self.assertEqual(print_graph(replace_at(self.g, parse_address("#/1/0:2"), LAMBDA)), "a ()")

    def test_plug_context_restores_graph(self):
        at = parse_address("#/1/0/0")
        ctx = context_at(self.g, at)
        self.assertEqual(plug(ctx, subgraph_at(self.g, at)), self.g)

    def test_plug_other_subgraph(self):
        ctx = context_at(self.g, parse_address("#/1/0/0"))
        self.assertEqual(print_graph(plug(ctx, parse_graph("(d)"))), "a ([(d)] c)")


class TestClassifyGraph(unittest.TestCase):
    """Test cases for graph fragment membership."""

    def test_classical_graph(self):
        report = classify_graph(parse_graph("a (b)"))
        self.assertTrue(report.in_alfa_lc)
        self.assertFalse(report.in_alfa_li)
        self.assertFalse(report.in_GA)

    def test_intuitionistic_graph(self):
        report = classify_graph(parse_graph("@x [@y ([@x])]"))
        self.assertTrue(report.in_alfa_li)
        self.assertFalse(report.in_alfa_lc)

    def test_ga_graphs(self):
        self.assertTrue(classify_graph(parse_graph("[(a)]")).in_GA)
        self.assertTrue(classify_graph(parse_graph("@x")).in_GA)
        self.assertFalse(classify_graph(parse_graph("[a] [b]")).in_GA)
        self.assertFalse(classify_graph(parse_graph("(a)")).in_GA)

    def test_every_graph_is_gamma_ld(self):
        self.assertTrue(classify_graph(parse_graph("a [@x (b)]")).in_gamma_ld)


class TestRenderGraph(unittest.TestCase):
    """Test cases for box rendering."""

    def test_empty_sheet(self):
        self.assertEqual(render_graph(LAMBDA), "λ")

    def test_classical_cut(self):
        self.assertEqual(render_graph(parse_graph("(a)")), "+---+\n| a |\n+---+")

    def test_empty_alternate_cut(self):
        self.assertEqual(render_graph(parse_graph("[]")), "#==#\n#  #\n#==#")

    def test_nested_cuts(self):
        expected = "\n".join([
            "#=======#",
            "# +---+ #",
            "# | a | #",
            "# +---+ #",
            "#=======#",
        ])
        self.assertEqual(render_graph(parse_graph("[(a)]")), expected)

    def test_items_side_by_side(self):
        self.assertEqual(render_graph(parse_graph("a (b)")), "a +---+\n  | b |\n  +---+")

    def test_alternate_atom(self):
        self.assertEqual(render_graph(parse_graph("@x")), "@x")


if __name__ == '__main__':
    unittest.main()
