import unittest

from gerg_double_logic.exceptions import AtomBudgetError, KernelAssertionError
from gerg_double_logic.formula import AtomA, instantiate
from gerg_double_logic.hilbert import LI_TABLE
from gerg_double_logic.rules import Derivation, RuleId, Step
from gerg_double_logic.semantics import KripkeModel, kripke_check, soundness_scan
from gerg_double_logic.syntax import parse, parse_address, parse_graph
from gerg_double_logic.truth_table import countervaluation, propositional_atoms, truth_table_taut


class TestTruthTable(unittest.TestCase):
    """Test cases for the classical truth-table oracle."""

    def test_tautologies(self):
        for text in ("a > a", "(a > b) > (~b > ~a)", "a = ~~a", "((a > b) > a) > a"):
            with self.subTest(text=text):
                self.assertTrue(truth_table_taut(parse(text)))

    def test_countervaluation(self):
        self.assertEqual(countervaluation(parse("a > b")), {"a": True, "b": False})
        self.assertIsNone(countervaluation(parse("a | ~a")))

    def test_opaque_subtrees(self):
        self.assertEqual(propositional_atoms(parse("@x & !(a > b) > a")), ["@x", "!(a > b)", "a"])

    def test_atom_budget(self):
        with self.assertRaises(AtomBudgetError):
            truth_table_taut(parse("a & b & c > a"), max_atoms=2)


class TestKripke(unittest.TestCase):
    """Test cases for the finite Kripke oracle on FI formulas."""

    def test_valid_formulas(self):
        for text in ("@x -> @x", "@x -> (@y -> @x)", "@x -> !!@x", "(@x -> !@y) -> (@y -> !@x)"):
            with self.subTest(text=text):
                self.assertTrue(kripke_check(parse(text), max_worlds=3).valid)

    def test_intuitionistic_axioms_are_valid(self):
        for bindings in ({"X": AtomA("x"), "Y": AtomA("y"), "Z": AtomA("x")},
                         {"X": AtomA("y"), "Y": AtomA("x"), "Z": AtomA("y")}):
            for schema_id, schema in LI_TABLE.schemas:
                with self.subTest(schema=schema_id, X=bindings["X"].name):
                    f = instantiate(schema, bindings)
                    self.assertTrue(kripke_check(f, max_worlds=4).valid)

    def test_excluded_middle_has_a_countermodel(self):
        result = kripke_check(parse("@x v !@x"))
        self.assertFalse(result.valid)
        self.assertTrue(result.model.is_well_formed())
        self.assertFalse(result.model.forces(result.world, parse("@x v !@x")))
        self.assertEqual(len(result.model.worlds), 2)

    def test_double_negation_elimination_fails(self):
        self.assertFalse(kripke_check(parse("!!@x -> @x")).valid)

    def test_classical_formula_is_rejected(self):
        with self.assertRaises(KernelAssertionError):
            kripke_check(parse("a > a"))

    def test_world_bound(self):
        with self.assertRaises(KernelAssertionError):
            kripke_check(parse("@x -> @x"), max_worlds=6)

    def test_well_formedness(self):
        order = frozenset({(0, 0), (1, 1), (0, 1)})
        persistent = KripkeModel((0, 1), order, (("x", frozenset({1})),))
        broken = KripkeModel((0, 1), order, (("x", frozenset({0})),))
        self.assertTrue(persistent.is_well_formed())
        self.assertFalse(broken.is_well_formed())

    def test_describe(self):
        model = KripkeModel((0, 1), frozenset({(0, 0), (1, 1), (0, 1)}), (("x", frozenset({1})),))
        self.assertEqual(model.describe(), "worlds w0..w1; order w0<=w1; @x: {w1}")


class TestSoundnessScan(unittest.TestCase):
    """Test cases for the collapse soundness scan."""

    def test_legal_derivation(self):
        d = Derivation("wrap", parse_graph("@x"), [Step(RuleId.DCMF, parse_address("#/0:1"))],
                       parse_graph("[(@x)]"))
        report = soundness_scan(d)
        self.assertTrue(report.all_true)
        self.assertIsNotNone(report.closing)


if __name__ == '__main__':
    unittest.main()
