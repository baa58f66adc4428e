import unittest

from gerg_double_logic.derivations import apply_step, check_derivation, expand_derived
from gerg_double_logic.exceptions import KernelAssertionError, RuleApplicationError
from gerg_double_logic.factory_functions import (create_classical_engine, create_custom_condition_engine,
                                                 create_intuitionistic_engine, create_lenient_engine,
                                                 create_rewrite_engine)
from gerg_double_logic.graph import LAMBDA, Address, print_graph
from gerg_double_logic.kernel_context import RulesetContext
from gerg_double_logic.rules import Derivation, LemmaTable, RuleId, Step
from gerg_double_logic.side_conditions import BaseSideCondition
from gerg_double_logic.syntax import parse_address, parse_graph


def step(rule, at, src=None, put=None, direction="fwd", lemma=None) -> Step:
    return Step(RuleId(rule), parse_address(at), parse_address(src) if src else None,
                parse_graph(put) if put is not None else None, direction, lemma)


def rewrite(graph: str, s: Step, rs="RTRA", lt=None) -> str:
    return print_graph(apply_step(parse_graph(graph), s, rs, lt)) or "lambda"


class CustomError(Exception):
    pass


class AlwaysTrue(BaseSideCondition):
    kind = "parity"

    def validate(self, value, **kwargs) -> bool:
        return True

    def get_error_message(self, value, rule, **kwargs) -> str:
        return ""


class TestPrimitiveRules(unittest.TestCase):
    """Test cases for the primitive RTRA rules and their side conditions."""

    def test_erase_at_even_region(self):
        self.assertEqual(rewrite("a b", step("B", "#/0")), "b")

    def test_erase_at_odd_region_is_rejected(self):
        with self.assertRaises(RuleApplicationError) as context:
            rewrite("(a b)", step("B", "#/0/0"))
        self.assertEqual(context.exception.kind, "parity")

    def test_write_appends_inside_an_odd_cut(self):
        self.assertEqual(rewrite("(b)", step("E", "#/0", put="a")), "(b a)")

    def test_write_at_even_region_is_rejected(self):
        with self.assertRaises(RuleApplicationError) as context:
            rewrite("a", step("E", "#", put="b"))
        self.assertEqual(context.exception.kind, "parity")

    def test_double_cut_both_directions(self):
        self.assertEqual(rewrite("a", step("DCC", "#/0:1")), "((a))")
        self.assertEqual(rewrite("((a))", step("DCC", "#/0", direction="bwd")), "a")
        self.assertEqual(rewrite("lambda", step("DCC", "#/0:0")), "(())")

    def test_double_cut_elimination_needs_two_classical_cuts(self):
        with self.assertRaises(RuleApplicationError):
            rewrite("([a])", step("DCC", "#/0", direction="bwd"))

    def test_cut_change(self):
        self.assertEqual(rewrite("[a]", step("CC", "#/0")), "(a)")
        self.assertEqual(rewrite("((a))", step("CC", "#/0/0")), "([a])")

    def test_cut_change_wrong_parity(self):
        with self.assertRaises(RuleApplicationError) as context:
            rewrite("(a)", step("CC", "#/0"))
        self.assertEqual(context.exception.kind, "parity")

    def test_mixed_cut_with_lemma(self):
        self.assertEqual(rewrite("lambda", step("DCMGEV", "#/0:0", lemma="lambda"), lt=LemmaTable()), "[()]")

    def test_mixed_cut_without_lemma(self):
        with self.assertRaises(RuleApplicationError) as context:
            rewrite("a", step("DCMGEV", "#/0:1"), lt=LemmaTable())
        self.assertEqual(context.exception.kind, "missing-lemma")

    def test_mixed_cut_on_ga(self):
        self.assertEqual(rewrite("@x", step("DCMF", "#/0:1")), "[(@x)]")
        self.assertEqual(rewrite("([(@x)])", step("DCMF", "#/0/0")), "(@x)")

    def test_mixed_cut_on_non_ga(self):
        with self.assertRaises(RuleApplicationError) as context:
            rewrite("a", step("DCMF", "#/0:1"))
        self.assertEqual(context.exception.kind, "ga-shape")

    def test_iteration_and_deiteration(self):
        self.assertEqual(rewrite("a", step("I", "#/0")), "a a")
        self.assertEqual(rewrite("a b a", step("D", "#/2")), "a b")

    def test_deiteration_needs_a_copy(self):
        with self.assertRaises(RuleApplicationError):
            rewrite("a b", step("D", "#/1"))

    def test_iteration_stays_in_one_region(self):
        with self.assertRaises(RuleApplicationError):
            rewrite("a (b)", step("I", "#/1", src="#/0"))

    def test_inward_copy_and_delete(self):
        self.assertEqual(rewrite("a (b)", step("IC", "#/1", src="#/0")), "a (b a)")
        self.assertEqual(rewrite("a (b a)", step("DC", "#/1/1", src="#/0")), "a (b)")

    def test_inward_copy_blocked_by_alternate_cut(self):
        with self.assertRaises(RuleApplicationError) as context:
            rewrite("a [b]", step("IC", "#/1", src="#/0"))
        self.assertEqual(context.exception.kind, "classical-region")

    def test_strong_copy_crosses_alternate_cuts(self):
        self.assertEqual(rewrite("[c] [b]", step("IF", "#/1", src="#/0")), "[c] [b [c]]")

    def test_ruleset_restriction(self):
        with self.assertRaises(RuleApplicationError) as context:
            rewrite("[a]", step("CC", "#/0"), rs="RTRAC")
        self.assertEqual(context.exception.kind, "ruleset")

    def test_loop_rules_only_in_rtra_li(self):
        self.assertEqual(rewrite("[(a)]", step("R", "#/0"), rs="RTRA-LI"), "a")
        with self.assertRaises(RuleApplicationError):
            rewrite("[(a)]", step("R", "#/0"), rs="RTRA")

    def test_dangling_address(self):
        with self.assertRaises(KernelAssertionError):
            rewrite("a", step("B", "#/3"))


class TestDerivedRules(unittest.TestCase):
    """Test cases for macro expansion of derived rules."""

    def test_dcm_expansion_at_even_region(self):
        g = parse_graph("[(a)]")
        steps = expand_derived(step("DCM", "#/0"), g)
        self.assertEqual(steps, [Step(RuleId.CC, Address((0,))), Step(RuleId.DCC, Address((0,)), direction="bwd")])
        self.assertEqual(rewrite("[(a)]", step("DCM", "#/0")), "a")

    def test_tca_at_even_region(self):
        self.assertEqual(rewrite("[a]", step("TCA", "#/0")), "[[[a]]]")

    def test_dccl_on_empty_sheet(self):
        self.assertEqual(rewrite("a", step("DCCL", "#")), "a (())")

    def test_rad_nests_two_loops_at_odd_alternate_cut(self):
        g = parse_graph("([x (y) (z)])")
        steps = expand_derived(step("RaD", "#/0/0/1:3"), g)
        self.assertEqual([s.rule for s in steps], [RuleId.R, RuleId.CCR, RuleId.CCR])
        self.assertEqual(rewrite("([x (y) (z)])", step("RaD", "#/0/0/1:3"), rs="RTRA-LI"), "([x ([(y) (z)])])")

    def test_rad_unnests_the_disjunction_loop_at_even_alternate_cut(self):
        self.assertEqual(rewrite("[x ([(y) (z)])]", step("RaD", "#/0/1"), rs="RTRA-LI"), "[x (y) (z)]")

    def test_expanding_a_primitive_is_an_error(self):
        with self.assertRaises(RuleApplicationError):
            expand_derived(step("B", "#/0"), parse_graph("a"))

    def test_derived_rule_respects_ruleset_of_its_expansion(self):
        with self.assertRaises(RuleApplicationError):
            rewrite("[(a)]", step("DCM", "#/0"), rs="RTRAC")


class TestCheckDerivation(unittest.TestCase):
    """Test cases for derivation replay and reports."""

    def test_accepted_lambda_derivation_certifies(self):
        d = Derivation("dccl", LAMBDA, [step("DCC", "#/0:0")], parse_graph("(())"))
        report = check_derivation(d)
        self.assertTrue(report.accepted)
        self.assertEqual(report.details["certifies"], "GEV")
        self.assertEqual(report.details["ruleset"], "RTRA")

    def test_classical_certificate(self):
        d = Derivation("dccl", LAMBDA, [step("DCC", "#/0:0")], parse_graph("(())"))
        self.assertEqual(check_derivation(d, "RTRAC").details["certifies"], "GCV")

    def test_rejected_step_reports_index(self):
        d = Derivation("bad", parse_graph("a b"), [step("B", "#/0"), step("E", "#", put="c")], parse_graph("b c"))
        report = check_derivation(d)
        self.assertFalse(report.accepted)
        self.assertEqual(report.diagnostics[0].index, 1)
        self.assertEqual(report.diagnostics[0].kind, "parity")
        self.assertEqual(report.to_dict()["diagnostics"][0]["index"], 2)

    def test_wrong_end_graph(self):
        d = Derivation("off", parse_graph("a b"), [step("B", "#/0")], parse_graph("a"))
        report = check_derivation(d)
        self.assertFalse(report.accepted)
        self.assertEqual(report.diagnostics[0].kind, "end")

    def test_end_is_compared_up_to_juxtaposition_order(self):
        d = Derivation("swap", parse_graph("a"), [step("DCC", "#/1:1")], parse_graph("(()) a"))
        self.assertTrue(check_derivation(d).accepted)

    def test_premise_derivation_certifies_nothing(self):
        d = Derivation("premise", parse_graph("a b"), [step("B", "#/0")], parse_graph("b"))
        report = check_derivation(d)
        self.assertTrue(report.accepted)
        self.assertIsNone(report.details["certifies"])

    def test_report_to_dict(self):
        d = Derivation("dccl", LAMBDA, [step("DCC", "#/0:0")], parse_graph("(())"))
        data = check_derivation(d).to_dict()
        self.assertEqual(data["verdict"], "accept")
        self.assertEqual(data["start"], "lambda")
        self.assertEqual(data["end"], "(())")
        self.assertEqual(data["steps"], 1)


class TestLemmaTable(unittest.TestCase):
    """Test cases for certifying lemmas from derivation reports."""

    def test_certify_accepted_rtra_report(self):
        lt = LemmaTable()
        d = Derivation("dccl", LAMBDA, [step("DCC", "#/0:0")], parse_graph("(())"))
        self.assertEqual(lt.certify("dccl", d, check_derivation(d, "RTRA", lt)), parse_graph("(())"))
        self.assertIn("dccl", lt)
        self.assertEqual(lt.find(parse_graph("(())")), "dccl")

    def test_certify_accepted_rtrac_report(self):
        lt = LemmaTable()
        d = Derivation("dccl", LAMBDA, [step("DCC", "#/0:0")], parse_graph("(())"))
        lt.certify("dccl", d, check_derivation(d, "RTRAC", lt))
        self.assertIn("dccl", lt)

    def test_rejected_report_is_refused(self):
        lt = LemmaTable()
        d = Derivation("off", LAMBDA, [step("DCC", "#/0:0")], parse_graph("((a))"))
        report = check_derivation(d, "RTRA", lt)
        self.assertFalse(report.accepted)
        with self.assertRaises(KernelAssertionError):
            lt.certify("off", d, report)
        self.assertNotIn("off", lt)

    def test_loop_ruleset_report_is_refused(self):
        lt = LemmaTable()
        d = Derivation("empty", LAMBDA, [], LAMBDA)
        report = check_derivation(d, "RTRA-LI", lt)
        self.assertTrue(report.accepted)
        with self.assertRaises(KernelAssertionError):
            lt.certify("empty", d, report)
        self.assertNotIn("empty", lt)

    def test_premise_derivation_is_refused(self):
        lt = LemmaTable()
        d = Derivation("premise", parse_graph("a b"), [step("B", "#/0")], parse_graph("b"))
        with self.assertRaises(KernelAssertionError):
            lt.certify("premise", d, check_derivation(d, "RTRA", lt))


class TestEngineConfiguration(unittest.TestCase):
    """Test cases for engine configuration, factories and the ruleset context."""

    def test_factory_rulesets(self):
        self.assertEqual(create_classical_engine().config.ruleset, "RTRAC")
        self.assertEqual(create_intuitionistic_engine().config.ruleset, "RTRA-LI")
        self.assertEqual(create_rewrite_engine().config.ruleset, "RTRA")

    def test_lenient_engine_returns_unchanged_graph(self):
        engine = create_lenient_engine()
        g = parse_graph("(a b)")
        self.assertEqual(engine.apply_step(g, step("B", "#/0/0")), g)
        self.assertEqual(len(engine.errors), 1)

    def test_custom_error_class(self):
        engine = create_rewrite_engine(custom_error_class=CustomError)
        with self.assertRaises(CustomError):
            engine.apply_step(parse_graph("(a b)"), step("B", "#/0/0"))

    def test_custom_condition_engine(self):
        engine = create_custom_condition_engine({'parity': AlwaysTrue()})
        self.assertEqual(print_graph(engine.apply_step(parse_graph("(a b)"), step("B", "#/0/0"))), "(b)")

    def test_ruleset_context_restores_config(self):
        engine = create_rewrite_engine()
        original = engine.config
        with RulesetContext(engine, ruleset="RTRAC") as scoped:
            self.assertEqual(scoped.config.ruleset, "RTRAC")
            with self.assertRaises(RuleApplicationError):
                scoped.apply_step(parse_graph("[a]"), step("CC", "#/0"))
        self.assertIs(engine.config, original)
        self.assertEqual(print_graph(engine.apply_step(parse_graph("[a]"), step("CC", "#/0"))), "(a)")

    def test_ruleset_context_restores_on_error(self):
        engine = create_rewrite_engine()
        with self.assertRaises(RuleApplicationError):
            with RulesetContext(engine, ruleset="RTRAC"):
                engine.apply_step(parse_graph("[a]"), step("CC", "#/0"))
        self.assertEqual(engine.config.ruleset, "RTRA")


if __name__ == '__main__':
    unittest.main()
