import unittest

from gerg_double_logic.derivations import check_derivation
from gerg_double_logic.exceptions import ScriptSyntaxError, TransformError
from gerg_double_logic.graph import canonical_equal
from gerg_double_logic.hilbert import MP, Axiom, Hyp, Lemma, Taut
from gerg_double_logic.rules import RuleId, Step
from gerg_double_logic.scripts import (load_derivations, parse_derivation_script, parse_proof_script,
                                       print_derivation, print_proof)
from gerg_double_logic.syntax import parse, parse_address, parse_graph

PROOF_SCRIPT = """\
-- modus ponens under hypotheses
proof detach
assume a
assume a > b
1 a ; hyp 1
2 a > b ; hyp 2
3 b ; mp 1 2
qed b
transform elim
mode pure

proof lemma-use
1 +(a > a) ; lemma +identity
2 a | ~a ; taut
3 +(a > (b > a)) ; ax +Ax1.1
qed
"""

DERIVATION_SCRIPT = """\
deriv conj-elim
from a b
step B at #/1
to a

deriv conj-elim-implication
tdg conj-elim
to (a b (a))

deriv dcml
from lambda
step DCMGEV at #/0:0 use lambda
to [()]
ruleset RTRA
"""


class TestProofScripts(unittest.TestCase):
    """Test cases for the proof script format."""

    def test_parse_blocks(self):
        scripts = parse_proof_script(PROOF_SCRIPT)
        self.assertEqual([s.proof.name for s in scripts], ["detach", "lemma-use"])
        detach = scripts[0]
        self.assertEqual(detach.proof.hypotheses, [parse("a"), parse("a > b")])
        self.assertEqual([line.justification for line in detach.proof.lines], [Hyp(0), Hyp(1), MP(0, 1)])
        self.assertEqual(detach.proof.conclusion, parse("b"))
        self.assertEqual(detach.transforms, ["elim"])
        self.assertEqual(detach.mode, "pure")
        self.assertEqual(detach.line, 2)

    def test_justifications(self):
        lines = parse_proof_script(PROOF_SCRIPT)[1].proof.lines
        self.assertEqual(lines[0].justification, Lemma("+identity"))
        self.assertEqual(lines[1].justification, Taut())
        self.assertEqual(lines[2].justification, Axiom("Ax1.1", plus_depth=1))

    def test_conclusion_defaults_to_last_line(self):
        self.assertEqual(parse_proof_script(PROOF_SCRIPT)[1].proof.conclusion, parse("+(a > (b > a))"))

    def test_system_directive(self):
        script = "proof li\nassume @a\n1 @a ; hyp 1\nqed\nsystem LI\n"
        self.assertEqual(parse_proof_script(script)[0].proof.system, "LI")

    def test_print_proof_reparses(self):
        original = parse_proof_script(PROOF_SCRIPT)[0]
        text = print_proof(original.proof, original.transforms, original.mode)
        again = parse_proof_script(text)[0]
        self.assertEqual(again.proof.lines, original.proof.lines)
        self.assertEqual(again.transforms, ["elim"])

    def test_misnumbered_line(self):
        with self.assertRaises(ScriptSyntaxError) as context:
            parse_proof_script("proof p\n1 a ; taut\n3 a ; taut\nqed\n")
        self.assertEqual(context.exception.line, 3)

    def test_bad_formula_position(self):
        with self.assertRaises(ScriptSyntaxError) as context:
            parse_proof_script("proof p\n1 a & ; taut\nqed\n")
        self.assertEqual(context.exception.line, 2)
        self.assertGreater(context.exception.column, 1)

    def test_missing_qed(self):
        with self.assertRaises(ScriptSyntaxError):
            parse_proof_script("proof p\n1 a ; taut\n")

    def test_stray_line_after_qed(self):
        with self.assertRaises(ScriptSyntaxError):
            parse_proof_script("proof p\n1 a ; taut\nqed\n2 a ; taut\n")

    def test_unknown_transform(self):
        with self.assertRaises(ScriptSyntaxError):
            parse_proof_script("proof p\n1 a ; taut\nqed\ntransform swap\n")


class TestDerivationScripts(unittest.TestCase):
    """Test cases for the derivation script format."""

    def test_parse_blocks(self):
        blocks = parse_derivation_script(DERIVATION_SCRIPT)
        self.assertEqual([b.name for b in blocks], ["conj-elim", "conj-elim-implication", "dcml"])
        self.assertEqual(blocks[0].steps, [Step(RuleId.B, parse_address("#/1"))])
        self.assertEqual(blocks[1].combinator, ("tdg", None, ("conj-elim",)))
        self.assertEqual(blocks[2].steps[0].lemma, "lambda")
        self.assertEqual(blocks[2].ruleset, "RTRA")

    def test_step_options(self):
        blocks = parse_derivation_script("deriv p\nfrom (a)\nstep E at #/0 put b c\n"
                                         "step DCC bwd at #/0/0:0\nto (a b c)\n")
        first, second = blocks[0].steps
        self.assertEqual(first.payload, parse_graph("b c"))
        self.assertEqual(second.direction, "bwd")

    def test_load_resolves_combinators(self):
        derivations = load_derivations(DERIVATION_SCRIPT)
        for d in derivations:
            with self.subTest(name=d.name):
                self.assertTrue(check_derivation(d).accepted)
        self.assertTrue(canonical_equal(derivations[1].end, parse_graph("(a b (a))")))

    def test_print_derivation_reparses(self):
        d = load_derivations(DERIVATION_SCRIPT)[0]
        again = load_derivations(print_derivation(d))[0]
        self.assertEqual(again.steps, d.steps)
        self.assertEqual(again.end, d.end)

    def test_unknown_rule(self):
        with self.assertRaises(ScriptSyntaxError) as context:
            parse_derivation_script("deriv p\nfrom a\nstep ZZ at #/0\nto a\n")
        self.assertEqual(context.exception.line, 3)

    def test_direction_on_one_way_rule(self):
        with self.assertRaises(ScriptSyntaxError):
            parse_derivation_script("deriv p\nfrom a b\nstep B bwd at #/0\nto b\n")

    def test_missing_to_line(self):
        with self.assertRaises(ScriptSyntaxError):
            parse_derivation_script("deriv p\nfrom a\nstep I at #/0\n")

    def test_unknown_source_block(self):
        with self.assertRaises(TransformError):
            load_derivations("deriv p\ntdg nowhere\nto a\n")

    def test_duplicate_block(self):
        with self.assertRaises(ScriptSyntaxError):
            load_derivations("deriv p\nfrom a\nto a\n\nderiv p\nfrom a\nto a\n")


if __name__ == '__main__':
    unittest.main()
