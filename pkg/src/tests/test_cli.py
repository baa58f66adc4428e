import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from gerg_double_logic.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestFormulaCommands(unittest.TestCase):
    """Test cases for the formula and graph commands."""

    def test_parse(self):
        code, out, _ = run("parse", "(a > (b > c))")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "a > b > c")

    def test_parse_json(self):
        code, out, _ = run("parse", "@x -> @y", "--json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out), {"formula": "@x -> @y", "expanded": "!~(@x > @y)"})

    def test_syntax_error_is_a_usage_error(self):
        code, _, err = run("parse", "a &")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("error:", err)

    def test_unknown_command(self):
        code, _, _ = run("prove-everything")
        self.assertEqual(code, EXIT_USAGE)

    def test_translate(self):
        code, out, _ = run("translate", "+a", "--json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["graph"], "[(a)]")

    def test_classify_graph(self):
        code, out, _ = run("classify", "--graph", "@x")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("in_GA: yes", out)

    def test_collapse_graph(self):
        code, out, _ = run("collapse", "--graph", "[@x]")
        self.assertEqual(out.strip(), "(alt_x)")

    def test_render_formula(self):
        code, out, _ = run("render", "--formula", "~a")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.rstrip("\n"), "+---+\n| a |\n+---+")


class TestScriptCommands(unittest.TestCase):
    """Test cases for checking script files."""

    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()
        self.addCleanup(self.folder.cleanup)

    def write(self, name: str, text: str) -> str:
        path = Path(self.folder.name) / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    def test_check_deriv_accepts(self):
        path = self.write("ok.deriv", "deriv dccl\nfrom lambda\nstep DCC at #/0:0\nto (())\n")
        code, out, _ = run("check-deriv", path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("dccl: accept", out)

    def test_check_deriv_rejects(self):
        path = self.write("bad.deriv", "deriv drop\nfrom (a b)\nstep B at #/0/0\nto (b)\n")
        code, out, _ = run("check-deriv", path, "--json")
        self.assertEqual(code, EXIT_FAILED)
        data = json.loads(out)
        self.assertFalse(data["ok"])
        self.assertEqual(data["items"][0]["diagnostics"][0]["kind"], "parity")

    def test_check_deriv_under_another_ruleset(self):
        path = self.write("cc.deriv", "deriv cc\nfrom [a]\nstep CC at #/0\nto (a)\n")
        self.assertEqual(run("check-deriv", path)[0], EXIT_OK)
        self.assertEqual(run("check-deriv", path, "--ruleset", "RTRAC")[0], EXIT_FAILED)

    def test_loop_ruleset_derivations_are_not_lemmas(self):
        path = self.write("li.deriv", "deriv li-empty\nfrom lambda\nto lambda\nruleset RTRA-LI\n\n"
                                      "deriv uses\nfrom lambda\nstep DCMGEV at #/0:0 use li-empty\nto [()]\n")
        code, out, _ = run("check-deriv", path, "--json")
        self.assertEqual(code, EXIT_FAILED)
        data = json.loads(out)
        self.assertEqual(data["items"][0]["verdict"], "accept")
        self.assertEqual(data["items"][1]["diagnostics"][0]["kind"], "missing-lemma")

    def test_missing_file(self):
        code, _, err = run("check-deriv", str(Path(self.folder.name) / "none.deriv"))
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("no such file", err)

    def test_check_proof_pure(self):
        path = self.write("lem.proof", "proof lem\n1 a | ~a ; taut\nqed\n")
        self.assertEqual(run("check-proof", path)[0], EXIT_OK)
        self.assertEqual(run("check-proof", path, "--pure")[0], EXIT_FAILED)

    def test_check_proof_with_transform(self):
        path = self.write("mp.proof", "proof mp\nassume a\nassume a > b\n1 a ; hyp 1\n2 a > b ; hyp 2\n"
                                      "3 b ; mp 1 2\nqed\ntransform elim\n")
        code, out, _ = run("check-proof", path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("mp (elim): accept", out)

    def test_collapse_deriv(self):
        path = self.write("wrap.deriv", "deriv wrap\nfrom @x\nstep DCMF at #/0:1\nto [(@x)]\n")
        code, out, _ = run("collapse-deriv", path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("deriv wrap-collapsed", out)
        self.assertIn("ruleset RTRAC", out)

    def test_expand_derived(self):
        path = self.write("dcm.deriv", "deriv dcm\nfrom [(a)]\nstep DCM at #/0\nto a\n")
        code, out, _ = run("expand-derived", path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("step CC at #/0", out)
        self.assertIn("step DCC bwd at #/0", out)


class TestSearchAndCorpusCommands(unittest.TestCase):
    """Test cases for search, corpus and demo commands."""

    def test_search_finds_double_cut(self):
        code, out, _ = run("search", "(())", "--depth", "1", "--json")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(out)["found"])

    def test_search_reports_nothing_within_bounds(self):
        code, out, _ = run("search", "()", "--depth", "1", "--items", "3")
        self.assertEqual(code, EXIT_FAILED)
        self.assertEqual(out.strip(), "none within bounds (depth 1, items 3)")

    def test_corpus_filter(self):
        code, out, _ = run("corpus", "run", "--filter", "liar")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("1 passed, 0 failed in "))

    def test_corpus_json(self):
        code, out, _ = run("corpus", "run", "--filter", "alfa-li", "--json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["failed"], 0)

    def test_demo_liar(self):
        code, out, _ = run("demo", "liar")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("reads as   ~w & ~wf w", out)


if __name__ == '__main__':
    unittest.main()
