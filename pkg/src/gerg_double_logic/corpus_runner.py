# corpus_runner.py
import json
import logging
import time
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from gerg_double_logic.bridge import proof_to_derivation, to_graph
from gerg_double_logic.check_report import CheckReport, DiagnosticCollector
from gerg_double_logic.derivations import check_derivation
from gerg_double_logic.exceptions import CorpusError, KernelAssertionError
from gerg_double_logic.formula import Formula, define_expand, plus, print_formula
from gerg_double_logic.graph import LAMBDA, Address, CutA, CutC, canonical_equal
from gerg_double_logic.hilbert import LD_TABLE, Proof, normalize
from gerg_double_logic.proof_checker import check_li_proof, check_proof
from gerg_double_logic.proof_transforms import apply_transforms, li_to_ld, necessitate
from gerg_double_logic.rules import CERTIFYING_RULESETS, Derivation, LemmaTable, RuleId, Step
from gerg_double_logic.scripts import ProofScript, load_derivations, parse_proof_script
from gerg_double_logic.semantics import soundness_scan
from gerg_double_logic.syntax import parse

logger = logging.getLogger(__name__)

ENTRY_KINDS = ("derivation", "proof")
RULESET_FILTERS = {"alfa-ld": "RTRA", "alfa-lc": "RTRAC", "alfa-li": "RTRA-LI"}


@dataclass
class CorpusEntry:
    """One manifest entry: a script file plus what the runner should check about it."""
    name: str
    kind: str
    file: str
    ruleset: Optional[str] = None
    rulesets: List[str] = field(default_factory=list)
    expect: str = "accept"
    requires: List[str] = field(default_factory=list)
    tags: List[str] = field(default_factory=list)
    formulas: Dict[str, str] = field(default_factory=dict)
    conclusions: Dict[str, str] = field(default_factory=dict)
    li_axioms: Dict[str, str] = field(default_factory=dict)
    to_ld: bool = False

    @property
    def checked_rulesets(self) -> List[str]:
        return list(self.rulesets) or [self.ruleset or "RTRA"]

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CorpusEntry":
        for key in ("name", "kind", "file"):
            if key not in data:
                raise CorpusError(f"manifest entry is missing '{key}': {data}")
        if data["kind"] not in ENTRY_KINDS:
            raise CorpusError(f"entry '{data['name']}' has unknown kind '{data['kind']}'")
        if data.get("expect", "accept") not in ("accept", "reject"):
            raise CorpusError(f"entry '{data['name']}' has unknown expectation '{data['expect']}'")
        known = set(cls.__dataclass_fields__)
        return cls(**{k: v for k, v in data.items() if k in known})


def _corpus_root():
    return resources.files("gerg_double_logic").joinpath("corpus")


@dataclass
class CorpusManifest:
    entries: List[CorpusEntry]
    root: Any = None

    def __post_init__(self):
        if self.root is None:
            self.root = _corpus_root()
        seen = set()
        for entry in self.entries:
            if entry.name in seen:
                raise CorpusError(f"entry '{entry.name}' listed twice")
            seen.add(entry.name)

    def entry(self, name: str) -> CorpusEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise CorpusError(f"no corpus entry named '{name}'")

    def read(self, entry: CorpusEntry) -> str:
        source = self.root.joinpath(entry.file)
        if not source.is_file():
            raise CorpusError(f"corpus file '{entry.file}' of entry '{entry.name}' not found")
        return source.read_text(encoding="utf-8")

    def ordered(self, entries: Optional[List[CorpusEntry]] = None) -> List[CorpusEntry]:
        """Entries in dependency order; ties keep manifest order."""
        entries = self.entries if entries is None else entries
        by_name = {e.name: e for e in entries}
        index = {e.name: i for i, e in enumerate(self.entries)}
        for entry in entries:
            for required in entry.requires:
                if required not in by_name:
                    raise CorpusError(f"entry '{entry.name}' requires unknown entry '{required}'")
        sorter = TopologicalSorter({e.name: e.requires for e in entries})
        try:
            sorter.prepare()
        except CycleError as exc:
            raise CorpusError(f"dependency cycle: {' -> '.join(exc.args[1])}") from None
        order: List[CorpusEntry] = []
        while sorter.is_active():
            ready = sorted(sorter.get_ready(), key=index.__getitem__)
            order += [by_name[name] for name in ready]
            sorter.done(*ready)
        return order

    def select(self, pattern: Optional[str] = None) -> List[CorpusEntry]:
        """Entries matching a ruleset filter, a name or a tag, plus everything they require."""
        if pattern is None:
            chosen = list(self.entries)
        elif pattern in RULESET_FILTERS:
            chosen = [e for e in self.entries if RULESET_FILTERS[pattern] in e.checked_rulesets]
        else:
            chosen = [e for e in self.entries if e.name == pattern or pattern in e.tags]
        names = {e.name for e in chosen}
        pending = [r for e in chosen for r in e.requires]
        while pending:
            name = pending.pop()
            if name not in names:
                names.add(name)
                pending += self.entry(name).requires
        return self.ordered([e for e in self.entries if e.name in names])


def load_manifest(path: Optional[Union[str, Path]] = None) -> CorpusManifest:
    """Read a manifest file (or a directory holding manifest.json); default is the bundled corpus."""
    if path is None:
        root = _corpus_root()
        source = root.joinpath("manifest.json")
    else:
        source = Path(path)
        if source.is_dir():
            source = source / "manifest.json"
        root = source.parent
    if not source.is_file():
        raise CorpusError(f"manifest '{source}' not found")
    try:
        data = json.loads(source.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CorpusError(f"manifest '{source}' is not valid JSON: {exc}") from None
    return CorpusManifest([CorpusEntry.from_dict(item) for item in data.get("entries", [])], root)


@dataclass
class EntryResult:
    name: str
    kind: str
    expect: str = "accept"
    reports: List[CheckReport] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def accepted(self) -> bool:
        return not self.errors and all(r.accepted for r in self.reports)

    @property
    def passed(self) -> bool:
        return self.accepted == (self.expect == "accept")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind,
            "expect": self.expect,
            "verdict": "accept" if self.accepted else "reject",
            "passed": self.passed,
            "elapsed": round(self.elapsed, 4),
            "errors": list(self.errors),
            "reports": [r.to_dict() for r in self.reports],
        }


@dataclass
class CorpusSummary:
    results: List[EntryResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        head = f"{self.passed} passed, {self.failed} failed in {self.elapsed:.2f}s"
        failures = [r for r in self.results if not r.passed]
        if not failures:
            return head
        lines = [head, "Failed entries:"]
        for result in failures:
            lines.append(f"  - {result.name}")
            lines += [f"      {e}" for e in result.errors]
            for report in result.reports:
                if not report.accepted:
                    lines.append(f"      {report.name}:")
                    lines += [f"        {d}" for d in report.diagnostics]
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "failed": self.failed,
            "elapsed": round(self.elapsed, 4),
            "entries": [r.to_dict() for r in self.results],
        }


def _mismatch(name: str, kind: str, message: str, **details) -> CheckReport:
    collector = DiagnosticCollector(name)
    collector.add(None, kind, message)
    return collector.report(kind=kind, **details)


class CorpusRunner:
    """Runs manifest entries in dependency order, sharing lemmas between them."""

    def __init__(self, manifest: Optional[CorpusManifest] = None, lemmas: Optional[LemmaTable] = None,
                 soundness: bool = False):
        self.manifest = manifest if manifest is not None else load_manifest()
        self.lemmas = lemmas if lemmas is not None else LemmaTable()
        self.soundness = soundness
        self.formula_lemmas: Dict[str, Formula] = {}
        self.derivations: Dict[str, Derivation] = {}
        self.proofs: Dict[str, Proof] = {}

    def axiom_corpus(self) -> Dict[str, Derivation]:
        ids = set(LD_TABLE.ids())
        return {name: d for name, d in self.derivations.items() if name in ids}

    def run(self, pattern: Optional[str] = None) -> CorpusSummary:
        started = time.perf_counter()
        entries = self.manifest.select(pattern)
        for entry in entries:
            self.manifest.read(entry)
        summary = CorpusSummary([self.run_entry(entry) for entry in entries])
        summary.elapsed = time.perf_counter() - started
        logger.info("corpus: %d passed, %d failed (%.2fs)", summary.passed, summary.failed, summary.elapsed)
        return summary

    def run_entry(self, entry: CorpusEntry) -> EntryResult:
        result = EntryResult(entry.name, entry.kind, entry.expect)
        started = time.perf_counter()
        text = self.manifest.read(entry)
        try:
            if entry.kind == "derivation":
                self._run_derivations(entry, text, result)
            else:
                self._run_proofs(entry, text, result)
        except KernelAssertionError as exc:
            result.errors.append(str(exc))
        result.elapsed = time.perf_counter() - started
        logger.info("%s %s: %s (%.3fs)", entry.kind, entry.name,
                    "pass" if result.passed else "FAIL", result.elapsed)
        return result

    # Derivation entries
    def _run_derivations(self, entry: CorpusEntry, text: str, result: EntryResult) -> None:
        for d in load_derivations(text, self.lemmas, entry.ruleset):
            reports = [check_derivation(d, rs, self.lemmas) for rs in entry.checked_rulesets]
            result.reports += reports
            self.derivations[d.name] = d
            accepted = all(r.accepted for r in reports)
            if not accepted:
                logger.debug("%s rejected", d.name)
                continue
            certifying = [r for r in reports if r.details["ruleset"] in CERTIFYING_RULESETS]
            if d.start == LAMBDA and certifying:
                self.lemmas.certify(d.name, d, certifying[0])
                if self.soundness:
                    scan = soundness_scan(d, self.lemmas)
                    if not scan.all_true:
                        result.reports.append(_mismatch(
                            d.name, "soundness",
                            f"{len(scan.failures())} collapse obligations are not tautologies",
                            obligations=scan.to_dict()))
            if d.name in entry.formulas:
                self._bridge_formula(d, entry.formulas[d.name], result)

    def _bridge_formula(self, d: Derivation, text: str, result: EntryResult) -> None:
        """Tie a certified graph lemma to a formula, and certify its + form as well."""
        f = parse(text)
        if not canonical_equal(to_graph(f), d.end):
            result.reports.append(_mismatch(d.name, "formula", f"graph of '{text}' differs from the end graph"))
            return
        self.formula_lemmas[d.name] = f
        if d.start != LAMBDA:
            return
        wrapped = Derivation(
            "+" + d.name, LAMBDA,
            list(d.steps) + [Step(RuleId.DCMGEV, Address((), (0, len(d.end))), direction="fwd", lemma=d.name)],
            (CutA((CutC(tuple(d.end)),)),), "RTRA")
        report = check_derivation(wrapped, "RTRA", self.lemmas)
        result.reports.append(report)
        if report.accepted:
            self.lemmas.certify(wrapped.name, wrapped, report)
            self.formula_lemmas[wrapped.name] = plus(define_expand(f))

    # Proof entries
    def _check(self, p: Proof, mode: str) -> CheckReport:
        if p.system == "LI":
            return check_li_proof(p, self.formula_lemmas)
        return check_proof(p, mode, self.formula_lemmas)

    def _run_proofs(self, entry: CorpusEntry, text: str, result: EntryResult) -> None:
        for script in parse_proof_script(text):
            self._run_proof(entry, script, result)

    def _run_proof(self, entry: CorpusEntry, script: ProofScript, result: EntryResult) -> None:
        p = script.proof
        report = self._check(p, script.mode)
        result.reports.append(report)
        if not report.accepted:
            return
        if script.transforms:
            p = apply_transforms(p, script.transforms, self.formula_lemmas)
            report = self._check(p, "taut")
            report.name = f"{p.name} ({' '.join(script.transforms)})"
            result.reports.append(report)
            if not report.accepted:
                return
        expected = entry.conclusions.get(p.name)
        if expected is not None:
            want = normalize(parse(expected), p.system)
            if normalize(p.conclusion, p.system) != want:
                result.reports.append(_mismatch(
                    p.name, "conclusion", f"expected '{expected}', proof ends at '{print_formula(p.conclusion)}'"))
                return
        self.proofs[p.name] = p
        self.formula_lemmas[p.name] = p.conclusion
        if p.system == "LD" and not p.hypotheses and not script.transforms:
            self._necessitate(p, result)
            if script.mode == "pure":
                self._compile(p, result)
        if p.system == "LI" and entry.to_ld:
            self._translate(entry, p, result)

    def _necessitate(self, p: Proof, result: EntryResult) -> None:
        name = "+" + p.name
        if name in self.formula_lemmas:
            return
        lifted = necessitate(p, self.formula_lemmas)
        report = check_proof(lifted, "taut", self.formula_lemmas)
        report.name = name
        result.reports.append(report)
        if report.accepted:
            self.formula_lemmas[name] = lifted.conclusion

    def _compile(self, p: Proof, result: EntryResult) -> None:
        d = proof_to_derivation(p, self.axiom_corpus(), self.lemmas)
        report = check_derivation(d, "RTRA", self.lemmas)
        result.reports.append(report)
        if report.accepted and not canonical_equal(d.end, to_graph(define_expand(p.conclusion))):
            result.reports.append(_mismatch(d.name, "formula", "compiled derivation ends off the conclusion"))

    def _translate(self, entry: CorpusEntry, p: Proof, result: EntryResult) -> None:
        axiom_proofs = {}
        for proof_name, schema_id in entry.li_axioms.items():
            if proof_name not in self.proofs:
                raise CorpusError(f"entry '{entry.name}' needs proof '{proof_name}', which has not run")
            axiom_proofs[schema_id] = self.proofs[proof_name]
        translated = li_to_ld(p, axiom_proofs, self.formula_lemmas)
        report = check_proof(translated, "taut", self.formula_lemmas)
        report.name = f"{p.name} (LD)"
        result.reports.append(report)


def run_corpus(manifest: Optional[Union[CorpusManifest, str, Path]] = None, pattern: Optional[str] = None,
               soundness: bool = False) -> CorpusSummary:
    """Run the bundled corpus (or the given manifest), optionally filtered."""
    if not isinstance(manifest, CorpusManifest):
        manifest = load_manifest(manifest)
    return CorpusRunner(manifest, soundness=soundness).run(pattern)
