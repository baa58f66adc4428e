# proof_transforms.py
# Necessitation and deduction-theorem elaboration as proof-to-proof transformers.
import logging
from typing import Dict, List, Optional

from gerg_double_logic.exceptions import ProofCheckError, TransformError
from gerg_double_logic.formula import (Formula, ImpC, NotC, define_expand, expand_sugar,
                                       is_alternate_rooted, match_schema, plus,
                                       print_formula, substitute_atoms)
from gerg_double_logic.hilbert import (LI_TABLE, MP, Axiom, Hyp, Lemma, Proof, ProofBuilder,
                                       Taut, match_axiom, match_schema_id, taut_check)
from gerg_double_logic.proof_checker import check_li_proof, check_proof

logger = logging.getLogger(__name__)


def _require_accepted(p: Proof, lemmas: Dict[str, Formula]) -> None:
    report = check_proof(p, "taut", lemmas)
    if not report.accepted:
        details = "; ".join(str(d) for d in report.diagnostics)
        raise ProofCheckError(f"proof '{p.name}' does not check: {details}")


def necessitate(p: Proof, lemmas: Optional[Dict[str, Formula]] = None) -> Proof:
    """Proof of +C from a proof of C.

    Hypotheses are allowed when every one of them is FA; each is lifted through Ax2.3.
    """
    lemmas = lemmas or {}
    _require_accepted(p, lemmas)
    for k, hypothesis in enumerate(p.hypotheses):
        if not is_alternate_rooted(hypothesis):
            raise TransformError(
                f"cannot necessitate under hypothesis {k + 1} '{print_formula(hypothesis)}' (not FA)")

    hypotheses = [define_expand(h) for h in p.hypotheses]
    builder = ProofBuilder(p.name, hypotheses)
    normalized = [define_expand(line.formula) for line in p.lines]
    lifted: List[int] = []

    def lift_alternate(f: Formula, justification) -> int:
        proved = builder.add(f, justification)
        step = builder.add(ImpC(f, plus(f)), Axiom("Ax2.3", {"X": f}, 0))
        return builder.mp(proved, step)

    for line, f in zip(p.lines, normalized):
        just = line.justification
        if isinstance(just, Axiom):
            schema_id, bindings, depth = match_axiom(f)
            if depth == 0:
                lifted.append(builder.add(plus(f), Axiom(schema_id, bindings, 1)))
            else:
                lifted.append(lift_alternate(f, Axiom(schema_id, bindings, 1)))
        elif isinstance(just, Taut):
            if taut_check(f):
                lifted.append(builder.add(plus(f), Taut()))
            else:
                lifted.append(lift_alternate(f, Taut()))
        elif isinstance(just, Lemma):
            plus_name = "+" + just.name
            if plus_name in lemmas and define_expand(lemmas[plus_name]) == plus(f):
                lifted.append(builder.add(plus(f), Lemma(plus_name)))
            elif is_alternate_rooted(f):
                lifted.append(lift_alternate(f, just))
            else:
                raise TransformError(f"lemma '{just.name}' has no registered + form")
        elif isinstance(just, Hyp):
            lifted.append(lift_alternate(f, just))
        else:
            antecedent, consequent = normalized[just.i], f
            distribution = builder.add(
                ImpC(plus(ImpC(antecedent, consequent)), ImpC(plus(antecedent), plus(consequent))),
                Axiom("Ax2.1", {"X": antecedent, "Y": consequent}, 0))
            partial = builder.mp(lifted[just.j], distribution)
            lifted.append(builder.mp(lifted[just.i], partial))

    result = builder.build(plus(normalized[-1]))
    logger.debug("necessitate %s: %d -> %d lines", p.name, len(p.lines), len(result.lines))
    return result


def _identity(builder: ProofBuilder, h: Formula) -> int:
    hh = ImpC(h, h)
    first = builder.add(ImpC(h, ImpC(hh, h)), Axiom("Ax1.1", {"X": h, "Y": hh}))
    second = builder.add(ImpC(ImpC(h, ImpC(hh, h)), ImpC(ImpC(h, hh), hh)),
                         Axiom("Ax1.2", {"X": h, "Y": hh, "Z": h}))
    third = builder.mp(first, second)
    fourth = builder.add(ImpC(h, hh), Axiom("Ax1.1", {"X": h, "Y": h}))
    return builder.mp(fourth, third)


def eliminate_hypothesis(p: Proof, lemmas: Optional[Dict[str, Formula]] = None) -> Proof:
    """Deduction theorem: discharge the last hypothesis H, proving H ⊃ C."""
    lemmas = lemmas or {}
    if not p.hypotheses:
        raise TransformError(f"proof '{p.name}' has no hypothesis to eliminate")
    _require_accepted(p, lemmas)

    last = len(p.hypotheses) - 1
    h = define_expand(p.hypotheses[last])
    builder = ProofBuilder(p.name, [define_expand(x) for x in p.hypotheses[:last]])
    normalized = [define_expand(line.formula) for line in p.lines]
    discharged: List[int] = []

    for line, f in zip(p.lines, normalized):
        just = line.justification
        if isinstance(just, Hyp) and just.k == last:
            discharged.append(_identity(builder, h))
        elif isinstance(just, MP):
            antecedent = normalized[just.i]
            distribution = builder.add(
                ImpC(ImpC(h, ImpC(antecedent, f)), ImpC(ImpC(h, antecedent), ImpC(h, f))),
                Axiom("Ax1.2", {"X": h, "Y": antecedent, "Z": f}))
            partial = builder.mp(discharged[just.j], distribution)
            discharged.append(builder.mp(discharged[just.i], partial))
        else:
            proved = builder.add(f, just)
            weakening = builder.add(ImpC(f, ImpC(h, f)), Axiom("Ax1.1", {"X": f, "Y": h}))
            discharged.append(builder.mp(proved, weakening))

    return builder.build(ImpC(h, normalized[-1]))


def tdi(p: Proof, lemmas: Optional[Dict[str, Formula]] = None) -> Proof:
    """Intuitionistic deduction step: eliminate the last hypothesis, then necessitate."""
    return necessitate(eliminate_hypothesis(p, lemmas), lemmas)


TRANSFORMS = {
    "nec": necessitate,
    "elim": eliminate_hypothesis,
    "tdi": tdi,
}


def apply_transforms(p: Proof, names: List[str], lemmas: Optional[Dict[str, Formula]] = None) -> Proof:
    for name in names:
        if name not in TRANSFORMS:
            raise TransformError(f"unknown proof transform '{name}'")
        p = TRANSFORMS[name](p, lemmas)
    return p


def _instantiate_axiom_proof(builder: ProofBuilder, source: Proof, schema_id: str,
                             bindings: Dict[str, Formula]) -> int:
    generic = match_schema(define_expand(LI_TABLE.get(schema_id)), define_expand(source.conclusion))
    if generic is None:
        raise TransformError(f"proof '{source.name}' does not conclude an instance of {schema_id}")
    mapping = {generic[name]: define_expand(bindings[name]) for name in generic}
    local: List[int] = []
    for line in source.lines:
        f = substitute_atoms(line.formula, mapping)
        just = line.justification
        if isinstance(just, MP):
            local.append(builder.mp(local[just.i], local[just.j]))
        elif isinstance(just, Axiom):
            local.append(builder.add(f, Axiom(just.schema_id, {}, just.plus_depth)))
        elif isinstance(just, Lemma) and f != line.formula:
            raise TransformError(f"lemma line in '{source.name}' does not survive substitution")
        else:
            local.append(builder.add(f, just))
    return local[-1]


def li_to_ld(p: Proof, axiom_proofs: Dict[str, Proof],
             lemmas: Optional[Dict[str, Formula]] = None) -> Proof:
    """Re-justify an LI proof in LD: LI axioms by their LD proofs, MPi by Ax2.2 and DN.

    The result is checked as an LD proof before it is returned.
    """
    report = check_li_proof(p)
    if not report.accepted:
        raise ProofCheckError(f"LI proof '{p.name}' does not check")
    missing = sorted({line.justification.schema_id for line in p.lines
                      if isinstance(line.justification, Axiom)
                      and line.justification.schema_id not in axiom_proofs})
    if missing:
        raise TransformError(f"no LD proof registered for {', '.join(missing)}")

    builder = ProofBuilder(p.name, [define_expand(h) for h in p.hypotheses])
    normalized = [define_expand(line.formula) for line in p.lines]
    proved: List[int] = []
    for line, f in zip(p.lines, normalized):
        just = line.justification
        if isinstance(just, Axiom):
            bindings, _ = match_schema_id(expand_sugar(line.formula), just.schema_id, LI_TABLE)
            proved.append(_instantiate_axiom_proof(builder, axiom_proofs[just.schema_id],
                                                   just.schema_id, bindings))
        elif isinstance(just, MP):
            core = ImpC(normalized[just.i], f)
            weakening = builder.add(ImpC(plus(core), NotC(NotC(core))), Axiom("Ax2.2", {"X": NotC(core)}))
            doubled = builder.mp(proved[just.j], weakening)
            double_negation = builder.add(ImpC(NotC(NotC(core)), core), Taut())
            conditional = builder.mp(doubled, double_negation)
            proved.append(builder.mp(proved[just.i], conditional))
        else:
            proved.append(builder.add(f, just))
    translated = builder.build(normalized[-1])
    _require_accepted(translated, lemmas or {})
    return translated
