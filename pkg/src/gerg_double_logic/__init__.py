from gerg_double_logic.exceptions import (KernelAssertionError, FormulaSyntaxError, GraphSyntaxError, ScriptSyntaxError,
                                          SchemaBindingError, AddressError, RuleApplicationError, ProofCheckError,
                                          TransformError, AtomBudgetError, CorpusError)
from gerg_double_logic.kernel_config import KernelConfig
from gerg_double_logic.kernel_context import RulesetContext
from gerg_double_logic.formula import (Formula, FragmentReport, print_formula, expand_sugar, define_expand, classify,
                                       instantiate, atoms, substitute_atoms, is_alternate_rooted, plus)
from gerg_double_logic.syntax import parse, parse_graph, parse_address
from gerg_double_logic.graph import (Address, Graph, GraphAtom, GraphAltAtom, CutC, CutA, LAMBDA, print_graph,
                                     canonicalize, canonical_equal, region_of, subgraph_at, replace_at, context_at,
                                     plug, classify_graph)
from gerg_double_logic.hilbert import Proof, ProofLine, Axiom, MP, Taut, Hyp, Lemma, LD_TABLE, LI_TABLE, match_axiom, taut_check
from gerg_double_logic.proof_checker import ProofChecker, check_proof, check_li_proof
from gerg_double_logic.proof_transforms import necessitate, eliminate_hypothesis, tdi, apply_transforms, li_to_ld
from gerg_double_logic.rules import RuleId, RuleSet, Step, Derivation, LemmaTable, RTRA, RTRAC, RTRA_LI
from gerg_double_logic.rewrite_engine import RewriteEngine
from gerg_double_logic.derivations import (apply_step, check_derivation, expand_derived, reverse_step,
                                           reverse_derivation, apply_derivation_in_context, tdg, tdgf, tdig, join)
from gerg_double_logic.bridge import (to_graph, read_formula, collapse_graph, collapse_formula, collapse_derivation,
                                      derivation_obligations, proof_to_derivation, ObligationReport)
from gerg_double_logic.truth_table import truth_table_taut
from gerg_double_logic.semantics import KripkeModel, kripke_check, soundness_scan
from gerg_double_logic.search import SearchConfig, bounded_search
from gerg_double_logic.scripts import parse_proof_script, parse_derivation_script, load_derivations, print_proof, print_derivation
from gerg_double_logic.check_report import CheckReport, Diagnostic
from gerg_double_logic.render import render_graph
from gerg_double_logic.corpus_runner import CorpusManifest, CorpusRunner, CorpusSummary, load_manifest, run_corpus
from gerg_double_logic.factory_functions import (create_rewrite_engine, create_classical_engine,
                                                 create_intuitionistic_engine, create_lenient_engine,
                                                 create_proof_checker, create_custom_condition_engine)

__all__ = [
    # Exceptions
    'KernelAssertionError',
    'FormulaSyntaxError',
    'GraphSyntaxError',
    'ScriptSyntaxError',
    'SchemaBindingError',
    'AddressError',
    'RuleApplicationError',
    'ProofCheckError',
    'TransformError',
    'AtomBudgetError',
    'CorpusError',

    # Configuration
    'KernelConfig',
    'RulesetContext',

    # Formulas
    'Formula',
    'FragmentReport',
    'parse',
    'print_formula',
    'expand_sugar',
    'define_expand',
    'classify',
    'instantiate',
    'atoms',
    'substitute_atoms',
    'is_alternate_rooted',
    'plus',

    # Graphs
    'Address',
    'Graph',
    'GraphAtom',
    'GraphAltAtom',
    'CutC',
    'CutA',
    'LAMBDA',
    'parse_graph',
    'parse_address',
    'print_graph',
    'canonicalize',
    'canonical_equal',
    'region_of',
    'subgraph_at',
    'replace_at',
    'context_at',
    'plug',
    'classify_graph',
    'render_graph',

    # Hilbert proofs
    'Proof',
    'ProofLine',
    'Axiom',
    'MP',
    'Taut',
    'Hyp',
    'Lemma',
    'LD_TABLE',
    'LI_TABLE',
    'match_axiom',
    'taut_check',
    'ProofChecker',
    'check_proof',
    'check_li_proof',
    'necessitate',
    'eliminate_hypothesis',
    'tdi',
    'apply_transforms',
    'li_to_ld',

    # Rewriting
    'RuleId',
    'RuleSet',
    'Step',
    'Derivation',
    'LemmaTable',
    'RTRA',
    'RTRAC',
    'RTRA_LI',
    'RewriteEngine',
    'apply_step',
    'check_derivation',
    'expand_derived',
    'reverse_step',
    'reverse_derivation',
    'apply_derivation_in_context',
    'tdg',
    'tdgf',
    'tdig',
    'join',

    # Formula/graph bridge and semantics
    'to_graph',
    'read_formula',
    'collapse_graph',
    'collapse_formula',
    'collapse_derivation',
    'derivation_obligations',
    'proof_to_derivation',
    'ObligationReport',
    'truth_table_taut',
    'KripkeModel',
    'kripke_check',
    'soundness_scan',
    'SearchConfig',
    'bounded_search',

    # Scripts, reports and corpus
    'parse_proof_script',
    'parse_derivation_script',
    'load_derivations',
    'print_proof',
    'print_derivation',
    'CheckReport',
    'Diagnostic',
    'CorpusManifest',
    'CorpusRunner',
    'CorpusSummary',
    'load_manifest',
    'run_corpus',

    # Factory functions
    'create_rewrite_engine',
    'create_classical_engine',
    'create_intuitionistic_engine',
    'create_lenient_engine',
    'create_proof_checker',
    'create_custom_condition_engine',
]
