import pytest

hypothesis = pytest.importorskip("hypothesis")
from importlib import resources  # noqa: E402

from hypothesis import given, settings  # noqa: E402
from hypothesis import strategies as st  # noqa: E402

from gerg_double_logic.bridge import collapse_graph, graph_obligations, read_formula, to_graph  # noqa: E402
from gerg_double_logic.derivations import apply_derivation_in_context, apply_step, expand_derived  # noqa: E402
from gerg_double_logic.exceptions import AddressError, RuleApplicationError  # noqa: E402
from gerg_double_logic.formula import (AndC, AtomA, AtomC, IffC, ImpC, NegA, NotC, OrC,  # noqa: E402
                                       define_expand, print_formula)
from gerg_double_logic.graph import (Address, CutA, CutC, GraphAltAtom, GraphAtom,  # noqa: E402
                                     canonical_equal, canonicalize, context_at, interior_region,
                                     print_graph, region_of)
from gerg_double_logic.rules import RuleId, Step, get_ruleset  # noqa: E402
from gerg_double_logic.scripts import load_derivations  # noqa: E402
from gerg_double_logic.search import candidate_steps, payloads  # noqa: E402
from gerg_double_logic.syntax import parse, parse_graph  # noqa: E402
from gerg_double_logic.truth_table import truth_table_taut  # noqa: E402

EXAMPLES = settings(max_examples=1000, deadline=None)
NAMES = st.sampled_from(["a", "b", "c"])
RTRA = get_ruleset("RTRA")
PREMISE_DERIVATIONS = ("cc-core", "conj-elim", "refute-core", "alternate-refute-core", "dcmf-core")

classical_formulas = st.recursive(
    NAMES.map(AtomC),
    lambda inner: st.one_of(
        inner.map(NotC),
        st.tuples(inner, inner).map(lambda p: AndC(*p)),
        st.tuples(inner, inner).map(lambda p: OrC(*p)),
        st.tuples(inner, inner).map(lambda p: ImpC(*p)),
        st.tuples(inner, inner).map(lambda p: IffC(*p)),
    ),
    max_leaves=6,
)

mixed_formulas = st.recursive(
    st.one_of(NAMES.map(AtomC), NAMES.map(AtomA)),
    lambda inner: st.one_of(
        inner.map(NotC),
        inner.map(NegA),
        st.tuples(inner, inner).map(lambda p: AndC(*p)),
        st.tuples(inner, inner).map(lambda p: ImpC(*p)),
    ),
    max_leaves=6,
)


@st.composite
def graphs(draw, max_depth: int = 3, max_size: int = 3):
    items = []
    for _ in range(draw(st.integers(0, max_size))):
        if max_depth == 0 or draw(st.booleans()):
            name = draw(NAMES)
            items.append(GraphAltAtom(name) if draw(st.booleans()) else GraphAtom(name))
        else:
            cut = CutA if draw(st.booleans()) else CutC
            items.append(cut(draw(graphs(max_depth - 1, max_size))))
    return tuple(items)


@EXAMPLES
@given(mixed_formulas)
def test_printed_formula_reparses(f):
    assert parse(print_formula(f)) == f


@EXAMPLES
@given(graphs())
def test_printed_graph_reparses(g):
    assert parse_graph(print_graph(g) or "lambda") == g


@EXAMPLES
@given(mixed_formulas)
def test_define_expand_is_idempotent(f):
    once = define_expand(f)
    assert define_expand(once) == once


@EXAMPLES
@given(mixed_formulas)
def test_translation_is_canonical(f):
    g = to_graph(f)
    assert canonicalize(g) == g


@EXAMPLES
@given(classical_formulas)
def test_reading_a_classical_graph_is_equivalent(f):
    assert truth_table_taut(IffC(f, read_formula(to_graph(f))))


@EXAMPLES
@given(graphs())
def test_canonicalize_is_idempotent_and_order_free(g):
    once = canonicalize(g)
    assert canonicalize(once) == once
    assert canonical_equal(g, tuple(reversed(g)))


@EXAMPLES
@given(graphs())
def test_double_cut_round_trip(g):
    wrapped = apply_step(g, Step(RuleId.DCC, Address((), (0, len(g)))), "RTRA")
    assert apply_step(wrapped, Step(RuleId.DCC, Address((0,)), direction="bwd"), "RTRA") == g


@EXAMPLES
@given(graphs(), graphs())
def test_loop_and_its_double_cut(x, y):
    loop = (CutA(x + (CutC(y),)),)
    wrapped = apply_step(loop, Step(RuleId.DCC, Address((0,), (0, len(x) + 1))), "RTRA")
    assert wrapped == (CutA((CutC((CutC(x + (CutC(y),)),)),)),)


@EXAMPLES
@given(graphs())
def test_mixed_cut_expansion_matches_its_steps(x):
    g = (CutA((CutC(x),)),)
    s = Step(RuleId.DCM, Address((0,)))
    replayed = g
    for inner in expand_derived(s, g):
        replayed = apply_step(replayed, inner, "RTRA")
    assert apply_step(g, s, "RTRA") == replayed == x


@EXAMPLES
@given(graphs().filter(lambda g: len(g) > 0))
def test_erasure_at_the_sheet_is_classically_sound(g):
    after = apply_step(g, Step(RuleId.B, Address((0,))), "RTRA")
    assert graph_obligations("erase", [g, after]).all_true


@EXAMPLES
@given(graphs())
def test_collapse_is_idempotent(g):
    once = collapse_graph(g)
    assert collapse_graph(once) == once


def _item_paths(g, path=()):
    for index, item in enumerate(g):
        yield path + (index,)
        if isinstance(item, (CutA, CutC)):
            yield from _item_paths(item.items, path + (index,))


def _site(s: Step):
    return s.at.path if s.at.span is not None else s.at.path[:-1]


@EXAMPLES
@given(graphs(max_depth=2, max_size=2), st.data())
def test_step_keeps_parity_outside_its_site(g, data):
    steps = list(candidate_steps(g, RTRA, payloads(g, ("a", "@a"))))
    first = data.draw(st.integers(0, len(steps) - 1))
    for s in steps[first:] + steps[:first]:
        try:
            after = apply_step(g, s, "RTRA")
        except (RuleApplicationError, AddressError):
            continue
        break
    site = _site(s)
    assert interior_region(after, site) == interior_region(g, site)
    if not site:
        return
    assert len(after) == len(g)
    for path in _item_paths(g):
        if path[0] != site[0]:
            assert after[path[0]] == g[path[0]]
            assert region_of(after, Address(path)).parity == region_of(g, Address(path)).parity


def _bundled_premise_derivations():
    text = resources.files("gerg_double_logic").joinpath("corpus/combinators.deriv").read_text(encoding="utf-8")
    bundled = {d.name: d for d in load_derivations(text)}
    return [bundled[name] for name in PREMISE_DERIVATIONS]


@EXAMPLES
@given(st.sampled_from(_bundled_premise_derivations()), graphs(max_depth=2, max_size=2),
       graphs(max_depth=2, max_size=2), graphs(max_depth=2, max_size=2))
def test_derivation_runs_backward_in_an_odd_hole(d, outside, left, right):
    end = tuple(d.end)
    g = outside + (CutC(left + end + right),)
    ctx = context_at(g, Address((len(outside),), (len(left), len(left) + len(end))))
    result = apply_derivation_in_context(d, ctx, g)
    assert canonical_equal(result, outside + (CutC(left + tuple(d.start) + right),))
