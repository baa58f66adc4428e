# syntax.py
# pyparsing grammars for formulas, graphs and addresses.
import pyparsing as pp

from gerg_double_logic.exceptions import FormulaSyntaxError, GraphSyntaxError
from gerg_double_logic.formula import (AtomA, AtomC, BINARY_BY_SYMBOL, Formula, Meta,
                                       UNARY_BY_SYMBOL)
from gerg_double_logic.graph import (Address, CutA, CutC, Graph, GraphAltAtom, GraphAtom)

pp.ParserElement.enable_packrat()

_IDENT = r"[a-z][a-z0-9_]*"
_RESERVED = pp.MatchFirst([pp.Keyword(k) for k in ("v", "sat", "ref", "wf")])


def _fold_left(tokens):
    result = tokens[0]
    for i in range(1, len(tokens), 2):
        result = BINARY_BY_SYMBOL[tokens[i]](result, tokens[i + 1])
    return result


def _join_right(tokens):
    if len(tokens) == 1:
        return tokens[0]
    return BINARY_BY_SYMBOL[tokens[1]](tokens[0], tokens[2])


def _make_meta(tokens):
    text = tokens[0]
    if text.endswith("_"):
        return Meta(text[:-1], alternate=True)
    return Meta(text)


def _build_formula_grammar() -> pp.ParserElement:
    formula = pp.Forward()
    classical_atom = (~_RESERVED + pp.Regex(_IDENT)).set_parse_action(lambda t: AtomC(t[0]))
    alternate_atom = pp.Regex("@" + _IDENT).set_parse_action(lambda t: AtomA(t[0][1:]))
    metavariable = pp.Regex(r"[A-Z][A-Za-z0-9]*_?").set_parse_action(_make_meta)
    group = pp.Suppress("(") - formula - pp.Suppress(")")
    primary = alternate_atom | metavariable | classical_atom | group

    prefix_op = pp.one_of("~ ! +") | pp.Keyword("sat") | pp.Keyword("ref") | pp.Keyword("wf")
    unary = pp.Forward()
    unary <<= (prefix_op - unary).set_parse_action(lambda t: UNARY_BY_SYMBOL[t[0]](t[1])) | primary

    and_op = pp.one_of("& ^")
    or_op = pp.Literal("|") | pp.Keyword("v")
    imp_op = pp.Literal("->") | pp.Literal(">")
    iff_op = pp.Literal("<->") | pp.Literal("=")

    and_level = (unary + pp.ZeroOrMore(and_op - unary)).set_parse_action(_fold_left)
    or_level = (and_level + pp.ZeroOrMore(or_op - and_level)).set_parse_action(_fold_left)
    imp_level = pp.Forward()
    imp_level <<= (or_level + pp.Optional(imp_op - imp_level)).set_parse_action(_join_right)
    iff_level = (imp_level + pp.ZeroOrMore(iff_op - imp_level)).set_parse_action(_fold_left)
    formula <<= iff_level
    return formula


def _build_graph_grammar() -> pp.ParserElement:
    item = pp.Forward()
    sequence = pp.Group(pp.ZeroOrMore(item))
    lambda_token = pp.Keyword("lambda").suppress()
    graph_atom = (~pp.Keyword("lambda") + pp.Regex(_IDENT)).set_parse_action(lambda t: GraphAtom(t[0]))
    graph_alt_atom = pp.Regex("@" + _IDENT).set_parse_action(lambda t: GraphAltAtom(t[0][1:]))
    classical_cut = (pp.Suppress("(") - sequence - pp.Suppress(")")).set_parse_action(
        lambda t: CutC(tuple(t[0])))
    alternate_cut = (pp.Suppress("[") - sequence - pp.Suppress("]")).set_parse_action(
        lambda t: CutA(tuple(t[0])))
    item <<= classical_cut | alternate_cut | graph_alt_atom | graph_atom | lambda_token
    return sequence


def _build_address_grammar() -> pp.ParserElement:
    index = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    step = pp.Suppress("/") + index + ~pp.FollowedBy(":")
    span = pp.Suppress("/") + index("start") + pp.Suppress(":") + index("end")
    return pp.Suppress("#") + pp.Group(pp.ZeroOrMore(step))("path") + pp.Optional(span)


FORMULA_GRAMMAR = _build_formula_grammar()
GRAPH_GRAMMAR = _build_graph_grammar()
ADDRESS_GRAMMAR = _build_address_grammar()


def parse(text: str) -> Formula:
    """Parse formula text; errors carry line and column."""
    try:
        return FORMULA_GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise FormulaSyntaxError(exc.msg, exc.lineno, exc.col) from None


parse_formula = parse


def parse_graph(text: str) -> Graph:
    """Parse graph text; `lambda` and the empty string denote λ."""
    try:
        return tuple(GRAPH_GRAMMAR.parse_string(text, parse_all=True)[0])
    except pp.ParseBaseException as exc:
        raise GraphSyntaxError(exc.msg, exc.lineno, exc.col) from None


def parse_address(text: str) -> Address:
    """Parse `#`, `#/i/j` or `#/i/s:e`."""
    try:
        result = ADDRESS_GRAMMAR.parse_string(text.strip(), parse_all=True)
    except pp.ParseBaseException as exc:
        raise GraphSyntaxError(f"bad address '{text}': {exc.msg}", exc.lineno, exc.col) from None
    span = None
    if "start" in result:
        span = (result["start"], result["end"])
    return Address(tuple(result["path"]), span)
