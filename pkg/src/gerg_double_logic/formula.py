# formula.py
# Formula trees over classical and alternate atoms, plus the defined-operator expansions.
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Union

from gerg_double_logic.exceptions import SchemaBindingError


@dataclass(frozen=True)
class AtomC:
    """Classical atom (FAC)."""
    name: str


@dataclass(frozen=True)
class AtomA:
    """Alternate atom (FAA), written `@name`."""
    name: str


@dataclass(frozen=True)
class Meta:
    """Schema metavariable; `alternate` restricts it to FA instances."""
    name: str
    alternate: bool = False


@dataclass(frozen=True)
class Top:
    """Verum. Only produced by graph readback, never by the parser."""


@dataclass(frozen=True)
class _Unary:
    arg: "Formula"
    symbol = "?"
    word = False


@dataclass(frozen=True)
class NotC(_Unary):
    symbol = "~"


@dataclass(frozen=True)
class NegA(_Unary):
    symbol = "!"


@dataclass(frozen=True)
class Plus(_Unary):
    symbol = "+"


@dataclass(frozen=True)
class Ref(_Unary):
    symbol = "ref"
    word = True


@dataclass(frozen=True)
class Sat(_Unary):
    symbol = "sat"
    word = True


@dataclass(frozen=True)
class Wf(_Unary):
    symbol = "wf"
    word = True


@dataclass(frozen=True)
class _Binary:
    left: "Formula"
    right: "Formula"
    symbol = "?"
    level = 0
    alternate = False


@dataclass(frozen=True)
class AndC(_Binary):
    symbol = "&"
    level = 4


@dataclass(frozen=True)
class AndA(_Binary):
    symbol = "^"
    level = 4
    alternate = True


@dataclass(frozen=True)
class OrC(_Binary):
    symbol = "|"
    level = 3


@dataclass(frozen=True)
class OrA(_Binary):
    symbol = "v"
    level = 3
    alternate = True


@dataclass(frozen=True)
class ImpC(_Binary):
    symbol = ">"
    level = 2


@dataclass(frozen=True)
class ImpA(_Binary):
    symbol = "->"
    level = 2
    alternate = True


@dataclass(frozen=True)
class IffC(_Binary):
    symbol = "="
    level = 1


@dataclass(frozen=True)
class IffA(_Binary):
    symbol = "<->"
    level = 1
    alternate = True


Formula = Union[AtomC, AtomA, Meta, Top, NotC, NegA, Plus, Ref, Sat, Wf,
                AndC, AndA, OrC, OrA, ImpC, ImpA, IffC, IffA]

SUGAR_TYPES = (Plus, Ref, Sat, Wf)
UNARY_BY_SYMBOL = {cls.symbol: cls for cls in (NotC, NegA, Plus, Ref, Sat, Wf)}
BINARY_BY_SYMBOL = {cls.symbol: cls for cls in (AndC, AndA, OrC, OrA, ImpC, ImpA, IffC, IffA)}
RIGHT_ASSOCIATIVE_LEVEL = 2
PREFIX_LEVEL = 5

# alternate binary -> classical binary it is defined through
_DEFINIENS = {ImpA: ImpC, AndA: AndC, OrA: OrC, IffA: IffC}


@dataclass(frozen=True)
class FragmentReport:
    """Grammar membership flags for a formula."""
    is_FC: bool
    is_FI: bool
    is_FA: bool
    is_FAT: bool
    is_FOR: bool = True


def _level(f: Formula) -> int:
    return f.level if isinstance(f, _Binary) else PREFIX_LEVEL


def print_formula(f: Formula) -> str:
    """Render with the minimal parentheses the precedence table needs."""
    if isinstance(f, AtomC):
        return f.name
    if isinstance(f, AtomA):
        return "@" + f.name
    if isinstance(f, Meta):
        return f.name + ("_" if f.alternate else "")
    if isinstance(f, Top):
        return "top"
    if isinstance(f, _Unary):
        inner = print_formula(f.arg)
        if _level(f.arg) < PREFIX_LEVEL:
            inner = f"({inner})"
        return f"{f.symbol} {inner}" if f.word else f"{f.symbol}{inner}"
    left, right = print_formula(f.left), print_formula(f.right)
    right_assoc = f.level == RIGHT_ASSOCIATIVE_LEVEL
    if _level(f.left) < f.level or (right_assoc and _level(f.left) == f.level):
        left = f"({left})"
    if _level(f.right) < f.level or (not right_assoc and _level(f.right) == f.level):
        right = f"({right})"
    return f"{left} {f.symbol} {right}"


def plus(f: Formula) -> Formula:
    """The expanded form of +f, i.e. !~f."""
    return NegA(NotC(f))


def expand_sugar(f: Formula) -> Formula:
    """Eliminate +, ref, sat and wf; alternate binaries are kept."""
    if isinstance(f, Plus):
        return plus(expand_sugar(f.arg))
    if isinstance(f, Ref):
        return NotC(plus(expand_sugar(f.arg)))
    if isinstance(f, Sat):
        return NotC(NegA(expand_sugar(f.arg)))
    if isinstance(f, Wf):
        arg = expand_sugar(f.arg)
        return OrC(NegA(arg), plus(arg))
    if isinstance(f, _Unary):
        return type(f)(expand_sugar(f.arg))
    if isinstance(f, _Binary):
        return type(f)(expand_sugar(f.left), expand_sugar(f.right))
    return f


def define_expand(f: Formula) -> Formula:
    """Rewrite alternate binaries to +(classical binary); sugar is expanded too."""
    f = expand_sugar(f)
    return _define(f)


def _define(f: Formula) -> Formula:
    if isinstance(f, _Unary):
        return type(f)(_define(f.arg))
    if isinstance(f, _Binary):
        left, right = _define(f.left), _define(f.right)
        if f.alternate:
            return plus(_DEFINIENS[type(f)](left, right))
        return type(f)(left, right)
    return f


def _walk(f: Formula):
    yield f
    if isinstance(f, _Unary):
        yield from _walk(f.arg)
    elif isinstance(f, _Binary):
        yield from _walk(f.left)
        yield from _walk(f.right)


def is_alternate_rooted(f: Formula) -> bool:
    """FA shape test: root is NegA or an alternate atom (after sugar expansion)."""
    f = expand_sugar(f)
    return isinstance(f, (NegA, AtomA)) or (isinstance(f, Meta) and f.alternate)


def classify(f: Formula) -> FragmentReport:
    f = expand_sugar(f)
    nodes = list(_walk(f))
    alternate_only = any(isinstance(n, (AtomA, NegA)) or (isinstance(n, _Binary) and n.alternate)
                         for n in nodes)
    classical_only = any(isinstance(n, (AtomC, NotC)) or (isinstance(n, _Binary) and not n.alternate)
                         for n in nodes)
    return FragmentReport(
        is_FC=not alternate_only,
        is_FI=not classical_only,
        is_FA=is_alternate_rooted(f),
        is_FAT=isinstance(f, (AtomC, AtomA)),
    )


def atoms(f: Formula) -> FrozenSet[Formula]:
    """All AtomC/AtomA leaves."""
    return frozenset(n for n in _walk(f) if isinstance(n, (AtomC, AtomA)))


def metavariables(f: Formula) -> FrozenSet[str]:
    return frozenset(n.name for n in _walk(f) if isinstance(n, Meta))


def instantiate(schema: Formula, bindings: Dict[str, Formula]) -> Formula:
    """Simultaneous replacement of metavariables; FA-constrained ones are checked."""
    if isinstance(schema, Meta):
        if schema.name not in bindings:
            raise SchemaBindingError(f"unbound metavariable '{print_formula(schema)}'")
        value = bindings[schema.name]
        if schema.alternate and not is_alternate_rooted(value):
            raise SchemaBindingError(
                f"'{schema.name}_' must be bound to an FA formula, got '{print_formula(value)}'")
        return value
    if isinstance(schema, _Unary):
        return type(schema)(instantiate(schema.arg, bindings))
    if isinstance(schema, _Binary):
        return type(schema)(instantiate(schema.left, bindings), instantiate(schema.right, bindings))
    return schema


def match_schema(schema: Formula, f: Formula,
                 bindings: Optional[Dict[str, Formula]] = None) -> Optional[Dict[str, Formula]]:
    """Structural unification of schema metavariables against subtrees of f."""
    bindings = dict(bindings or {})
    stack = [(schema, f)]
    while stack:
        pattern, target = stack.pop()
        if isinstance(pattern, Meta):
            bound = bindings.get(pattern.name)
            if bound is None:
                if pattern.alternate and not is_alternate_rooted(target):
                    return None
                bindings[pattern.name] = target
            elif bound != target:
                return None
        elif type(pattern) is not type(target):
            return None
        elif isinstance(pattern, _Unary):
            stack.append((pattern.arg, target.arg))
        elif isinstance(pattern, _Binary):
            stack.append((pattern.right, target.right))
            stack.append((pattern.left, target.left))
        elif pattern != target:
            return None
    return bindings


def substitute_atoms(f: Formula, mapping: Dict[Formula, Formula]) -> Formula:
    """Replace atoms by formulas (uniform substitution)."""
    if isinstance(f, (AtomC, AtomA)):
        return mapping.get(f, f)
    if isinstance(f, _Unary):
        return type(f)(substitute_atoms(f.arg, mapping))
    if isinstance(f, _Binary):
        return type(f)(substitute_atoms(f.left, mapping), substitute_atoms(f.right, mapping))
    return f


def alternate_metavariables(f: Formula) -> FrozenSet[str]:
    """Names of the FA-constrained metavariables (written `X_`)."""
    return frozenset(n.name for n in _walk(f) if isinstance(n, Meta) and n.alternate)
