# graph.py
# Existential graphs: values, canonical form, addresses, contexts and regions.
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional, Tuple, Union

from gerg_double_logic.exceptions import AddressError

CLASSICAL = "classical"
ALTERNATE = "alternate"


@dataclass(frozen=True)
class GraphAtom:
    """Classical atom on the sheet."""
    name: str


@dataclass(frozen=True)
class GraphAltAtom:
    """Alternate atom, written `@name`."""
    name: str


@dataclass(frozen=True)
class CutC:
    """Classical cut `( ... )`."""
    items: Tuple["Item", ...] = ()
    kind = CLASSICAL


@dataclass(frozen=True)
class CutA:
    """Alternate cut `[ ... ]`."""
    items: Tuple["Item", ...] = ()
    kind = ALTERNATE


Item = Union[GraphAtom, GraphAltAtom, CutC, CutA]
Graph = Tuple[Item, ...]
LAMBDA: Graph = ()
CUT_TYPES = (CutC, CutA)
CUT_BY_KIND = {CLASSICAL: CutC, ALTERNATE: CutA}


@dataclass(frozen=True)
class Address:
    """A path of cut indices plus an optional half-open slice of the final container.

    Without a slice a non-empty path names one item; the empty path names the sheet.
    """
    path: Tuple[int, ...] = ()
    span: Optional[Tuple[int, int]] = None

    def __str__(self) -> str:
        text = "#" + "".join(f"/{i}" for i in self.path)
        if self.span is not None:
            text += f"/{self.span[0]}:{self.span[1]}"
        return text

    @property
    def is_root(self) -> bool:
        return not self.path and self.span is None

    @property
    def is_item(self) -> bool:
        return bool(self.path) and self.span is None

    def child(self, index: int) -> "Address":
        return Address(self.path + (index,))

    def slice(self, start: int, end: int) -> "Address":
        return Address(self.path, (start, end))


ROOT = Address()


@dataclass(frozen=True)
class RegionInfo:
    depth_total: int
    parity: str
    classical: bool
    depth_classical: int
    depth_alternate: int

    @property
    def even(self) -> bool:
        return self.parity == "even"


@dataclass(frozen=True)
class Frame:
    """One level of a one-hole context; `cut_kind` is None for the sheet."""
    left: Graph
    right: Graph
    cut_kind: Optional[str]


Context = Tuple[Frame, ...]


@dataclass(frozen=True)
class GraphFragmentReport:
    in_alfa_lc: bool
    in_alfa_li: bool
    in_gamma_ld: bool
    in_GA: bool


def print_item(item: Item) -> str:
    if isinstance(item, GraphAtom):
        return item.name
    if isinstance(item, GraphAltAtom):
        return "@" + item.name
    inner = print_graph(item.items)
    if isinstance(item, CutC):
        return f"({inner})"
    return f"[{inner}]"


def print_graph(g: Graph) -> str:
    return " ".join(print_item(item) for item in g)


_RANK = {GraphAtom: 0, GraphAltAtom: 1, CutC: 2, CutA: 3}


@lru_cache(maxsize=None)
def item_key(item: Item) -> tuple:
    """Sort key realizing AtomC < AtomA < CutC < CutA, then name or contents."""
    if isinstance(item, (GraphAtom, GraphAltAtom)):
        return (_RANK[type(item)], item.name)
    return (_RANK[type(item)], tuple(sorted(item_key(child) for child in item.items)))


@lru_cache(maxsize=None)
def _canonical_item(item: Item) -> Item:
    if isinstance(item, CUT_TYPES):
        return type(item)(canonicalize(item.items))
    return item


def canonicalize(g: Graph) -> Graph:
    return tuple(sorted((_canonical_item(item) for item in g), key=item_key))


def canonical_key(g: Graph) -> tuple:
    return tuple(sorted(item_key(item) for item in g))


def canonical_equal(g1: Graph, g2: Graph) -> bool:
    return canonical_key(tuple(g1)) == canonical_key(tuple(g2))


def canonical_text(g: Graph) -> str:
    return print_graph(canonicalize(g))


def as_graph(value: Union[Graph, Item]) -> Graph:
    if isinstance(value, tuple):
        return value
    return (value,)


def contents_at(g: Graph, path: Tuple[int, ...]) -> Graph:
    """Items of the region inside the cut reached by `path` (the sheet for ())."""
    items = g
    for level, index in enumerate(path):
        if not 0 <= index < len(items):
            raise AddressError(f"dangling address: index {index} at level {level}")
        item = items[index]
        if not isinstance(item, CUT_TYPES):
            raise AddressError(f"dangling address: item at level {level} is not a cut")
        items = item.items
    return items


def cut_kinds_on(g: Graph, path: Tuple[int, ...]) -> Tuple[str, ...]:
    kinds = []
    items = g
    for index in path:
        contents_at(items, (index,))
        kinds.append(items[index].kind)
        items = items[index].items
    return tuple(kinds)


def selection(g: Graph, at: Address) -> Tuple[Tuple[int, ...], int, int]:
    """Resolve an address to (container path, start, end)."""
    if at.span is not None:
        container = contents_at(g, at.path)
        start, end = at.span
        if not 0 <= start <= end <= len(container):
            raise AddressError(f"dangling address {at}: slice outside 0..{len(container)}")
        return at.path, start, end
    if not at.path:
        return (), 0, len(g)
    container = contents_at(g, at.path[:-1])
    index = at.path[-1]
    if not 0 <= index < len(container):
        raise AddressError(f"dangling address {at}")
    return at.path[:-1], index, index + 1


def insertion_point(g: Graph, at: Address) -> Tuple[Tuple[int, ...], int]:
    """Where an insertion lands: slice start, inside a cut item (appended), or end of sheet."""
    if at.span is not None:
        path, start, _ = selection(g, at)
        return path, start
    if not at.path:
        return (), len(g)
    path, start, _ = selection(g, at)
    item = contents_at(g, path)[start]
    if not isinstance(item, CUT_TYPES):
        raise AddressError(f"insertion site {at} is an atom, not a cut")
    return at.path, len(item.items)


def subgraph_at(g: Graph, at: Address) -> Union[Item, Graph]:
    path, start, end = selection(g, at)
    items = contents_at(g, path)
    if at.is_item:
        return items[start]
    return items[start:end]


def update_contents(g: Graph, path: Tuple[int, ...], fn: Callable[[Graph], Graph]) -> Graph:
    """Rebuild g with the region at `path` replaced by fn(region)."""
    if not path:
        return tuple(fn(g))
    index = path[0]
    item = g[index]
    return g[:index] + (type(item)(update_contents(item.items, path[1:], fn)),) + g[index + 1:]


def replace_at(g: Graph, at: Address, new: Union[Item, Graph]) -> Graph:
    """Splice `new` over the selection; returns a new value."""
    path, start, end = selection(g, at)
    replacement = as_graph(new)
    return update_contents(g, path, lambda items: items[:start] + replacement + items[end:])


def insert_at(g: Graph, path: Tuple[int, ...], index: int, payload: Graph) -> Graph:
    return update_contents(g, path, lambda items: items[:index] + tuple(payload) + items[index:])


def context_at(g: Graph, at: Address) -> Context:
    path, start, end = selection(g, at)
    frames = []
    items, kind = g, None
    for index in path:
        frames.append(Frame(items[:index], items[index + 1:], kind))
        kind = items[index].kind
        items = items[index].items
    frames.append(Frame(items[:start], items[end:], kind))
    return tuple(frames)


def plug(ctx: Context, h: Union[Item, Graph]) -> Graph:
    current = as_graph(h)
    for frame in reversed(ctx):
        current = frame.left + current + frame.right
        if frame.cut_kind is not None:
            current = (CUT_BY_KIND[frame.cut_kind](current),)
    return current


def region_from_kinds(kinds: Tuple[str, ...]) -> RegionInfo:
    alternate = sum(1 for kind in kinds if kind == ALTERNATE)
    total = len(kinds)
    return RegionInfo(
        depth_total=total,
        parity="even" if total % 2 == 0 else "odd",
        classical=alternate == 0,
        depth_classical=total - alternate,
        depth_alternate=alternate,
    )


def region_of(g: Graph, at: Address) -> RegionInfo:
    """Region holding the selected items (the sheet region for the root)."""
    path, _, _ = selection(g, at)
    return region_from_kinds(cut_kinds_on(g, path))


def interior_region(g: Graph, path: Tuple[int, ...]) -> RegionInfo:
    """Region inside the cut reached by `path`."""
    contents_at(g, path)
    return region_from_kinds(cut_kinds_on(g, path))


def _is_alfa_li(items: Graph) -> bool:
    for item in items:
        if isinstance(item, GraphAltAtom):
            continue
        if not isinstance(item, CutA):
            return False
        for inner in item.items:
            body = inner.items if isinstance(inner, CutC) else (inner,)
            if not _is_alfa_li(body):
                return False
    return True


def iter_items(g: Graph) -> Iterator[Item]:
    for item in g:
        yield item
        if isinstance(item, CUT_TYPES):
            yield from iter_items(item.items)


def is_ga(g: Graph) -> bool:
    return len(g) == 1 and isinstance(g[0], (CutA, GraphAltAtom))


def classify_graph(g: Graph) -> GraphFragmentReport:
    return GraphFragmentReport(
        in_alfa_lc=not any(isinstance(item, (GraphAltAtom, CutA)) for item in iter_items(g)),
        in_alfa_li=_is_alfa_li(g),
        in_gamma_ld=True,
        in_GA=is_ga(g),
    )


def item_count(g: Graph) -> int:
    return sum(1 for _ in iter_items(g))


def depth(g: Graph) -> int:
    return max((1 + depth(item.items) for item in g if isinstance(item, CUT_TYPES)), default=0)


def graph_atoms(g: Graph) -> Tuple[Item, ...]:
    seen = {item for item in iter_items(g) if isinstance(item, (GraphAtom, GraphAltAtom))}
    return tuple(sorted(seen, key=item_key))
