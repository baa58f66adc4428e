# render.py
# Plain-text drawing of graphs: classical cuts as +-+ boxes, alternate cuts as #=# boxes.
from typing import List

from gerg_double_logic.graph import CutA, CutC, Graph, GraphAltAtom, GraphAtom, Item

_BORDERS = {CutC: ("+", "-", "|"), CutA: ("#", "=", "#")}


def _pad(block: List[str], width: int, height: int) -> List[str]:
    return [line.ljust(width) for line in block] + [" " * width] * (height - len(block))


def _side_by_side(blocks: List[List[str]]) -> List[str]:
    if not blocks:
        return []
    height = max(len(b) for b in blocks)
    widths = [max((len(line) for line in b), default=0) for b in blocks]
    padded = [_pad(b, w, height) for b, w in zip(blocks, widths)]
    return [" ".join(row).rstrip() for row in zip(*padded)]


def _render_item(item: Item) -> List[str]:
    if isinstance(item, GraphAtom):
        return [item.name]
    if isinstance(item, GraphAltAtom):
        return ["@" + item.name]
    corner, edge, side = _BORDERS[type(item)]
    inner = _side_by_side([_render_item(child) for child in item.items])
    width = max((len(line) for line in inner), default=0)
    rule = corner + edge * (width + 2) + corner
    body = [f"{side} {line.ljust(width)} {side}" for line in inner] or [f"{side}{' ' * (width + 2)}{side}"]
    return [rule, *body, rule]


def render_graph(g: Graph) -> str:
    """Boxes for cuts, laid out left to right; λ for the empty sheet."""
    if not g:
        return "λ"
    return "\n".join(_side_by_side([_render_item(item) for item in g]))
