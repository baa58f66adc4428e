# derived_rules.py
# One level of macro expansion for derived rules; nested derived steps are expanded
# by the engine against the intermediate graph.
from typing import Callable, Dict, List, Tuple

from gerg_double_logic.exceptions import RuleApplicationError
from gerg_double_logic.graph import (ALTERNATE, Address, CutA, CutC, Graph, Item, RegionInfo,
                                     contents_at, cut_kinds_on, insertion_point,
                                     region_from_kinds, selection)
from gerg_double_logic.rules import RuleId, Step

Path = Tuple[int, ...]


def _shape(ok: bool, rule: RuleId, message: str) -> None:
    if not ok:
        raise RuleApplicationError(f"{rule.value}: {message}", kind="shape")


def _item(g: Graph, s: Step) -> Tuple[Path, Item]:
    path, start, end = selection(g, s.at)
    _shape(end == start + 1, s.rule, f"{s.at} must select exactly one item")
    return path + (start,), contents_at(g, path)[start]


def _region(g: Graph, path: Path) -> RegionInfo:
    return region_from_kinds(cut_kinds_on(g, path))


def _loop_owner(g: Graph, container: Path, rule: RuleId) -> RegionInfo:
    """Region of the alternate cut whose interior is `container`."""
    kinds = cut_kinds_on(g, container)
    _shape(bool(kinds) and kinds[-1] == ALTERNATE, rule, "site is not directly inside an alternate cut")
    return region_from_kinds(kinds[:-1])


def _nested(item: Item, *kinds: type) -> bool:
    """item is kinds[0] holding exactly one kinds[1] holding exactly one ... ."""
    for position, kind in enumerate(kinds):
        if not isinstance(item, kind):
            return False
        if position + 1 < len(kinds):
            if len(item.items) != 1:
                return False
            item = item.items[0]
    return True


def _at(path: Path) -> Address:
    return Address(path)


def _span(path: Path, start: int, end: int) -> Address:
    return Address(path, (start, end))


def _dccl(s: Step, g: Graph) -> List[Step]:
    path, k = insertion_point(g, s.at)
    return [Step(RuleId.DCC, _span(path, k, k))]


def _dcml(s: Step, g: Graph) -> List[Step]:
    path, k = insertion_point(g, s.at)
    return [Step(RuleId.DCMGEV, _span(path, k, k), lemma="lambda")]


def _rl(s: Step, g: Graph) -> List[Step]:
    path, k = insertion_point(g, s.at)
    return [Step(RuleId.R, _span(path, k, k), direction="bwd")]


def _dcm(s: Step, g: Graph) -> List[Step]:
    path, start, end = selection(g, s.at)
    if _region(g, path).even:
        q, item = _item(g, s)
        _shape(_nested(item, CutA, CutC), s.rule, "expects [(X)] at an even region")
        return [Step(RuleId.CC, _at(q)), Step(RuleId.DCC, _at(q), direction="bwd")]
    return [Step(RuleId.DCC, _span(path, start, end)), Step(RuleId.CC, _at(path + (start,)))]


def _cce(s: Step, g: Graph) -> List[Step]:
    q, item = _item(g, s)
    _shape(isinstance(item, CutC), s.rule, "expects a loop")
    _loop_owner(g, q[:-1], s.rule)
    return [Step(RuleId.CC, _at(q))]


def _dcmf1(s: Step, g: Graph) -> List[Step]:
    path, start, end = selection(g, s.at)
    even = _region(g, path).even
    if s.direction == "fwd":
        if even:
            return [Step(RuleId.DCMF, _span(path, start, end))]
        return [Step(RuleId.DCC, _span(path, start, end)), Step(RuleId.CC, _at(path + (start,)))]
    q, item = _item(g, s)
    _shape(_nested(item, CutA, CutC), s.rule, "expects [(X)]")
    if even:
        return [Step(RuleId.CC, _at(q)), Step(RuleId.DCC, _at(q), direction="bwd")]
    return [Step(RuleId.DCMF, _at(q))]


def _tcm(s: Step, g: Graph) -> List[Step]:
    q, item = _item(g, s)
    if s.direction == "fwd":
        _shape(isinstance(item, CutA), s.rule, "expects [X]")
    else:
        _shape(_nested(item, CutA, CutC, CutA), s.rule, "expects [([X])]")
    return [Step(RuleId.DCMF1, _at(q), direction=s.direction)]


def _dcaf(s: Step, g: Graph) -> List[Step]:
    path, start, end = selection(g, s.at)
    if _region(g, path).even:
        return [Step(RuleId.DCMF, _span(path, start, end)), Step(RuleId.CC, _at(path + (start, 0)))]
    q, item = _item(g, s)
    _shape(_nested(item, CutA, CutA), s.rule, "expects [[X]] at an odd region")
    if item.items[0].items:
        last = Step(RuleId.DCMF, _at(q))
    else:
        last = Step(RuleId.DCMGEV, _at(q), direction="bwd", lemma="lambda")
    return [Step(RuleId.CC, _at(q + (0,))), last]


def _tca(s: Step, g: Graph) -> List[Step]:
    q, item = _item(g, s)
    if _region(g, q[:-1]).even:
        _shape(isinstance(item, CutA), s.rule, "expects [X] at an even region")
    else:
        _shape(_nested(item, CutA, CutA, CutA), s.rule, "expects [[[X]]] at an odd region")
    return [Step(RuleId.DCAF, _at(q))]


def _tcaf(s: Step, g: Graph) -> List[Step]:
    q, item = _item(g, s)
    if _region(g, q[:-1]).even:
        _shape(_nested(item, CutA, CutA, CutA), s.rule, "expects [[[X]]] at an even region")
        return [Step(RuleId.CC, _at(q + (0, 0))), Step(RuleId.DCMF, _at(q + (0,)))]
    _shape(isinstance(item, CutA) and len(item.items) == 1, s.rule, "expects [X] with one GA item")
    return [Step(RuleId.DCMF, _at(q + (0,))), Step(RuleId.CC, _at(q + (0, 0)))]


def _tcaf1(s: Step, g: Graph) -> List[Step]:
    q, _ = _item(g, s)
    even = _region(g, q[:-1]).even
    if s.direction == "fwd":
        rule = RuleId.TCA if even else RuleId.TCAF
    else:
        rule = RuleId.TCAF if even else RuleId.TCA
    return [Step(rule, _at(q))]


def _cca(s: Step, g: Graph) -> List[Step]:
    q, item = _item(g, s)
    _shape(_nested(item, CutA, CutA), s.rule, "expects [[X]]")
    return [Step(RuleId.TCAF1, _at(q), direction=s.direction)]


def _id(s: Step, g: Graph) -> List[Step]:
    rule = RuleId.I if s.direction == "fwd" else RuleId.D
    return [Step(rule, s.at, src=s.src)]


def _dci(s: Step, g: Graph) -> List[Step]:
    path, start, end = selection(g, s.at)
    if _region(g, path).even:
        return [Step(RuleId.R, _span(path, start, end), direction="bwd"),
                Step(RuleId.CCR, _at(path + (start, 0)))]
    q, item = _item(g, s)
    _shape(_nested(item, CutA, CutA), s.rule, "expects [[X]] at an odd region")
    return [Step(RuleId.CCR, _at(q + (0,))), Step(RuleId.R, _at(q))]


def _tci(s: Step, g: Graph) -> List[Step]:
    q, item = _item(g, s)
    even = _region(g, q[:-1]).even
    if s.direction == "fwd":
        _shape(isinstance(item, CutA), s.rule, "expects [X]")
        if even:
            return [Step(RuleId.DCI, _at(q))]
        return [Step(RuleId.R, _span(q, 0, len(item.items)), direction="bwd"),
                Step(RuleId.CCR, _at(q + (0, 0)))]
    _shape(_nested(item, CutA, CutA, CutA), s.rule, "expects [[[X]]]")
    if even:
        return [Step(RuleId.CCR, _at(q + (0, 0))), Step(RuleId.R, _at(q + (0,)))]
    return [Step(RuleId.DCI, _at(q))]


def _ifel(s: Step, g: Graph) -> List[Step]:
    _shape(s.src is not None, s.rule, "needs a src address")
    loop, k = insertion_point(g, s.at)
    _shape(bool(loop), s.rule, "destination must be a loop")
    owner = loop[:-1]
    n = len(contents_at(g, owner))
    return [Step(RuleId.IF, _span(owner, n, n), src=s.src),
            Step(RuleId.IeL, _span(loop, k, k), src=_at(owner + (n,))),
            Step(RuleId.DF, _at(owner + (n,)), src=s.src)]


def _dfel(s: Step, g: Graph) -> List[Step]:
    _shape(s.src is not None, s.rule, "needs a src address")
    loop, start, end = selection(g, s.at)
    _shape(bool(loop), s.rule, "deleted items must lie in a loop")
    owner = loop[:-1]
    n = len(contents_at(g, owner))
    return [Step(RuleId.IF, _span(owner, n, n), src=s.src),
            Step(RuleId.DeL, _span(loop, start, end), src=_at(owner + (n,))),
            Step(RuleId.DF, _at(owner + (n,)), src=s.src)]


def _ran(s: Step, g: Graph) -> List[Step]:
    if s.direction == "fwd":
        q, item = _item(g, s)
        _shape(_nested(item, CutC, CutA) and not item.items[0].items, s.rule, "expects the loop ([])")
        if _loop_owner(g, q[:-1], s.rule).even:
            return [Step(RuleId.CCR, _at(q)), Step(RuleId.DCI, _at(q))]
        return [Step(RuleId.BL, _at(q))]
    owner, k = insertion_point(g, s.at)
    if _loop_owner(g, owner, s.rule).even:
        return [Step(RuleId.EL, _span(owner, k, k), payload=(CutA(),))]
    return [Step(RuleId.R, _span(owner, k, k), direction="bwd"),
            Step(RuleId.CCR, _at(owner + (k, 0))),
            Step(RuleId.CCR, _at(owner + (k,)))]


def _rad(s: Step, g: Graph) -> List[Step]:
    owner, start, end = selection(g, s.at)
    if _loop_owner(g, owner, s.rule).even:
        q, item = _item(g, s)
        _shape(_nested(item, CutC, CutA), s.rule, "expects ([...]) at an even alternate cut")
        return [Step(RuleId.CCR, _at(q)), Step(RuleId.CCR, _at(q + (0,))), Step(RuleId.R, _at(q))]
    return [Step(RuleId.R, _span(owner, start, end), direction="bwd"),
            Step(RuleId.CCR, _at(owner + (start, 0))),
            Step(RuleId.CCR, _at(owner + (start,)))]


EXPANSIONS: Dict[RuleId, Callable[[Step, Graph], List[Step]]] = {
    RuleId.DCCL: _dccl,
    RuleId.DCM: _dcm,
    RuleId.DCML: _dcml,
    RuleId.CCE: _cce,
    RuleId.DCMF1: _dcmf1,
    RuleId.TCM: _tcm,
    RuleId.DCAF: _dcaf,
    RuleId.TCA: _tca,
    RuleId.TCAF: _tcaf,
    RuleId.TCAF1: _tcaf1,
    RuleId.CCA: _cca,
    RuleId.ID: _id,
    RuleId.RL: _rl,
    RuleId.DCI: _dci,
    RuleId.TCI: _tci,
    RuleId.IFeL: _ifel,
    RuleId.DFeL: _dfel,
    RuleId.RaN: _ran,
    RuleId.RaD: _rad,
}


def expand_once(s: Step, g: Graph) -> List[Step]:
    """Steps realizing s on g; entries may themselves be derived."""
    return EXPANSIONS[s.rule](s, g)
