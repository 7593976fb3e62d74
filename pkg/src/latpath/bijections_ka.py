"""Bijections on (k,a)- and (S,a)-paths.

* :func:`psi_expand` / :func:`psi_contract` -- the 1-to-(k+1) map from super
  paths whose first non-horizontal step is up onto super paths with at least
  one up step.
* :func:`phi` / :func:`phi_inverse` -- strict paths with a marked hump versus
  super paths whose first non-horizontal step is up.
* :func:`hump_shrink` / :func:`hump_grow` -- delete or insert one horizontal
  step in the designated hump; shifts the order by ``a``.

Anchors are step-boundary indices: point ``i`` is the position after ``i``
steps. Since every step has positive width, x grows strictly with the index
and "leftmost"/"rightmost" reduce to index comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .paths import (
    DOWN,
    HORIZONTAL,
    DomainError,
    Hump,
    LatticePoint,
    PathWord,
    classify,
    Classification,
    hump_spans,
    humps,
)


def _rev(seq) -> tuple:
    return tuple(reversed(seq))


def _heights(steps) -> List[int]:
    out = [0]
    for s in steps:
        out.append(out[-1] + s)
    return out


def in_super_up(word: PathWord) -> bool:
    """Member of SP^U: a super path whose first non-horizontal step is up."""
    first = word.first_non_horizontal()
    return first is not None and first > 0 and word.end_height == 0


def in_super_with_up(word: PathWord) -> bool:
    return word.end_height == 0 and any(s > 0 for s in word.steps)


# ------------------------------------------------------------------ psi


@dataclass(frozen=True)
class PsiDecomposition:
    """``H^l U M_1 D M_2 D ... M_k D tail`` for a word in SP^U."""

    leading: int
    components: Tuple[Tuple[int, ...], ...]
    tail: Tuple[int, ...]
    k: int

    def assemble(self) -> Tuple[int, ...]:
        out = [HORIZONTAL] * self.leading + [self.k]
        for comp in self.components:
            out.extend(comp)
            out.append(DOWN)
        out.extend(self.tail)
        return tuple(out)

    def member(self, i: int) -> Tuple[int, ...]:
        """The ``i``-th image (1-based); member 1 is the decomposed word."""
        if not 1 <= i <= self.k + 1:
            raise IndexError(i)
        out = [HORIZONTAL] * self.leading
        for comp in self.components[: i - 1]:
            out.append(DOWN)
            out.extend(_rev(comp))
        out.append(self.k)
        for comp in self.components[i - 1 :]:
            out.extend(comp)
            out.append(DOWN)
        out.extend(self.tail)
        return tuple(out)


def _first_passage_split(steps, start: int, level: int, count: int):
    """Split ``steps[start:]`` (beginning at height ``level``) into ``count``
    pieces ending just before the first descent to ``level-1``, ``level-2``, ...
    Returns the pieces and the index after the last of those descents."""
    pieces = []
    pos = start
    height = level
    for _ in range(count):
        begin = pos
        while True:
            if pos >= len(steps):
                raise DomainError("path ends before returning to the axis")
            s = steps[pos]
            if s == DOWN and height == level:
                break
            height += s
            pos += 1
        pieces.append(tuple(steps[begin:pos]))
        pos += 1
        level -= 1
        height = level
    return pieces, pos


def _require_singleton(word: PathWord) -> int:
    if not word.profile.is_singleton:
        raise DomainError("the psi correspondence needs a single up-step rise")
    return word.profile.k


def psi_decompose(word: PathWord) -> PsiDecomposition:
    k = _require_singleton(word)
    if not in_super_up(word):
        raise DomainError(f"{word.text!r} is not a super path whose first non-horizontal step is up")
    steps = word.steps
    lead = 0
    while steps[lead] == HORIZONTAL:
        lead += 1
    comps, pos = _first_passage_split(steps, lead + 1, k, k)
    return PsiDecomposition(lead, tuple(comps), tuple(steps[pos:]), k)


def psi_expand(word: PathWord) -> List[PathWord]:
    dec = psi_decompose(word)
    return [word.with_steps(dec.member(i)) for i in range(1, dec.k + 2)]


def psi_contract_index(word: PathWord) -> Tuple[PathWord, int]:
    """Preimage in SP^U and the position of ``word`` among its images."""
    k = _require_singleton(word)
    if word.end_height != 0:
        raise DomainError(f"{word.text!r} does not end on the axis")
    steps = word.steps
    heights = _heights(steps)
    pivot = next((i for i, s in enumerate(steps) if s > 0 and heights[i + 1] >= 0), None)
    if pivot is None:
        raise DomainError(f"{word.text!r} contains no up step")
    lead = 0
    while steps[lead] == HORIZONTAL:
        lead += 1
    depth = -heights[pivot]
    # prefix is D M̄_1 D M̄_2 ... D M̄_depth; the D's are last departures
    # from levels 0, -1, ..., -(depth-1)
    reversed_comps = []
    cuts = []
    for level in range(0, -depth, -1):
        last = max(i for i in range(lead, pivot + 1) if heights[i] == level)
        cuts.append(last)
    cuts.append(pivot)
    for c in range(depth):
        if steps[cuts[c]] != DOWN:
            raise DomainError(f"unexpected prefix structure in {word.text!r}")
        reversed_comps.append(tuple(steps[cuts[c] + 1 : cuts[c + 1]]))
    rest, pos = _first_passage_split(steps, pivot + 1, k - depth, k - depth)
    comps = tuple(_rev(c) for c in reversed_comps) + tuple(rest)
    dec = PsiDecomposition(lead, comps, tuple(steps[pos:]), k)
    return word.with_steps(dec.assemble()), depth + 1


def psi_contract(word: PathWord) -> PathWord:
    return psi_contract_index(word)[0]


# ------------------------------------------------------------------ phi


@dataclass(frozen=True)
class BijectionTrace:
    """Anchor points and moved segments of one application of phi or its inverse.

    ``anchor_index`` maps anchor names to step-boundary indices, ``anchors``
    to lattice points. ``segments`` lists ``(name, start, end)`` ranges of the
    input word in the order they are concatenated.
    """

    anchors: Dict[str, LatticePoint]
    anchor_index: Dict[str, int]
    segments: Tuple[Tuple[str, int, int], ...]

    def to_json(self) -> dict:
        return {
            "anchors": {name: list(pt) for name, pt in self.anchors.items()},
            "anchor_index": dict(self.anchor_index),
            "segments": [[start, end] for _, start, end in self.segments],
            "segment_names": [name for name, _, _ in self.segments],
        }


def _trace(word: PathWord, idx: Dict[str, int], segments) -> BijectionTrace:
    pts = word.points()
    return BijectionTrace({k: pts[v] for k, v in idx.items()}, dict(idx), tuple(segments))


def phi_anchors(steps, hump_start: int) -> Tuple[int, int, int, int]:
    """Indices ``(p, A, B, C)`` for the hump whose up step is ``steps[hump_start]``."""
    heights = _heights(steps)
    p = hump_start + 1
    a = p - 1
    i = p - 2
    while i >= 0 and steps[i] != DOWN:
        if steps[i] > 0:
            a = i
        i -= 1
    y_a = heights[a]
    b = next((i for i in range(p + 1, len(heights)) if heights[i] == y_a), None)
    # a strict word ends at 0 <= y_A and descends one unit at a time
    assert b is not None, "no return to the level of A"
    c = max(i for i in range(a + 1) if heights[i] == 0)
    return p, a, b, c


def phi(word: PathWord, hump_index: int) -> Tuple[PathWord, BijectionTrace]:
    """Map a strict path with its ``hump_index``-th hump to a word in SP^U."""
    if classify(word) is not Classification.STRICT:
        raise DomainError(f"{word.text!r} is not a strict path")
    spans = hump_spans(word.steps)
    if not 0 <= hump_index < len(spans):
        raise DomainError(f"hump index {hump_index} out of range for {word.text!r} ({len(spans)} humps)")
    steps = word.steps
    p, a, b, c = phi_anchors(steps, spans[hump_index][0])
    n_idx = len(steps)
    out = steps[:c] + steps[a:b] + _rev(steps[c:a]) + _rev(steps[b:])
    trace = _trace(
        word,
        {"O": 0, "C": c, "A": a, "p": p, "B": b, "N": n_idx},
        [("OC", 0, c), ("AB", a, b), ("CA", c, a), ("BN", b, n_idx)],
    )
    return word.with_steps(out), trace


def psi_anchors(steps) -> Tuple[int, int, int]:
    """Indices ``(A, B, C)`` used by the inverse map, the shrink and the grow."""
    heights = _heights(steps)
    n_idx = len(steps)
    below = next((i for i, s in enumerate(steps) if s == DOWN and heights[i + 1] < 0), None)
    if below is None:
        b = n_idx
    else:
        b = below
        while b > 0 and steps[b - 1] == HORIZONTAL:
            b -= 1
        if b == 0 or steps[b - 1] != DOWN or heights[b] != 0:
            raise DomainError("no axis point before the first descent below the axis")
    a = max((i for i in range(b) if heights[i] == 0 and steps[i] > 0), default=None)
    if a is None:
        raise DomainError("no up step leaves the axis before B")
    tail_max = max(heights[b:])
    c = next(i for i in range(b, n_idx + 1) if heights[i] == tail_max)
    return a, b, c


def _block_hump(steps, a: int, b: int) -> Tuple[int, int]:
    """Leftmost hump fully inside ``steps[a:b]`` as (absolute start, #H)."""
    for start, h in hump_spans(steps[a:b]):
        return a + start, h
    raise DomainError("segment between A and B contains no hump")


def phi_inverse(word: PathWord) -> Tuple[PathWord, int, BijectionTrace]:
    """Recover the strict path and hump index that ``phi`` sends to ``word``."""
    if not in_super_up(word):
        raise DomainError(f"{word.text!r} is not a super path whose first non-horizontal step is up")
    steps = word.steps
    a, b, c = psi_anchors(steps)
    start, _ = _block_hump(steps, a, b)
    n_idx = len(steps)
    out = steps[:a] + _rev(steps[b:c]) + steps[a:b] + _rev(steps[c:])
    offset = a + (c - b) + (start - a)
    result = word.with_steps(out)
    index = [s for s, _ in hump_spans(out)].index(offset)
    trace = _trace(
        word,
        {"O": 0, "A": a, "B": b, "C": c, "N": n_idx},
        [("OA", 0, a), ("BC", b, c), ("AB", a, b), ("CN", c, n_idx)],
    )
    return result, index, trace


def designated_hump(word: PathWord) -> Hump:
    """The leftmost hump between the anchors A and B of ``word``."""
    steps = word.steps
    a, b, _ = psi_anchors(steps)
    start, h = _block_hump(steps, a, b)
    return Hump(start, h, word.points()[start + 1])


def _require_finite(word: PathWord) -> None:
    if word.profile.horizontal_width is None:
        raise DomainError("horizontal steps are disallowed (a = inf)")


def hump_shrink(word: PathWord) -> PathWord:
    """Drop the first horizontal step of the designated hump."""
    _require_finite(word)
    if not in_super_up(word):
        raise DomainError(f"{word.text!r} is not in SP^U")
    hump = designated_hump(word)
    if hump.is_peak:
        raise DomainError(f"designated hump of {word.text!r} is a peak")
    steps = word.steps
    cut = hump.start_index + 1
    return word.with_steps(steps[:cut] + steps[cut + 1 :])


def hump_grow(word: PathWord) -> PathWord:
    """Insert a horizontal step right after the designated hump's up step."""
    _require_finite(word)
    if not in_super_up(word):
        raise DomainError(f"{word.text!r} is not in SP^U")
    hump = designated_hump(word)
    steps = word.steps
    cut = hump.start_index + 1
    return word.with_steps(steps[:cut] + (HORIZONTAL,) + steps[cut:])


def hump_of(word: PathWord, index: int) -> Hump:
    return humps(word)[index]
