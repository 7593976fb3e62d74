"""Exhaustive generators and exact counters for every path family.

Generation is a pruned depth-first search that emits words in collation
order (up steps by rise, then ``D``, then ``H``; ``U`` before ``D`` for NM
words). Counting runs a forward dynamic program over (width, height) and
never materialises words, so it scales far past what generation can reach.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .paths import DOWN, HORIZONTAL, NMWord, PathProfile, PathWord, count_humps, count_peaks


class Family(enum.Enum):
    KA_STRICT = "KaStrict"
    KA_SUPER = "KaSuper"
    KA_SUPER_POSITIVE_UP = "KaSuperPositiveUp"
    KA_SUPER_WITH_UP = "KaSuperWithUp"
    NM_DYCK = "NmDyck"
    NM_FREE = "NmFree"
    NM_FREE_UD = "NmFreeUD"

    @property
    def is_nm(self) -> bool:
        return self.name.startswith("NM_")


@dataclass(frozen=True)
class FamilySpec:
    """A path family plus its size parameters.

    For the (k,a) families ``n`` is the order and ``profile`` is required.
    For the NM families ``n`` counts ``D`` steps and ``m`` counts ``U`` steps.
    ``j``, when set, keeps only words with exactly ``j`` peaks.
    """

    family: Family
    n: int
    profile: Optional[PathProfile] = None
    m: int = 0
    j: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 0 or self.m < 0:
            raise ValueError(f"parameters must be nonnegative, got n={self.n}, m={self.m}")
        if self.j is not None and self.j < 0:
            raise ValueError(f"peak filter must be nonnegative, got j={self.j}")
        if not self.family.is_nm and self.profile is None:
            raise ValueError(f"{self.family.value} needs a profile")

    @classmethod
    def ka(cls, family: Union[Family, str], k: int, a, n: int, j: Optional[int] = None) -> "FamilySpec":
        return cls(Family(family), n, PathProfile.ka(k, a), j=j)

    @classmethod
    def nm(cls, family: Union[Family, str], n: int, m: int, j: Optional[int] = None) -> "FamilySpec":
        return cls(Family(family), n, m=m, j=j)


# (first non-horizontal step seen?, first was up?, any up?) are folded into
# a small "phase" code so the DFS and the DP share membership rules.
_NONE, _FIRST_UP, _FIRST_DOWN, _FIRST_DOWN_HAS_UP = range(4)


def _next_phase(phase: int, step: int) -> int:
    if step == HORIZONTAL:
        return phase
    if phase == _NONE:
        return _FIRST_UP if step > 0 else _FIRST_DOWN
    if phase == _FIRST_DOWN and step > 0:
        return _FIRST_DOWN_HAS_UP
    return phase


def _phase_allowed(family: Family, phase: int) -> bool:
    # prefix-closed restriction used for pruning
    if family is Family.KA_SUPER_POSITIVE_UP:
        return phase in (_NONE, _FIRST_UP)
    return True


def _phase_accepts(family: Family, phase: int) -> bool:
    if family is Family.KA_SUPER_POSITIVE_UP:
        return phase == _FIRST_UP
    if family is Family.KA_SUPER_WITH_UP:
        return phase in (_FIRST_UP, _FIRST_DOWN_HAS_UP)
    return True


def generate(spec: FamilySpec) -> Iterator:
    """Yield every member of ``spec`` exactly once, in collation order."""
    if spec.family.is_nm:
        return _generate_nm(spec)
    return _generate_ka(spec)


def _generate_ka(spec: FamilySpec) -> Iterator[PathWord]:
    profile = spec.profile
    family = spec.family
    n, j = spec.n, spec.j
    strict = family is Family.KA_STRICT
    alphabet = profile.alphabet()
    widths = {s: profile.step_width(s) for s in alphabet}
    max_rise = profile.max_rise
    buf: list = []

    def dfs(width: int, height: int, phase: int, prev: int, pk: int) -> Iterator[PathWord]:
        if width == n:
            if height == 0 and _phase_accepts(family, phase) and (j is None or pk == j):
                yield PathWord(tuple(buf), profile)
            return
        remaining = n - width
        for step in alphabet:
            w = widths[step]
            if w > remaining:
                continue
            h = height + step
            left = remaining - w
            if h > left or -h > max_rise * left:
                continue
            if strict and h < 0:
                continue
            ph = _next_phase(phase, step)
            if not _phase_allowed(family, ph):
                continue
            npk = pk + (1 if step == DOWN and prev > 0 else 0)
            if j is not None and npk > j:
                continue
            buf.append(step)
            yield from dfs(width + w, h, ph, step, npk)
            buf.pop()

    return dfs(0, 0, _NONE, HORIZONTAL, 0)


def _generate_nm(spec: FamilySpec) -> Iterator[NMWord]:
    n, m, j = spec.n, spec.m, spec.j
    family = spec.family
    dyck = family is Family.NM_DYCK
    need_ud = family is Family.NM_FREE_UD
    buf: list = []

    def dfs(x: int, y: int, pk: int) -> Iterator[NMWord]:
        if x == n and y == m:
            if need_ud and (not buf or buf[0] != "U" or buf[-1] != "D"):
                return
            if j is None or pk == j:
                yield NMWord("".join(buf))
            return
        if y < m and not (need_ud and x == n):
            # the last step of a UD word must be D
            buf.append("U")
            yield from dfs(x, y + 1, pk)
            buf.pop()
        if x < n and not (need_ud and not buf):
            nx = x + 1
            if not dyck or m * nx - n * y <= 0:
                npk = pk + (1 if buf and buf[-1] == "U" else 0)
                if j is None or npk <= j:
                    buf.append("D")
                    yield from dfs(nx, y, npk)
                    buf.pop()

    return dfs(0, 0, 0)


def count_family(spec: FamilySpec) -> int:
    """Exact ``len(list(generate(spec)))`` without generating."""
    if spec.family.is_nm:
        return _count_nm(spec)
    return _count_ka(spec)


def _count_ka(spec: FamilySpec) -> int:
    profile = spec.profile
    family = spec.family
    n, j = spec.n, spec.j
    strict = family is Family.KA_STRICT
    alphabet = profile.alphabet()
    widths = {s: profile.step_width(s) for s in alphabet}
    max_rise = profile.max_rise
    track_peaks = j is not None

    # table[w] maps (height, phase, last step was up, peaks) -> count
    table = [defaultdict(int) for _ in range(n + 1)]
    table[0][(0, _NONE, False, 0)] = 1
    for width in range(n + 1):
        remaining = n - width
        for (height, phase, prev_up, pk), count in table[width].items():
            for step in alphabet:
                w = widths[step]
                if w > remaining:
                    continue
                h = height + step
                left = remaining - w
                if h > left or -h > max_rise * left or (strict and h < 0):
                    continue
                ph = _next_phase(phase, step)
                if not _phase_allowed(family, ph):
                    continue
                npk = pk
                if track_peaks:
                    if step == DOWN and prev_up:
                        npk += 1
                    if npk > j:
                        continue
                table[width + w][(h, ph, track_peaks and step > 0, npk)] += count
    return sum(
        c
        for (h, ph, _, pk), c in table[n].items()
        if h == 0 and _phase_accepts(family, ph) and (j is None or pk == j)
    )


def _count_nm(spec: FamilySpec) -> int:
    n, m, j = spec.n, spec.m, spec.j
    family = spec.family
    dyck = family is Family.NM_DYCK
    need_ud = family is Family.NM_FREE_UD
    if need_ud and n + m == 0:
        return 0
    track_peaks = j is not None

    # layer by word length; state (x, last step: 0 none / 1 U / 2 D, peaks)
    layer = {(0, 0, 0): 1}
    for length in range(n + m):
        nxt: dict = defaultdict(int)
        for (x, last, pk), count in layer.items():
            y = length - x
            if y < m and not (need_ud and x == n):
                nxt[(x, 1, pk)] += count
            if x < n and not (need_ud and last == 0):
                nx = x + 1
                if dyck and m * nx - n * y > 0:
                    continue
                npk = pk + 1 if (track_peaks and last == 1) else pk
                if track_peaks and npk > j:
                    continue
                nxt[(nx, 2, npk)] += count
        layer = nxt
    total = 0
    for (x, last, pk), count in layer.items():
        if x != n:
            continue
        if need_ud and last != 2:
            continue
        if j is not None and pk != j:
            continue
        total += count
    return total


def total_humps(profile: PathProfile, n: int) -> int:
    """Sum of hump counts over all strict paths of order ``n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(count_humps(w.steps) for w in generate(FamilySpec(Family.KA_STRICT, n, profile)))


def total_peaks(profile: PathProfile, n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(count_peaks(w.steps) for w in generate(FamilySpec(Family.KA_STRICT, n, profile)))


def super_count(profile: PathProfile, n: int) -> int:
    """``|SP_n|``; zero for negative orders."""
    if n < 0:
        return 0
    return count_family(FamilySpec(Family.KA_SUPER, n, profile))
