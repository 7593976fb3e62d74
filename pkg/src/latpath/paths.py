"""Path values, step profiles and hump/peak extraction.

Two kinds of words live here:

* :class:`PathWord` -- a (k,a)- or (S,a)-path, i.e. a sequence of up steps
  ``(1, r)``, down steps ``(1, -1)`` and horizontal steps ``(a, 0)``.
  Steps are stored as their vertical delta: ``r > 0`` for an up step of
  rise ``r``, ``-1`` for a down step and ``0`` for a horizontal step.
* :class:`NMWord` -- a word over ``U = (0, 1)`` and ``D = (1, 0)`` running
  from ``(0, 0)`` to ``(n, m)``.

Everything is immutable and all decisions use exact integers.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple, Union

UP_CHAR = "U"
DOWN = -1
HORIZONTAL = 0

INF_TOKEN = "inf"


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class LatticePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class PathProfile:
    """Step alphabet of a path family.

    ``horizontal_width=None`` means horizontal steps are disallowed
    (the ``a = inf`` case).
    """

    rises: frozenset
    horizontal_width: Optional[int] = None

    def __post_init__(self) -> None:
        rises = frozenset(int(r) for r in self.rises)
        if not rises:
            raise ValueError("rises must be nonempty")
        if min(rises) < 1:
            raise ValueError(f"rises must be positive, got {sorted(rises)}")
        if self.horizontal_width is not None and self.horizontal_width < 1:
            raise ValueError("horizontal_width must be >= 1 or None")
        object.__setattr__(self, "rises", rises)

    @classmethod
    def ka(cls, k: int, a: Union[int, str, None]) -> "PathProfile":
        """Profile of (k,a)-paths; ``a`` may be ``"inf"`` or ``None``."""
        return cls(frozenset([k]), parse_width(a))

    @property
    def is_singleton(self) -> bool:
        return len(self.rises) == 1

    @property
    def k(self) -> int:
        if not self.is_singleton:
            raise DomainError(f"profile has several rises {sorted(self.rises)}")
        return next(iter(self.rises))

    @property
    def max_rise(self) -> int:
        return max(self.rises)

    @property
    def a_token(self) -> str:
        return INF_TOKEN if self.horizontal_width is None else str(self.horizontal_width)

    def step_width(self, step: int) -> int:
        if step == HORIZONTAL:
            if self.horizontal_width is None:
                raise DomainError("horizontal steps are disallowed in this profile")
            return self.horizontal_width
        return 1

    def alphabet(self) -> Tuple[int, ...]:
        """Steps in collation order: up steps by rise, then D, then H."""
        steps = tuple(sorted(self.rises)) + (DOWN,)
        if self.horizontal_width is not None:
            steps += (HORIZONTAL,)
        return steps

    def describe(self) -> str:
        if self.is_singleton:
            return f"k={self.k}, a={self.a_token}"
        return f"S={{{','.join(map(str, sorted(self.rises)))}}}, a={self.a_token}"


def parse_width(a: Union[int, str, None]) -> Optional[int]:
    if a is None:
        return None
    if isinstance(a, str):
        if a.strip().lower() in (INF_TOKEN, "disallowed"):
            return None
        a = int(a)
    if a < 1:
        raise ValueError(f"horizontal width must be >= 1, got {a}")
    return a


def collation_key(step: int) -> Tuple[int, int]:
    if step > 0:
        return (0, step)
    return (1, 0) if step == DOWN else (2, 0)


class Classification(enum.Enum):
    STRICT = "Strict"
    SUPER_ONLY = "SuperOnly"
    INVALID = "Invalid"


class NMClassification(enum.Enum):
    DYCK = "Dyck"
    FREE_ONLY = "FreeOnly"


_STEP_RE = re.compile(r"U(?:\((\d+)\))?|D|H")


@dataclass(frozen=True)
class PathWord:
    steps: Tuple[int, ...]
    profile: PathProfile

    def __post_init__(self) -> None:
        steps = tuple(self.steps)
        for s in steps:
            if s > 0:
                if s not in self.profile.rises:
                    raise ValueError(f"rise {s} not allowed by profile ({self.profile.describe()})")
            elif s == HORIZONTAL:
                if self.profile.horizontal_width is None:
                    raise ValueError("horizontal step in a profile that disallows it")
            elif s != DOWN:
                raise ValueError(f"invalid step value {s}")
        object.__setattr__(self, "steps", steps)

    @classmethod
    def parse(cls, text: str, profile: PathProfile) -> "PathWord":
        text = text.strip()
        steps = []
        pos = 0
        while pos < len(text):
            match = _STEP_RE.match(text, pos)
            if match is None:
                raise ValueError(f"cannot parse step at position {pos} of {text!r}")
            token = match.group(0)
            if token == "D":
                steps.append(DOWN)
            elif token == "H":
                steps.append(HORIZONTAL)
            elif match.group(1) is not None:
                steps.append(int(match.group(1)))
            else:
                if not profile.is_singleton:
                    raise ValueError("bare 'U' is ambiguous for a profile with several rises")
                steps.append(profile.k)
            pos = match.end()
        return cls(tuple(steps), profile)

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def text(self) -> str:
        bare = self.profile.is_singleton
        out = []
        for s in self.steps:
            if s > 0:
                out.append(UP_CHAR if bare else f"U({s})")
            else:
                out.append("D" if s == DOWN else "H")
        return "".join(out)

    @property
    def up_count(self) -> int:
        return sum(1 for s in self.steps if s > 0)

    @property
    def down_count(self) -> int:
        return self.steps.count(DOWN)

    @property
    def horizontal_count(self) -> int:
        return self.steps.count(HORIZONTAL)

    @property
    def order(self) -> int:
        a = self.profile.horizontal_width or 0
        return self.up_count + self.down_count + a * self.horizontal_count

    @property
    def end_height(self) -> int:
        return sum(self.steps)

    def heights(self) -> Tuple[int, ...]:
        """Height at every step boundary (``len(steps) + 1`` values)."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + s)
        return tuple(out)

    def points(self) -> Tuple[LatticePoint, ...]:
        x, y = 0, 0
        pts = [LatticePoint(0, 0)]
        for s in self.steps:
            x += self.profile.step_width(s)
            y += s
            pts.append(LatticePoint(x, y))
        return tuple(pts)

    def with_steps(self, steps: Iterable[int]) -> "PathWord":
        return PathWord(tuple(steps), self.profile)

    def multiset(self) -> Tuple[Tuple[int, int], ...]:
        counts: dict = {}
        for s in self.steps:
            counts[s] = counts.get(s, 0) + 1
        return tuple(sorted(counts.items()))

    def first_non_horizontal(self) -> Optional[int]:
        for s in self.steps:
            if s != HORIZONTAL:
                return s
        return None


@dataclass(frozen=True)
class Hump:
    start_index: int
    horizontal_count: int
    hump_point: LatticePoint

    @property
    def is_peak(self) -> bool:
        return self.horizontal_count == 0

    @property
    def end_index(self) -> int:
        """Index of the closing down step."""
        return self.start_index + self.horizontal_count + 1


def classify(word: PathWord) -> Classification:
    height = 0
    dipped = False
    for s in word.steps:
        height += s
        if height < 0:
            dipped = True
    if height != 0:
        return Classification.INVALID
    return Classification.SUPER_ONLY if dipped else Classification.STRICT


def is_strict(word: PathWord) -> bool:
    return classify(word) is Classification.STRICT


def is_super(word: PathWord) -> bool:
    return classify(word) is not Classification.INVALID


def _scan_humps(steps: Sequence[int]) -> list:
    """(start_index, horizontal_count) for every Up H* D run."""
    found = []
    i, size = 0, len(steps)
    while i < size:
        if steps[i] > 0:
            j = i + 1
            while j < size and steps[j] == HORIZONTAL:
                j += 1
            if j < size and steps[j] == DOWN:
                found.append((i, j - i - 1))
            i = j
        else:
            i += 1
    return found


def hump_spans(steps: Sequence[int]) -> list:
    return _scan_humps(steps)


def humps(word: PathWord) -> list:
    if classify(word) is Classification.INVALID:
        raise DomainError(f"humps undefined for a word not ending on the axis: {word.text!r}")
    pts = word.points()
    return [Hump(i, h, pts[i + 1]) for i, h in _scan_humps(word.steps)]


def peaks(word: PathWord) -> list:
    return [h for h in humps(word) if h.is_peak]


def count_humps(steps: Sequence[int]) -> int:
    return len(_scan_humps(steps))


def count_peaks(steps: Sequence[int]) -> int:
    return sum(1 for i in range(len(steps) - 1) if steps[i] > 0 and steps[i + 1] == DOWN)


def reverse_word(word: PathWord) -> PathWord:
    return word.with_steps(reversed(word.steps))


# ---------------------------------------------------------------- NM words


@dataclass(frozen=True)
class NMWord:
    steps: str = field(default="")

    def __post_init__(self) -> None:
        if not isinstance(self.steps, str):
            object.__setattr__(self, "steps", "".join(self.steps))
        bad = set(self.steps) - {"U", "D"}
        if bad:
            raise ValueError(f"NM words use only 'U' and 'D', got {sorted(bad)}")

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def text(self) -> str:
        return self.steps

    @property
    def n(self) -> int:
        return self.steps.count("D")

    @property
    def m(self) -> int:
        return self.steps.count("U")

    def points(self) -> Tuple[LatticePoint, ...]:
        x = y = 0
        pts = [LatticePoint(0, 0)]
        for c in self.steps:
            if c == "D":
                x += 1
            else:
                y += 1
            pts.append(LatticePoint(x, y))
        return tuple(pts)

    def excesses(self, n: Optional[int] = None, m: Optional[int] = None) -> Tuple[int, ...]:
        """``m*x - n*y`` at each point; positive means strictly below the diagonal."""
        n = self.n if n is None else n
        m = self.m if m is None else m
        return tuple(m * p.x - n * p.y for p in self.points())


def nm_classify(word: NMWord) -> NMClassification:
    if all(e <= 0 for e in word.excesses()):
        return NMClassification.DYCK
    return NMClassification.FREE_ONLY


def is_dyck(word: NMWord) -> bool:
    return nm_classify(word) is NMClassification.DYCK


def nm_peaks(word: NMWord) -> list:
    """Peak points of every ``UD`` adjacency, left to right."""
    pts = word.points()
    s = word.steps
    return [pts[i + 1] for i in range(len(s) - 1) if s[i] == "U" and s[i + 1] == "D"]


def nm_peak_count(steps: str) -> int:
    return steps.count("UD")
