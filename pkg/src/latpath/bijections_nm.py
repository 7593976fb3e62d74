"""Cyclic classes, Dyck representatives and peak bijections for (n,m)-words.

"Furthest below the diagonal" is the lattice point maximising the integer
excess ``m*x - n*y``. For coprime ``n, m`` two points never share an excess
(apart from the two endpoints, both at 0), which is what makes the
representative and the inverse peak map well defined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

from .paths import DomainError, NMWord, PathProfile, PathWord, is_dyck, is_strict


@dataclass(frozen=True)
class CyclicClass:
    """All distinct rotations of ``word``; ``members[i-1]`` starts after step ``i``."""

    word: NMWord
    members: Tuple[NMWord, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: NMWord) -> bool:
        return item in self.members


@dataclass(frozen=True)
class BlockDecomposition:
    """``U^{a_1} D^{b_1} ... U^{a_j} D^{b_j}`` as ``((a_1, b_1), ...)``."""

    blocks: Tuple[Tuple[int, int], ...]

    @classmethod
    def of(cls, word: NMWord) -> "BlockDecomposition":
        s = word.steps
        if not s or s[0] != "U" or s[-1] != "D":
            raise DomainError(f"{s!r} does not start with U and end with D")
        blocks = []
        i = 0
        while i < len(s):
            j = i
            while s[j] == "U":
                j += 1
            k = j
            while k < len(s) and s[k] == "D":
                k += 1
            blocks.append((j - i, k - j))
            i = k
        return cls(tuple(blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def words(self) -> List[str]:
        return ["U" * a + "D" * b for a, b in self.blocks]


def _rotate(steps: str, i: int) -> str:
    return steps[i:] + steps[:i]


def _require_coprime(word: NMWord) -> None:
    n, m = word.n, word.m
    if n == 0 or m == 0:
        raise DomainError(f"need n, m >= 1, got ({n}, {m})")
    if math.gcd(n, m) != 1:
        raise DomainError(f"n={n} and m={m} are not coprime")


def cyclic_class(word: NMWord) -> CyclicClass:
    if not word.steps:
        raise DomainError("the empty word has no cyclic class")
    seen = {}
    size = len(word)
    for i in range(1, size + 1):
        rot = _rotate(word.steps, i % size)
        seen.setdefault(rot, None)
    return CyclicClass(word, tuple(NMWord(s) for s in seen))


def _deepest_point(word: NMWord) -> Tuple[int, int]:
    """(index, excess) of the unique point furthest below the diagonal."""
    exc = word.excesses()
    top = max(exc)
    hits = [i for i, e in enumerate(exc) if e == top]
    if top > 0 and len(hits) != 1:
        raise AssertionError(f"excess maximum of {word.steps!r} is not unique")
    return hits[0], top


def dyck_representative(word: NMWord) -> Tuple[NMWord, int]:
    """The unique Dyck rotation of ``word`` and the split offset used."""
    _require_coprime(word)
    v, top = _deepest_point(word)
    if top <= 0:
        return word, 0
    return NMWord(_rotate(word.steps, v)), v


def phi_hat(word: NMWord, peak_index: int) -> NMWord:
    """Rotate a Dyck word so that the marked block (1-based) comes last."""
    _require_coprime(word)
    if not is_dyck(word):
        raise DomainError(f"{word.steps!r} is not an (n,m)-Dyck path")
    blocks = BlockDecomposition.of(word).words()
    if not 1 <= peak_index <= len(blocks):
        raise DomainError(f"peak index {peak_index} out of range 1..{len(blocks)}")
    return NMWord("".join(blocks[peak_index:] + blocks[:peak_index]))


def phi_hat_inverse(word: NMWord) -> Tuple[NMWord, int]:
    """Undo :func:`phi_hat`: the Dyck rotation and the 1-based marked block."""
    _require_coprime(word)
    blocks = BlockDecomposition.of(word)
    v, top = _deepest_point(word)
    j = len(blocks)
    if top <= 0:
        return word, j
    bounds = []
    pos = 0
    for a, b in blocks.blocks:
        pos += a + b
        bounds.append(pos)
    if v not in bounds[:-1]:
        raise AssertionError(f"deepest point of {word.steps!r} is not a block boundary")
    i = bounds.index(v) + 1
    # the input's last block lands at position j - i of the output
    return NMWord(_rotate(word.steps, v)), j - i


def strip_first_up(word: NMWord) -> NMWord:
    """(n, kn+1)-Dyck word to (n, kn)-Dyck word by deleting the first up step."""
    n, m = word.n, word.m
    if n < 1 or (m - 1) % n or (m - 1) // n < 1:
        raise DomainError(f"shape ({n}, {m}) is not (n, kn+1) with n, k >= 1")
    if not is_dyck(word):
        raise DomainError(f"{word.steps!r} is not an (n,m)-Dyck path")
    return NMWord(word.steps[1:])


def prepend_up(word: NMWord) -> NMWord:
    n, m = word.n, word.m
    if n < 1 or m % n or m // n < 1:
        raise DomainError(f"shape ({n}, {m}) is not (n, kn) with n, k >= 1")
    if not is_dyck(word):
        raise DomainError(f"{word.steps!r} is not an (n,kn)-Dyck path")
    return NMWord("U" + word.steps)


_SWAP = str.maketrans("UD", "DU")


def dyck_to_kary(word: NMWord) -> PathWord:
    """Reverse an (n, kn)-Dyck word and swap U/D to get a k-ary path."""
    n, m = word.n, word.m
    if n < 1 or m % n or m // n < 1:
        raise DomainError(f"shape ({n}, {m}) is not (n, kn) with n, k >= 1")
    if not is_dyck(word):
        raise DomainError(f"{word.steps!r} is not an (n,kn)-Dyck path")
    k = m // n
    text = word.steps[::-1].translate(_SWAP)
    return PathWord.parse(text, PathProfile.ka(k, None))


def kary_to_dyck(path: PathWord) -> NMWord:
    profile = path.profile
    if not profile.is_singleton or profile.horizontal_width is not None:
        raise DomainError("k-ary paths use one rise and no horizontal steps")
    if not is_strict(path):
        raise DomainError(f"{path.text!r} is not a k-ary path")
    return NMWord(path.text[::-1].translate(_SWAP))
