import itertools
from math import comb, gcd

import pytest

from latpath.bijections_nm import (
    BlockDecomposition,
    cyclic_class,
    dyck_representative,
    dyck_to_kary,
    kary_to_dyck,
    phi_hat,
    phi_hat_inverse,
    prepend_up,
    strip_first_up,
)
from latpath.paths import DomainError, NMWord, PathProfile, PathWord, count_peaks, is_strict

import oracles


def coprime_pairs(max_sum):
    for total in range(2, max_sum + 1):
        for n in range(1, total):
            if gcd(n, total - n) == 1:
                yield n, total - n


def test_cyclic_class_of_five_step_word():
    cls = cyclic_class(NMWord("DUUDU"))
    assert {w.steps for w in cls.members} == {"UUDUD", "UDUDU", "DUDUU", "UDUUD", "DUUDU"}
    assert cls.members[0].steps == "UUDUD"


def test_cyclic_class_periodic_and_small():
    assert {w.steps for w in cyclic_class(NMWord("UDUD")).members} == {"UDUD", "DUDU"}
    assert len(cyclic_class(NMWord("UD"))) == 2
    with pytest.raises(DomainError):
        cyclic_class(NMWord(""))


def test_class_size_divides_length():
    for n, m in itertools.product(range(0, 4), repeat=2):
        for text in oracles.nm_words(n, m):
            if text:
                assert (n + m) % len(cyclic_class(NMWord(text))) == 0


def test_dyck_representative_examples():
    assert dyck_representative(NMWord("DUUDU")) == (NMWord("UUDUD"), 1)
    assert dyck_representative(NMWord("UUDUD")) == (NMWord("UUDUD"), 0)
    with pytest.raises(DomainError):
        dyck_representative(NMWord("UDUD"))


def test_cyclic_classes_exhaustive():
    for n, m in coprime_pairs(12):
        for text in oracles.nm_words(n, m):
            cls = cyclic_class(NMWord(text))
            assert len(cls) == n + m
            dycks = [w for w in cls.members if oracles.nm_is_dyck_fraction(w.steps, n, m)]
            assert len(dycks) == 1
            assert dyck_representative(NMWord(text))[0] == dycks[0]


def test_dyck_count_from_classes():
    for n, m in coprime_pairs(14):
        reps = {dyck_representative(NMWord(t))[0] for t in oracles.nm_words(n, m)}
        assert len(reps) * (n + m) == comb(n + m, n)


def test_block_decomposition():
    dec = BlockDecomposition.of(NMWord("UUDUUDDD"))
    assert dec.blocks == ((2, 1), (2, 3))
    assert "".join(dec.words()) == "UUDUUDDD"


@pytest.mark.parametrize("text,peak,expected", [("UUDUD", 1, "UDUUD"), ("UUDUD", 2, "UUDUD"), ("UUUDD", 1, "UUUDD")])
def test_phi_hat_examples(text, peak, expected):
    assert phi_hat(NMWord(text), peak).steps == expected


@pytest.mark.parametrize(
    "text,expected", [("UDUUD", ("UUDUD", 1)), ("UUUDD", ("UUUDD", 1)), ("UUDUD", ("UUDUD", 2))]
)
def test_phi_hat_inverse_examples(text, expected):
    back, peak = phi_hat_inverse(NMWord(text))
    assert (back.steps, peak) == expected


def test_phi_hat_bijection_exhaustive():
    for n, m in coprime_pairs(12):
        for j in range(1, min(n, m) + 1):
            targets = {
                t for t in oracles.nm_words(n, m)
                if t.startswith("U") and t.endswith("D") and len(oracles.nm_peak_points(t)) == j
            }
            dycks = [
                t for t in oracles.nm_words(n, m)
                if oracles.nm_is_dyck_fraction(t, n, m) and len(oracles.nm_peak_points(t)) == j
            ]
            images = set()
            for t in dycks:
                for peak in range(1, j + 1):
                    image = phi_hat(NMWord(t), peak).steps
                    assert image in targets and image not in images
                    images.add(image)
                    assert phi_hat_inverse(NMWord(image)) == (NMWord(t), peak)
            assert images == targets
            assert len(targets) == comb(n - 1, j - 1) * comb(m - 1, j - 1)


def test_phi_hat_rejects():
    with pytest.raises(DomainError):
        phi_hat(NMWord("DUUDU"), 1)
    with pytest.raises(DomainError):
        phi_hat(NMWord("UUDUD"), 3)
    with pytest.raises(DomainError):
        phi_hat_inverse(NMWord("DUUDU"))
    with pytest.raises(DomainError):
        phi_hat_inverse(NMWord("UUDD"))


def test_strip_first_up_examples():
    assert strip_first_up(NMWord("UUUUUDD")).steps == "UUUUDD"
    assert strip_first_up(NMWord("UUUUDUD")).steps == "UUUDUD"
    assert prepend_up(strip_first_up(NMWord("UUUUUDD"))) == NMWord("UUUUUDD")
    with pytest.raises(DomainError):
        strip_first_up(NMWord("UUUUDD"))


def test_dyck_to_kary_examples():
    image = dyck_to_kary(NMWord("UUUUDD"))
    assert image.text == "UUDDDD"
    assert is_strict(image) and image.order == 6
    assert count_peaks(image.steps) == 1
    # mechanical oracle: reverse then swap letters
    assert dyck_to_kary(NMWord("UUDUUD")).text == "UUDUUD"[::-1].translate(str.maketrans("UD", "DU"))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_dyck_kary_chain_exhaustive(k):
    prof = PathProfile.ka(k, None)
    for n in range(1, 5):
        kary = {w for w in oracles.ka_words(prof, (k + 1) * n) if oracles.is_strict(w)}
        big = [t for t in oracles.nm_words(n, k * n + 1) if oracles.nm_is_dyck_fraction(t, n, k * n + 1)]
        images = set()
        for t in big:
            peaks = len(oracles.nm_peak_points(t))
            mid = strip_first_up(NMWord(t))
            assert oracles.nm_is_dyck_fraction(mid.steps, n, k * n)
            assert len(oracles.nm_peak_points(mid.steps)) == peaks
            out = dyck_to_kary(mid)
            assert out.steps in kary and out.steps not in images
            assert len(oracles.peaks_of(out.steps)) == peaks
            images.add(out.steps)
            assert kary_to_dyck(out) == mid
            assert prepend_up(mid) == NMWord(t)
        assert images == kary


def test_kary_to_dyck_rejects_other_profiles():
    with pytest.raises(DomainError):
        kary_to_dyck(PathWord.parse("UHD", PathProfile.ka(1, 1)))
