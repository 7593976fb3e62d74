"""Lattice-path combinatorics for humps and peaks.

Bijections between marked (k,a)-paths and super paths, the cyclic-lemma
machinery for coprime (n,m)-Dyck paths, exact closed-form counts and the
exhaustive enumerators used to check them.
"""

from .bijections_ka import (
    BijectionTrace,
    PsiDecomposition,
    hump_grow,
    hump_shrink,
    phi,
    phi_inverse,
    psi_contract,
    psi_expand,
)
from .bijections_nm import (
    BlockDecomposition,
    CyclicClass,
    cyclic_class,
    dyck_representative,
    dyck_to_kary,
    kary_to_dyck,
    phi_hat,
    phi_hat_inverse,
    prepend_up,
    strip_first_up,
)
from .enumeration import Family, FamilySpec, count_family, generate, total_humps, total_peaks
from .formulas import (
    binomial,
    catalan,
    d_nm,
    d_nm_j,
    delta_divides,
    f_nm_j,
    f_ud_nm_j,
    kary_count,
    kary_peaks_count,
    narayana,
)
from .harness import CountReport, run_verify
from .paths import (
    Classification,
    DomainError,
    Hump,
    LatticePoint,
    NMClassification,
    NMWord,
    PathProfile,
    PathWord,
    classify,
    humps,
    nm_classify,
    nm_peaks,
    reverse_word,
)

__all__ = [
    "BijectionTrace",
    "binomial",
    "BlockDecomposition",
    "catalan",
    "Classification",
    "classify",
    "count_family",
    "CountReport",
    "cyclic_class",
    "CyclicClass",
    "d_nm",
    "d_nm_j",
    "delta_divides",
    "DomainError",
    "dyck_representative",
    "dyck_to_kary",
    "f_nm_j",
    "f_ud_nm_j",
    "Family",
    "FamilySpec",
    "generate",
    "Hump",
    "hump_grow",
    "hump_shrink",
    "humps",
    "kary_count",
    "kary_peaks_count",
    "kary_to_dyck",
    "LatticePoint",
    "narayana",
    "nm_classify",
    "nm_peaks",
    "NMClassification",
    "NMWord",
    "PathProfile",
    "PathWord",
    "phi",
    "phi_hat",
    "phi_hat_inverse",
    "phi_inverse",
    "prepend_up",
    "psi_contract",
    "psi_expand",
    "PsiDecomposition",
    "reverse_word",
    "run_verify",
    "strip_first_up",
    "total_humps",
    "total_peaks",
]

__version__ = "0.1.0"
