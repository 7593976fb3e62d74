"""Identity checks and count tables behind the ``verify`` and ``table`` commands.

Each identity id maps to a checker returning ``(lhs, rhs)`` for one parameter
tuple. Counting identities compare a brute-force side against a closed form
or a dynamic-programming count. Bijection checks are phrased the same way:
``lhs`` counts instances that passed every round trip, ``rhs`` is the size of
the target set plus the number of failures seen, so ``lhs == rhs`` holds
exactly when the map is a verified bijection.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from . import formulas
from .bijections_ka import (
    designated_hump,
    hump_grow,
    hump_shrink,
    phi,
    phi_inverse,
    psi_contract_index,
    psi_expand,
)
from .bijections_nm import (
    cyclic_class,
    dyck_representative,
    dyck_to_kary,
    kary_to_dyck,
    phi_hat,
    phi_hat_inverse,
    prepend_up,
    strip_first_up,
)
from .enumeration import Family, FamilySpec, count_family, generate, super_count, total_humps, total_peaks
from .paths import (
    DomainError,
    NMWord,
    PathProfile,
    PathWord,
    count_peaks,
    hump_spans,
    is_dyck,
    is_strict,
    nm_peak_count,
    parse_width,
)

Params = Dict[str, object]


@dataclass
class CountReport:
    id: str
    params: Params
    lhs: int
    rhs: int
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "params": self.params,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "pass": self.passed,
            "elapsed_ms": self.elapsed_ms,
        }


# ------------------------------------------------------------ parameter ranges


class RangeError(ValueError):
    pass


def parse_range(text: str, allow_inf: bool = False) -> List[object]:
    """``"3"``, ``"1..4"`` (inclusive), ``"1,2,inf"`` or combinations."""
    values: List[object] = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            raise RangeError(f"empty item in range {text!r}")
        if part.lower() == "inf":
            if not allow_inf:
                raise RangeError("'inf' is only accepted for --a")
            values.append("inf")
            continue
        try:
            if ".." in part:
                lo_s, hi_s = part.split("..", 1)
                lo, hi = int(lo_s), int(hi_s)
                if lo > hi:
                    raise RangeError(f"empty range {part!r}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(part))
        except ValueError as exc:
            if isinstance(exc, RangeError):
                raise
            raise RangeError(f"malformed range {text!r}") from None
    for v in values:
        if v != "inf" and v < 0:
            raise RangeError(f"negative value in range {text!r}")
    return values


def _profile(params: Params) -> PathProfile:
    a = parse_width(params["a"])
    if "rises" in params:
        return PathProfile(frozenset(params["rises"]), a)
    return PathProfile.ka(params["k"], a)


def _k_factor(params: Params) -> int:
    return params["k"] + 1


def _ka_spec(family: Family, params: Params) -> FamilySpec:
    return FamilySpec(family, params["n"], _profile(params))


# ------------------------------------------------------------ counting identities


def check_eq4(p: Params) -> Tuple[int, int]:
    prof = _profile(p)
    lhs = _k_factor(p) * total_humps(prof, p["n"])
    rhs = super_count(prof, p["n"]) - formulas.delta_divides(p["a"], p["n"])
    return lhs, rhs


def check_eq5(p: Params) -> Tuple[int, int]:
    prof = _profile(p)
    n = p["n"]
    lhs = _k_factor(p) * total_peaks(prof, n)
    a = prof.horizontal_width
    shifted = 0 if a is None else super_count(prof, n - a)
    return lhs, super_count(prof, n) - shifted


def check_eq2(p: Params) -> Tuple[int, int]:
    return check_eq5({"k": 1, "a": "inf", "n": p["n"]})


def check_eq3(p: Params) -> Tuple[int, int]:
    prof = PathProfile.ka(1, 1)
    return 2 * total_humps(prof, p["n"]), super_count(prof, p["n"]) - 1


def check_eq7(p: Params) -> Tuple[int, int]:
    brute = sum(1 for _ in generate(_ka_spec(Family.KA_SUPER_POSITIVE_UP, p)))
    rhs = count_family(_ka_spec(Family.KA_SUPER, p)) - formulas.delta_divides(p["a"], p["n"])
    return _k_factor(p) * brute, rhs


def check_eq8(p: Params) -> Tuple[int, int]:
    brute = sum(1 for _ in generate(FamilySpec.nm(Family.NM_DYCK, p["n"], p["m"])))
    return brute, formulas.d_nm(p["n"], p["m"])


def check_eq9(p: Params) -> Tuple[int, int]:
    n, m, j = p["n"], p["m"], p["j"]
    brute = sum(1 for w in generate(FamilySpec.nm(Family.NM_FREE, n, m)) if nm_peak_count(w.steps) == j)
    return brute, formulas.f_nm_j(n, m, j)


def check_eq10(p: Params) -> Tuple[int, int]:
    n, m, j = p["n"], p["m"], p["j"]
    brute = sum(1 for w in generate(FamilySpec.nm(Family.NM_FREE_UD, n, m)) if nm_peak_count(w.steps) == j)
    return brute, formulas.f_ud_nm_j(n, m, j)


def check_eq11(p: Params) -> Tuple[int, int]:
    n, m, j = p["n"], p["m"], p["j"]
    labelled = sum(nm_peak_count(w.steps) for w in generate(FamilySpec.nm(Family.NM_DYCK, n, m))
                   if nm_peak_count(w.steps) == j)
    return labelled, j * formulas.d_nm_j(n, m, j)


def _kary_words(k: int, n: int):
    return generate(FamilySpec(Family.KA_STRICT, (k + 1) * n, PathProfile.ka(k, None)))


def check_eq12(p: Params) -> Tuple[int, int]:
    return sum(1 for _ in _kary_words(p["k"], p["n"])), formulas.kary_count(p["k"], p["n"])


def check_eq13(p: Params) -> Tuple[int, int]:
    k, n, j = p["k"], p["n"], p["j"]
    brute = sum(1 for w in _kary_words(k, n) if count_peaks(w.steps) == j)
    return brute, formulas.kary_peaks_count(k, n, j)


def check_sa_corollary(p: Params) -> Tuple[int, int]:
    prof = _profile(p)
    brute = sum(1 for _ in generate(FamilySpec(Family.KA_SUPER_POSITIVE_UP, p["n"], prof)))
    return total_humps(prof, p["n"]), brute


# ------------------------------------------------------------ bijection checks


def check_phi_roundtrip(p: Params) -> Tuple[int, int]:
    prof = _profile(p)
    n = p["n"]
    targets = {w.steps for w in generate(FamilySpec(Family.KA_SUPER_POSITIVE_UP, n, prof))}
    images = set()
    verified = failures = 0
    for word in generate(FamilySpec(Family.KA_STRICT, n, prof)):
        for h in range(len(hump_spans(word.steps))):
            try:
                image, _ = phi(word, h)
                back, h_back, _ = phi_inverse(image)
            except (DomainError, AssertionError):
                failures += 1
                continue
            ok = image.steps in targets and image.steps not in images and (back.steps, h_back) == (word.steps, h)
            if ok:
                verified += 1
                images.add(image.steps)
            else:
                failures += 1
    for steps in targets:
        try:
            back, h_back, _ = phi_inverse(PathWord(steps, prof))
            if phi(back, h_back)[0].steps != steps:
                failures += 1
        except (DomainError, AssertionError):
            failures += 1
    return verified, len(targets) + failures


def check_psi_partition(p: Params) -> Tuple[int, int]:
    k = _profile(p).k
    targets = {w.steps for w in generate(_ka_spec(Family.KA_SUPER_WITH_UP, p))}
    covered: Counter = Counter()
    failures = 0
    for word in generate(_ka_spec(Family.KA_SUPER_POSITIVE_UP, p)):
        try:
            members = psi_expand(word)
            ok = (
                len(members) == k + 1
                and len({m.steps for m in members}) == k + 1
                and all(m.steps in targets for m in members)
                and all(psi_contract_index(m) == (word, i) for i, m in enumerate(members, 1))
            )
        except (DomainError, AssertionError):
            ok = False
        if ok:
            covered.update(m.steps for m in members)
        else:
            failures += 1
    lhs = sum(covered.values())
    overlaps = lhs - len(covered)
    missing = len(targets - set(covered))
    return lhs, len(targets) + failures + missing + overlaps


def check_shrink_bijection(p: Params) -> Tuple[int, int]:
    prof = _profile(p)
    if prof.horizontal_width is None:
        raise DomainError("shrink-bijection needs a finite a")
    n, a = p["n"], prof.horizontal_width
    targets = set()
    if n - a >= 0:
        targets = {w.steps for w in generate(FamilySpec(Family.KA_SUPER_POSITIVE_UP, n - a, prof))}
    images = set()
    verified = failures = 0
    for word in generate(FamilySpec(Family.KA_SUPER_POSITIVE_UP, n, prof)):
        try:
            if designated_hump(word).is_peak:
                continue
            small = hump_shrink(word)
            ok = small.steps in targets and small.steps not in images and hump_grow(small) == word
        except (DomainError, AssertionError):
            ok = False
        if ok:
            verified += 1
            images.add(small.steps)
        else:
            failures += 1
    for steps in targets:
        try:
            if hump_shrink(hump_grow(PathWord(steps, prof))).steps != steps:
                failures += 1
        except (DomainError, AssertionError):
            failures += 1
    return verified, len(targets) + failures


def check_lemma2_class(p: Params) -> Tuple[int, int]:
    n, m = p["n"], p["m"]
    total = verified = 0
    for word in generate(FamilySpec.nm(Family.NM_FREE, n, m)):
        total += 1
        try:
            cls = cyclic_class(word)
            dycks = [w for w in cls.members if is_dyck(w)]
            rep, _ = dyck_representative(word)
            ok = len(cls) == n + m and len(dycks) == 1 and rep == dycks[0]
        except (DomainError, AssertionError):
            ok = False
        verified += ok
    return verified, total


def check_phihat_roundtrip(p: Params) -> Tuple[int, int]:
    n, m, j = p["n"], p["m"], p["j"]
    targets = {w.steps for w in generate(FamilySpec.nm(Family.NM_FREE_UD, n, m, j))}
    images = set()
    verified = failures = 0
    for word in generate(FamilySpec.nm(Family.NM_DYCK, n, m, j)):
        for peak in range(1, j + 1):
            try:
                image = phi_hat(word, peak)
                ok = (
                    image.steps in targets
                    and image.steps not in images
                    and phi_hat_inverse(image) == (word, peak)
                )
            except (DomainError, AssertionError):
                ok = False
            if ok:
                verified += 1
                images.add(image.steps)
            else:
                failures += 1
    for steps in targets:
        try:
            back, peak = phi_hat_inverse(NMWord(steps))
            if phi_hat(back, peak).steps != steps:
                failures += 1
        except (DomainError, AssertionError):
            failures += 1
    return verified, len(targets) + failures


def check_lemma4_chain(p: Params) -> Tuple[int, int]:
    k, n = p["k"], p["n"]
    targets = {w.steps for w in _kary_words(k, n)}
    middle = {w.steps for w in generate(FamilySpec.nm(Family.NM_DYCK, n, k * n))}
    images = set()
    verified = failures = 0
    for word in generate(FamilySpec.nm(Family.NM_DYCK, n, k * n + 1)):
        try:
            mid = strip_first_up(word)
            kary = dyck_to_kary(mid)
            peaks = nm_peak_count(word.steps)
            ok = (
                mid.steps in middle
                and kary.steps in targets
                and kary.steps not in images
                and is_strict(kary)
                and nm_peak_count(mid.steps) == peaks
                and count_peaks(kary.steps) == peaks
                and kary_to_dyck(kary) == mid
                and prepend_up(mid) == word
            )
        except (DomainError, AssertionError):
            ok = False
        if ok:
            verified += 1
            images.add(kary.steps)
        else:
            failures += 1
    return verified, len(targets) + failures


# ------------------------------------------------------------ registry


def _ka_tuples(ks, as_, ns) -> List[Params]:
    return [{"k": k, "a": a, "n": n} for k in ks for a in as_ for n in ns]


def _pairs(max_sum: int, coprime: bool) -> List[Tuple[int, int]]:
    out = []
    for total in range(2, max_sum + 1):
        for n in range(1, total):
            m = total - n
            if not coprime or math.gcd(n, m) == 1:
                out.append((n, m))
    return out


def _nm_pairs(opts: dict, coprime: bool, default_sum: int) -> List[Tuple[int, int]]:
    if opts.get("n") is not None or opts.get("m") is not None:
        ns = parse_range(opts.get("n") or "1..6")
        ms = parse_range(opts.get("m") or "1..6")
        return [(n, m) for n in ns for m in ms if n >= 1 and m >= 1 and (not coprime or math.gcd(n, m) == 1)]
    max_sum = int(opts.get("max_sum") or default_sum)
    return _pairs(max_sum, coprime)


def _with_j(pairs, lo: int, opts: dict) -> List[Params]:
    js = parse_range(opts["j"]) if opts.get("j") is not None else None
    out = []
    for n, m in pairs:
        for j in range(lo, min(n, m) + 1):
            if js is None or j in js:
                out.append({"n": n, "m": m, "j": j})
    return out


def _rng(opts: dict, key: str, default: str, allow_inf: bool = False) -> List[object]:
    return parse_range(opts.get(key) or default, allow_inf=allow_inf)


def _ka_default(n_default: str, a_default: str = "1..2"):
    def build(opts: dict) -> List[Params]:
        ks = _rng(opts, "k", "1..3")
        if min(ks) < 1:
            raise RangeError("k must be >= 1")
        as_ = _rng(opts, "a", a_default, allow_inf=True)
        ns = _rng(opts, "n", n_default)
        if opts.get("rises"):
            rises = sorted(set(parse_range(opts["rises"])))
            if not rises or min(rises) < 1:
                raise RangeError("rises must be positive")
            return [{"rises": rises, "a": a, "n": n} for a in as_ for n in ns]
        return _ka_tuples(ks, as_, ns)

    return build


def _finite_ka(n_default: str):
    base = _ka_default(n_default)

    def build(opts: dict) -> List[Params]:
        tuples = base(opts)
        if any(t["a"] == "inf" for t in tuples):
            raise RangeError("this identity needs a finite a")
        return tuples

    return build


def _singleton_ka(n_default: str, a_default: str = "1..2"):
    base = _ka_default(n_default, a_default)

    def build(opts: dict) -> List[Params]:
        if opts.get("rises"):
            raise RangeError("this identity needs a single rise k")
        return base(opts)

    return build


def _n_only(default: str):
    def build(opts: dict) -> List[Params]:
        return [{"n": n} for n in _rng(opts, "n", default)]

    return build


def _kary(with_j: bool):
    def build(opts: dict) -> List[Params]:
        ks = _rng(opts, "k", "1..3")
        ns = _rng(opts, "n", "1..4")
        if min(ks) < 1:
            raise RangeError("k must be >= 1")
        if not with_j:
            return [{"k": k, "n": n} for k in ks for n in ns]
        js = parse_range(opts["j"]) if opts.get("j") is not None else None
        return [
            {"k": k, "n": n, "j": j}
            for k in ks
            for n in ns
            for j in range(1, n + 1)
            if js is None or j in js
        ]

    return build


def _sa(opts: dict) -> List[Params]:
    rises = sorted(set(parse_range(opts.get("rises") or "1,2")))
    if not rises or min(rises) < 1:
        raise RangeError("rises must be positive")
    return [{"rises": rises, "a": a, "n": n} for a in _rng(opts, "a", "1", True) for n in _rng(opts, "n", "0..7")]


@dataclass(frozen=True)
class Identity:
    checker: Callable[[Params], Tuple[int, int]]
    params: Callable[[dict], List[Params]]
    summary: str


IDENTITIES: Dict[str, Identity] = {
    "eq2": Identity(check_eq2, _n_only("1..12"), "2 * sum of Dyck peaks = |SP_n(1,inf)|"),
    "eq3": Identity(check_eq3, _n_only("0..12"), "2 * sum of Motzkin humps = |SP_n(1,1)| - 1"),
    "eq4": Identity(check_eq4, _singleton_ka("0..10"), "(k+1) * sum of humps = |SP_n| - delta"),
    "eq5": Identity(check_eq5, _singleton_ka("1..10"), "(k+1) * sum of peaks = |SP_n| - |SP_{n-a}|"),
    "eq7": Identity(check_eq7, _singleton_ka("0..10"), "(k+1) * |SP^U_n| = |SP_n| - delta"),
    "eq8": Identity(check_eq8, lambda o: [{"n": n, "m": m} for n, m in _nm_pairs(o, True, 14)],
                    "|D(n,m)| = C(n+m,n)/(n+m)"),
    "eq9": Identity(check_eq9, lambda o: _with_j(_nm_pairs(o, False, 12), 0, o), "|F(n,m;j)| = C(n,j)C(m,j)"),
    "eq10": Identity(check_eq10, lambda o: _with_j(_nm_pairs(o, False, 12), 1, o),
                     "|F^UD(n,m;j)| = C(n-1,j-1)C(m-1,j-1)"),
    "eq11": Identity(check_eq11, lambda o: _with_j(_nm_pairs(o, True, 12), 1, o),
                     "peak-labelled Dyck count = j * D(n,m;j)"),
    "eq12": Identity(check_eq12, _kary(False), "|k-ary paths of order (k+1)n| = C((k+1)n,n)/(kn+1)"),
    "eq13": Identity(check_eq13, _kary(True), "k-ary paths with j peaks = C(n-1,j-1)C(kn,j-1)/j"),
    "lemma2-class": Identity(check_lemma2_class, lambda o: [{"n": n, "m": m} for n, m in _nm_pairs(o, True, 12)],
                             "class size n+m with exactly one Dyck member"),
    "phi-roundtrip": Identity(check_phi_roundtrip, _ka_default("0..8"), "phi is a bijection onto SP^U_n"),
    "phihat-roundtrip": Identity(check_phihat_roundtrip, lambda o: _with_j(_nm_pairs(o, True, 12), 1, o),
                                 "phi-hat is a bijection onto F^UD(n,m;j)"),
    "psi-partition": Identity(check_psi_partition, _singleton_ka("0..8"),
                              "psi classes partition SP^0_n into blocks of size k+1"),
    "shrink-bijection": Identity(check_shrink_bijection, _finite_ka("0..8"),
                                 "hump_shrink is a bijection onto SP^U_{n-a}"),
    "lemma4-chain": Identity(check_lemma4_chain, _kary(False), "D(n,kn+1) -> D(n,kn) -> k-ary, peak preserving"),
    "sa-corollary": Identity(check_sa_corollary, _sa, "sum of humps over (S,a)-paths = |SP^U_n(S,a)|"),
}


def evaluate(identity_id: str, params: Params, timing: bool = True) -> CountReport:
    start = time.perf_counter()
    lhs, rhs = IDENTITIES[identity_id].checker(params)
    elapsed = round((time.perf_counter() - start) * 1000.0, 3) if timing else 0
    return CountReport(identity_id, dict(params), lhs, rhs, elapsed)


def _evaluate_star(args) -> CountReport:
    return evaluate(*args)


def parameter_tuples(identity_id: str, opts: dict) -> List[Params]:
    if identity_id not in IDENTITIES:
        raise RangeError(f"unknown identity {identity_id!r}")
    tuples = IDENTITIES[identity_id].params(opts)
    if not tuples:
        raise RangeError("parameter ranges select no tuples")
    return tuples


def run_verify(identity_id: str, opts: dict, timing: bool = True, jobs: int = 1) -> List[CountReport]:
    """Evaluate every tuple; reports come back in canonical (input) order."""
    tuples = parameter_tuples(identity_id, opts)
    work = [(identity_id, t, timing) for t in tuples]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_evaluate_star, work))
    return [_evaluate_star(w) for w in work]


def summarize(identity_id: str, reports: Sequence[CountReport]) -> dict:
    passed = sum(r.passed for r in reports)
    return {
        "summary": {
            "id": identity_id,
            "total": len(reports),
            "passed": passed,
            "failed": len(reports) - passed,
            "pass": passed == len(reports),
        }
    }


def format_params(params: Params) -> str:
    parts = []
    for key, value in params.items():
        if isinstance(value, (list, tuple)):
            value = "{" + ",".join(map(str, value)) + "}"
        parts.append(f"{key}={value}")
    return ";".join(parts)


# ------------------------------------------------------------ tables


def table_rational_narayana(ns: Iterable[int], ms: Iterable[int]) -> List[dict]:
    rows = []
    for n in ns:
        for m in ms:
            if n < 1 or m < 1 or math.gcd(n, m) != 1:
                continue
            values = [formulas.d_nm_j(n, m, j) for j in range(1, min(n, m) + 1)]
            rows.append({"n": n, "m": m, "values": values, "sum": sum(values)})
    return rows


def table_hump_totals(ks: Iterable[int], as_: Iterable[object], ns: Iterable[int]) -> List[dict]:
    rows = []
    for k in ks:
        for a in as_:
            prof = PathProfile.ka(k, a)
            for n in ns:
                rows.append({
                    "k": k,
                    "a": prof.a_token,
                    "n": n,
                    "humps": total_humps(prof, n),
                    "peaks": total_peaks(prof, n),
                })
    return rows


def table_kary_peaks(ks: Iterable[int], ns: Iterable[int]) -> List[dict]:
    rows = []
    for k in ks:
        for n in ns:
            values = [formulas.kary_peaks_count(k, n, j) for j in range(1, n + 1)]
            rows.append({"k": k, "n": n, "values": values, "sum": sum(values)})
    return rows
