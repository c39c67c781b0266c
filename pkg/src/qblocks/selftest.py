"""Programmatic acceptance checks, runnable from the command line.

Each criterion function sweeps the rank range and case counts it is defined
with, returns a CriterionResult, and never raises on a mere verification
failure; tests and the selftest command decide what to do with red results.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from qblocks.charring import (
    FormalCharacter,
    Truncation,
    full_support_height,
    k_dim,
    subset_sum_P,
    subset_sum_P_by_enumeration,
    subset_sum_Pw,
    super_verma_char,
    thick_dim,
    verma_char,
)
from qblocks.filtration import (
    FlagMultiset,
    ind_block_mult,
    ind_block_mult_split,
    linkage_check,
    res_block_mult,
    restriction_flag,
    verma_flag_extract,
)
from qblocks.lattice import (
    Weight,
    leq,
    positive_roots,
    rho,
    weight_from_simple_coefficients,
)
from qblocks.sampling import sample_weights
from qblocks.weyl import Perm, all_perms, rho_defect

DEFAULT_SEED = 7


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    cases: int
    seconds: float
    detail: str
    budget: Optional[float] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        budget = f" budget={self.budget:.0f}s" if self.budget else ""
        return (
            f"{status} criterion {self.number}: {self.name} "
            f"[{self.cases} checks, {self.seconds:.2f}s{budget}] {self.detail}"
        )


def _cap(full_scale: int, max_n: Optional[int]) -> int:
    return full_scale if max_n is None else min(full_scale, max_n)


def check_linkage(
    seed: int = DEFAULT_SEED, samples: int = 10, max_n: Optional[int] = None
) -> CriterionResult:
    """Criterion 1: both orbit intersections are singletons and the
    connecting offset has subset-sum coefficient 1, exhaustively in w."""
    t0 = time.perf_counter()
    cases = 0
    detail = ""
    passed = True
    for n in range(2, _cap(6, max_n) + 1):
        for lam in sample_weights(n, samples, seed=seed + n):
            for w in all_perms(n):
                rep = linkage_check(lam, w)
                cases += 1
                if not rep.passed and passed:
                    passed = False
                    detail = f"first failure: n={n} lambda={lam} w={w}"
    return CriterionResult(
        1, "orbit linkage, exhaustive in w", passed, cases,
        time.perf_counter() - t0, detail or "all singletons", budget=60,
    )


def check_restriction_mult(
    seed: int = DEFAULT_SEED, samples: int = 3, max_n: Optional[int] = None
) -> CriterionResult:
    """Criterion 2: the block-projected restriction multiplicity equals
    2^floor((n-1)/2), computed rather than assumed."""
    t0 = time.perf_counter()
    cases = 0
    detail = ""
    passed = True
    for n in range(2, _cap(5, max_n) + 1):
        expected = k_dim(n)
        for lam in sample_weights(n, samples, seed=seed + 10 * n):
            for w in all_perms(n):
                got = res_block_mult(lam, w)
                cases += 1
                if got != expected and passed:
                    passed = False
                    detail = f"n={n} lambda={lam} w={w}: {got} != {expected}"
    return CriterionResult(
        2, "restriction block multiplicity", passed, cases,
        time.perf_counter() - t0, detail or "all equal k_dim(n)", budget=10,
    )


def check_induction_mult(
    seed: int = DEFAULT_SEED, samples: int = 3, max_n: Optional[int] = None
) -> CriterionResult:
    """Criterion 3: raw induced multiplicity 2^ceil((n-1)/2), halving to
    k_dim(n) after the even-rank parity split."""
    t0 = time.perf_counter()
    cases = 0
    detail = ""
    passed = True
    for n in range(2, _cap(5, max_n) + 1):
        raw_expected = 2 ** ((n - 1) - (n - 1) // 2)
        split_expected = k_dim(n)
        for lam in sample_weights(n, samples, seed=seed + 100 * n):
            for w in all_perms(n):
                raw = ind_block_mult(lam, w)
                split = ind_block_mult_split(lam, w)
                cases += 1
                if (raw != raw_expected or split != split_expected) and passed:
                    passed = False
                    detail = (
                        f"n={n} lambda={lam} w={w}: raw={raw} (want {raw_expected}) "
                        f"split={split} (want {split_expected})"
                    )
    return CriterionResult(
        3, "induction block multiplicity, raw and split", passed, cases,
        time.perf_counter() - t0, detail or "all equal", budget=10,
    )


def check_flag_oracle(
    seed: int = DEFAULT_SEED, samples: int = 3, max_n: Optional[int] = None
) -> CriterionResult:
    """Criterion 4: greedy extraction from the even-part super-Verma
    character reproduces the directly computed restriction flag."""
    t0 = time.perf_counter()
    cases = 0
    detail = ""
    passed = True
    for n in range(2, _cap(4, max_n) + 1):
        bound = full_support_height(n)
        for lam in sample_weights(n, samples, seed=seed + 1000 * n):
            for w in all_perms(n):
                wl = w.act(lam)
                trunc = Truncation(wl, bound)
                extracted = verma_flag_extract(
                    super_verma_char(wl, trunc, even_only=True), trunc
                )
                direct = restriction_flag(lam, w)
                cases += 1
                if extracted != direct and passed:
                    passed = False
                    detail = f"n={n} lambda={lam} w={w}: {extracted} != {direct}"
    return CriterionResult(
        4, "flag extraction matches direct restriction flag", passed, cases,
        time.perf_counter() - t0, detail or "routes agree", budget=30,
    )


def check_multiset_identity(max_n: Optional[int] = None) -> CriterionResult:
    """Criterion 5: e^rho * P_w = e^{w(rho)} * P for every w, and the
    rho-defect of w carries subset-sum coefficient exactly 1."""
    t0 = time.perf_counter()
    cases = 0
    detail = ""
    passed = True
    for n in range(1, _cap(5, max_n) + 1):
        r = rho(n)
        p = subset_sum_P(n)
        d_r = FormalCharacter.delta(r)
        for w in all_perms(n):
            lhs = d_r * subset_sum_Pw(w)
            rhs = FormalCharacter.delta(w.act(r)) * p
            cases += 1
            if lhs != rhs and passed:
                passed = False
                detail = f"shift identity fails at n={n} w={w}"
    for n in range(1, _cap(6, max_n) + 1):
        p = subset_sum_P(n)
        for w in all_perms(n):
            cases += 1
            if p.coefficient(rho_defect(w)) != 1 and passed:
                passed = False
                detail = f"defect coefficient != 1 at n={n} w={w}"
    return CriterionResult(
        5, "subset-sum shift identity and defect coefficient", passed, cases,
        time.perf_counter() - t0, detail or "identity holds",
    )


def check_mass_law(max_n: Optional[int] = None) -> CriterionResult:
    """Criterion 6: total subset-sum mass is 2^(number of positive roots),
    and the convolution construction matches plain subset enumeration."""
    t0 = time.perf_counter()
    cases = 0
    detail = ""
    passed = True
    for n in range(1, _cap(6, max_n) + 1):
        cases += 1
        if subset_sum_P(n).mass() != 2 ** (n * (n - 1) // 2) and passed:
            passed = False
            detail = f"mass law fails at n={n}"
    for n in range(1, _cap(4, max_n) + 1):
        cases += 1
        if subset_sum_P(n) != subset_sum_P_by_enumeration(n) and passed:
            passed = False
            detail = f"enumeration oracle disagrees at n={n}"
    return CriterionResult(
        6, "subset-sum mass law and enumeration oracle", passed, cases,
        time.perf_counter() - t0, detail or "masses and supports agree",
    )


def check_orbit_maximality(
    seed: int = DEFAULT_SEED, samples: int = 3, max_n: Optional[int] = None
) -> CriterionResult:
    """Criterion 7: every plain-orbit point of a dominant weight lies below
    it in dominance order."""
    t0 = time.perf_counter()
    cases = 0
    detail = ""
    passed = True
    for n in range(2, _cap(5, max_n) + 1):
        for lam in sample_weights(n, samples, seed=seed + 41 * n):
            for u in all_perms(n):
                cases += 1
                if not leq(u.act(lam), lam) and passed:
                    passed = False
                    detail = f"n={n} lambda={lam} u={u}"
    return CriterionResult(
        7, "dominant weights top their orbits", passed, cases,
        time.perf_counter() - t0, detail or "all below",
    )


def check_thick_dim(max_n: Optional[int] = None) -> CriterionResult:
    """Criterion 8: thick-multiplicity values against the monomial-count
    oracle and the pinned small cases."""
    t0 = time.perf_counter()
    cases = 0
    detail = ""
    passed = True

    def monomials_below(n: int, r: int) -> int:
        return sum(
            1
            for exps in itertools.product(range(r), repeat=n)
            if sum(exps) < r
        )

    for n in range(1, _cap(3, max_n) + 1):
        for r in range(1, 6):
            cases += 1
            if thick_dim(n, r) != monomials_below(n, r) and passed:
                passed = False
                detail = f"oracle mismatch at n={n} r={r}"
    pinned = [(4, 1, 1), (1, 5, 5), (2, 3, 6)]
    for n, r, want in pinned:
        cases += 1
        if thick_dim(n, r) != want and passed:
            passed = False
            detail = f"thick_dim({n},{r}) != {want}"
    return CriterionResult(
        8, "thick multiplicity against monomial oracle", passed, cases,
        time.perf_counter() - t0, detail or "all counts agree",
    )


def _random_cone_element(rng: random.Random, n: int, top: int = 2) -> Weight:
    total = Weight.zero(n)
    for root in positive_roots(n):
        c = rng.randint(0, top)
        if c:
            total = total + Weight(c * x for x in root.as_weight(n).coords)
    return total


def _property_leq(rng: random.Random) -> Optional[str]:
    n = rng.randint(2, 5)
    a = Weight(rng.randint(-5, 5) for _ in range(n))
    nu1 = _random_cone_element(rng, n)
    nu2 = _random_cone_element(rng, n)
    b = a + nu1
    c = b + nu2
    if not (leq(a, a) and leq(a, b) and leq(b, c) and leq(a, c)):
        return f"order axioms fail: a={a} b={b} c={c}"
    if leq(b, a) != (a == b):
        return f"antisymmetry fails: a={a} b={b}"
    return None


def _property_actions(rng: random.Random) -> Optional[str]:
    n = rng.randint(2, 6)
    images = list(range(1, n + 1))
    rng.shuffle(images)
    u = Perm(images)
    rng.shuffle(images)
    v = Perm(images)
    lam = Weight(Fraction(rng.randint(-8, 8), rng.choice((1, 2))) for _ in range(n))
    e = Perm.identity(n)
    if u.act(v.act(lam)) != (u * v).act(lam):
        return f"plain action law fails: u={u} v={v} lambda={lam}"
    if u.dot(v.dot(lam)) != (u * v).dot(lam):
        return f"dot action law fails: u={u} v={v} lambda={lam}"
    if e.act(lam) != lam or e.dot(lam) != lam:
        return f"identity fails on {lam}"
    if u * u.inverse() != e:
        return f"inverse fails for {u}"
    return None


def _property_defect(rng: random.Random) -> Optional[str]:
    n = rng.randint(2, 7)
    images = list(range(1, n + 1))
    rng.shuffle(images)
    w = Perm(images)
    r = rho(n)
    if rho_defect(w) != r - w.act(r):
        return f"defect identity fails for {w}"
    return None


def _property_extraction(rng: random.Random) -> Optional[str]:
    n = rng.choice((2, 3))
    bound = full_support_height(n) + rng.randint(0, 2)
    base = Weight(rng.randint(-4, 4) for _ in range(n))
    trunc = Truncation(base, bound)
    region = [
        cs
        for cs in itertools.product(range(bound + 1), repeat=n - 1)
        if sum(cs) <= bound
    ]
    picks = rng.sample(region, rng.randint(1, min(3, len(region))))
    super_blocks = rng.random() < 0.5
    expected = {}
    total = FormalCharacter.zero(n)
    for cs in picks:
        mu = base - weight_from_simple_coefficients(n, cs)
        mult = rng.randint(1, 3)
        expected[mu] = mult
        local = Truncation(mu, bound - sum(cs))
        block = (
            super_verma_char(mu, local, even_only=True)
            if super_blocks
            else verma_char(mu, local)
        )
        total = total + block.scale(mult)
    want = FlagMultiset(expected)
    got_default = verma_flag_extract(total, trunc, super_blocks=super_blocks)
    got_random = verma_flag_extract(
        total, trunc, super_blocks=super_blocks, tie_break=rng.choice
    )
    if got_default != want or got_random != want:
        return f"extraction differs: base={base} picks={picks} super={super_blocks}"
    return None


def check_property_suite(
    seed: int = DEFAULT_SEED, cases_each: int = 1000
) -> CriterionResult:
    """Criterion 9: randomized order axioms, action laws, defect identity,
    and extraction order-independence."""
    t0 = time.perf_counter()
    families: list[tuple[str, Callable[[random.Random], Optional[str]]]] = [
        ("leq order axioms", _property_leq),
        ("group action laws", _property_actions),
        ("rho defect identity", _property_defect),
        ("extraction order independence", _property_extraction),
    ]
    cases = 0
    detail = ""
    passed = True
    for offset, (name, fn) in enumerate(families):
        rng = random.Random(seed + 5000 * (offset + 1))
        for _ in range(cases_each):
            cases += 1
            problem = fn(rng)
            if problem and passed:
                passed = False
                detail = f"{name}: {problem}"
    return CriterionResult(
        9, "randomized property suite", passed, cases,
        time.perf_counter() - t0, detail or "no failures",
    )


def run_all(
    seed: int = DEFAULT_SEED, max_n: Optional[int] = None
) -> list[CriterionResult]:
    return [
        check_linkage(seed=seed, max_n=max_n),
        check_restriction_mult(seed=seed, max_n=max_n),
        check_induction_mult(seed=seed, max_n=max_n),
        check_flag_oracle(seed=seed, max_n=max_n),
        check_multiset_identity(max_n=max_n),
        check_mass_law(max_n=max_n),
        check_orbit_maximality(seed=seed, max_n=max_n),
        check_thick_dim(max_n=max_n),
        check_property_suite(seed=seed),
    ]
