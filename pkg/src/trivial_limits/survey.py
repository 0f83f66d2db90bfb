"""Randomized invariant sweep.

Each invariant is a function ``check(curve, rng) -> bool``.  Trial seeds are
derived from (root seed, curve index, invariant index, trial index), so the
report does not depend on how trials are scheduled across workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .classification import (
    is_globally_generated,
    is_limit_of_trivial,
    is_simple,
    lemma1_h0_formula,
    simple_decomposition,
    split_criterion,
)
from .curve import INFINITY, Curve, Divisor, canonical_divisor, hyperelliptic_divisor, new_curve
from .errors import IrrationalSupportError
from .pairing import (
    Differential,
    h1,
    koszul_pair,
    koszul_pair_t_side,
    residue_sum,
    u2e_functional,
)
from .picard import (
    class_of,
    hyperelliptic_class,
    identity,
    is_power_of_H,
    random_class,
    random_representative,
)
from .riemann_roch import FunctionElement, function_divisor, h0, rr_space
from .sampling import (
    random_divisor,
    random_effective,
    random_element,
    random_fibre,
    random_place,
    random_rational_function,
    random_simple_divisor,
    random_split_x_poly,
    random_x_poly,
)
from .ff import poly_gcd

DEFAULT_P = 101
DEFAULT_CURVES = {
    2: [5, 1, 3, 0, 0, 1],
    3: [2, 4, 2, 0, 0, 0, 0, 1],
    4: [1, 2, 2, 0, 0, 0, 0, 0, 0, 1],
}


def default_curve(g: int, p: int = DEFAULT_P) -> Curve:
    if p == DEFAULT_P and g in DEFAULT_CURVES:
        return new_curve(p, DEFAULT_CURVES[g])
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([p, g])))
    while True:
        f = [int(v) for v in rng.integers(0, p, size=2 * g + 1)] + [1]
        try:
            return new_curve(p, f)
        except ValueError:
            continue


# ---------------------------------------------------------------- invariants


def check_riemann_roch(curve: Curve, rng) -> bool:
    g = curve.g
    D = random_divisor(curve, rng, int(rng.integers(-3, 3 * g + 1)))
    return h0(curve, D) - h0(curve, canonical_divisor(curve) - D) == D.degree - g + 1


def check_duality_wiring(curve: Curve, rng) -> bool:
    D = random_divisor(curve, rng, int(rng.integers(-3, 3 * curve.g + 1)))
    return h0(curve, D) == h1(curve, D) + D.degree - curve.g + 1


def check_monotonicity(curve: Curve, rng) -> bool:
    D = random_divisor(curve, rng, int(rng.integers(-2, 2 * curve.g + 1)))
    P = random_place(curve, rng)
    a, b = h0(curve, D), h0(curve, D + Divisor.point(P))
    return a <= b <= a + 1


def check_clifford(curve: Curve, rng) -> bool:
    D = random_effective(curve, rng, int(rng.integers(0, 2 * curve.g - 1)))
    if h0(curve, canonical_divisor(curve) - D) == 0:
        return True
    return 2 * (h0(curve, D) - 1) <= D.degree


def check_lemma1_formula(curve: Curve, rng) -> bool:
    g = curve.g
    k = int(rng.integers(0, g + 1))
    D = random_simple_divisor(curve, rng, int(rng.integers(0, g - k + 1)))
    return h0(curve, hyperelliptic_divisor(k) + D) == lemma1_h0_formula(curve, k, D)


def _fibres_plus_simple(curve: Curve, rng) -> tuple[int, Divisor, Divisor]:
    g = curve.g
    k = int(rng.integers(0, g // 2 + 1))
    D = random_simple_divisor(curve, rng, int(rng.integers(0, g - 2 * k + 1)))
    L = D
    for _ in range(k):
        L = L + random_fibre(curve, rng)
    return k, D, L


def check_lemma1_sieve(curve: Curve, rng) -> bool:
    """Globally generated classes of degree <= g are exactly the powers of H."""
    if rng.integers(0, 2):
        _, _, L = _fibres_plus_simple(curve, rng)
    else:
        L = random_effective(curve, rng, int(rng.integers(0, curve.g + 1)))
    gg = is_globally_generated(curve, L)
    power = is_power_of_H(class_of(curve, L)) is not None
    return gg == power


def check_decomposition(curve: Curve, rng) -> bool:
    k, D, L = _fibres_plus_simple(curve, rng)
    dec = simple_decomposition(curve, L)
    if dec.k != k or class_of(curve, dec.D) != class_of(curve, D):
        return False
    again = simple_decomposition(curve, dec.D + hyperelliptic_divisor(dec.k))
    return again.k == dec.k and again.D == dec.D


def check_linear_equivalence(curve: Curve, rng) -> bool:
    D = random_divisor(curve, rng, int(rng.integers(-2, curve.g + 2)))
    E = random_effective(curve, rng, int(rng.integers(1, curve.g + 2)))
    try:
        h = random_rational_function(curve, rng, E)
    except IrrationalSupportError:
        return True
    return class_of(curve, D + function_divisor(curve, h)) == class_of(curve, D)


def _random_class_for_limits(curve: Curve, rng):
    if rng.integers(0, 3) == 0:
        return hyperelliptic_class(curve, int(rng.integers(0, curve.g + 1)))
    return random_class(curve, int(rng.integers(0, curve.g + 3)), rng)


def check_limit_invariance(curve: Curve, rng) -> bool:
    L = _random_class_for_limits(curve, rng)
    rep = random_representative(L, rng)
    return is_limit_of_trivial(curve, class_of(curve, rep)) == is_limit_of_trivial(curve, L)


def check_limit_coherence(curve: Curve, rng) -> bool:
    L = _random_class_for_limits(curve, rng)
    v = is_limit_of_trivial(curve, L)
    if v.is_limit and L.degree <= curve.g:
        return is_power_of_H(L) is not None
    return v.is_limit == (L.degree >= curve.g + 1 or is_power_of_H(L) is not None)


def check_split_high_degree(curve: Curve, rng) -> bool:
    L = random_class(curve, int(rng.integers(curve.g, 2 * curve.g + 2)), rng)
    return split_criterion(curve, L, rng) is True


def check_group_axioms(curve: Curve, rng) -> bool:
    a, b, c = (random_class(curve, int(rng.integers(-2, 3)), rng) for _ in range(3))
    e = identity(curve)
    return (a + b) + c == a + (b + c) and a + e == a and a - a == e and a + b == b + a


def check_residue_theorem(curve: Curve, rng) -> bool:
    D = random_effective(curve, rng, int(rng.integers(1, 2 * curve.g + 3)))
    basis = rr_space(curve, D).elements
    omega = Differential(random_element(curve, basis, rng))
    return residue_sum(curve, omega) == 0


def _random_koszul_data(curve: Curve, rng):
    """D_L, s, t, w with rational zeros of s and t and no common zero."""
    p = curve.p
    for _ in range(50):
        m = int(rng.integers(2, curve.g + 2))
        extra = random_effective(curve, rng, int(rng.integers(0, 2)))
        D_L = Divisor.point(INFINITY, m) + extra
        try:
            s = random_rational_function(curve, rng, D_L)
            t = random_rational_function(curve, rng, D_L)
        except (IrrationalSupportError, ValueError):
            continue
        zs = function_divisor(curve, s) + D_L
        zt = function_divisor(curve, t) + D_L
        if any(zt[P] for P in zs.support()):
            continue
        dual = rr_space(curve, canonical_divisor(curve) + 2 * D_L).elements
        w = Differential(random_element(curve, dual, rng))
        return D_L, s, t, w
    raise IrrationalSupportError("no admissible Koszul data found")


def check_cover_antisymmetry(curve: Curve, rng) -> bool:
    D_L, s, t, w = _random_koszul_data(curve, rng)
    return koszul_pair(curve, D_L, s, t, w) == -koszul_pair_t_side(curve, D_L, s, t, w)


def random_u2e_triple(curve: Curve, rng, k: int):
    """Random (s, t, u) for L = H^k: s, t in L(2k Inf) without common zero, u in L(4k Inf)."""
    p = curve.p
    D_L = hyperelliptic_divisor(k)
    while True:
        ds = int(rng.integers(0, k + 1))
        s = random_split_x_poly(curve, rng, ds)
        dt = k if ds < k else int(rng.integers(0, k + 1))
        t = random_x_poly(p, rng, dt)
        if poly_gcd(s, t).degree == 0:
            break
    u_basis = rr_space(curve, 2 * D_L).elements
    u = random_element(curve, u_basis, rng)
    return D_L, FunctionElement.from_x_poly(s), FunctionElement.from_x_poly(t), u


def check_u2e_vanishing(curve: Curve, rng) -> bool:
    k = int(rng.integers(1, curve.g // 2 + 1))
    D_L, s, t, u = random_u2e_triple(curve, rng, k)
    report = u2e_functional(curve, D_L, s, t, u)
    return report.splits and all(v == 0 for v in report.values)


INVARIANTS = {
    "riemann_roch": check_riemann_roch,
    "duality_wiring": check_duality_wiring,
    "monotonicity": check_monotonicity,
    "clifford": check_clifford,
    "lemma1_formula": check_lemma1_formula,
    "lemma1_sieve": check_lemma1_sieve,
    "decomposition_uniqueness": check_decomposition,
    "linear_equivalence": check_linear_equivalence,
    "limit_invariance": check_limit_invariance,
    "limit_coherence": check_limit_coherence,
    "split_high_degree": check_split_high_degree,
    "group_axioms": check_group_axioms,
    "residue_theorem": check_residue_theorem,
    "cover_antisymmetry": check_cover_antisymmetry,
    "u2e_vanishing": check_u2e_vanishing,
}


def trial_rng(seed: int, curve_index: int, invariant_index: int, trial: int) -> np.random.Generator:
    ss = np.random.SeedSequence([seed, curve_index, invariant_index, trial])
    return np.random.Generator(np.random.Philox(ss))


def _run_block(args) -> tuple[int, int, list[int]]:
    p, f, ci, ii, name, seed, trials = args
    curve = new_curve(p, f)
    check = INVARIANTS[name]
    passed, failures = 0, []
    for trial in range(trials):
        if check(curve, trial_rng(seed, ci, ii, trial)):
            passed += 1
        else:
            failures.append(trial)
    return passed, trials, failures


def run_survey(
    seed: int = 42,
    genera=(2, 3, 4),
    p: int = DEFAULT_P,
    trials: int = 200,
    invariants=None,
    workers: int | None = None,
) -> dict:
    names = list(invariants or INVARIANTS)
    unknown = [n for n in names if n not in INVARIANTS]
    if unknown:
        raise ValueError(f"unknown invariants: {unknown}")
    if workers is None:
        workers = int(os.environ.get("TRIVIAL_LIMITS_WORKERS", "1"))
    curves = [default_curve(g, p) for g in genera]
    jobs = []
    for ci, curve in enumerate(curves):
        for name in names:
            ii = list(INVARIANTS).index(name)
            jobs.append((curve.p, curve.f.to_list(), ci, ii, name, seed, trials))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_block, jobs))
    else:
        results = [_run_block(j) for j in jobs]
    rows = []
    for job, (passed, total, failures) in zip(jobs, results):
        _, _, ci, _, name, _, _ = job
        rows.append({
            "genus": curves[ci].g,
            "curve": curves[ci].to_json(),
            "invariant": name,
            "trials": total,
            "passed": passed,
            "violations": total - passed,
            "failing_trials": failures,
        })
    return {
        "seed": seed,
        "p": p,
        "trials_per_invariant": trials,
        "rows": rows,
        "total_violations": sum(r["violations"] for r in rows),
    }


def render_survey(report: dict) -> str:
    lines = [f"survey seed={report['seed']} p={report['p']} trials={report['trials_per_invariant']}"]
    for r in report["rows"]:
        lines.append(f"  g={r['genus']}  {r['invariant']:<26} {r['passed']:>5}/{r['trials']:<5} violations={r['violations']}")
    lines.append(f"total violations: {report['total_violations']}")
    return "\n".join(lines)
