"""Line-bundle cohomology on P^2 and the dimension chase for indecomposable
limits on smooth plane curves.

Setting: C a smooth plane curve of degree d, Z the complete intersection of
two curves of degree k missing C, and E a general extension
0 -> O(k) -> E -> I_Z(-k) -> 0 on P^2.  Every vanishing needed reduces to
h^i(P^2, O(n)); the certificate records the exact-sequence bounds it uses
rather than assuming the zeros.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import DomainError

ASSUMPTIONS = (
    "Z is the complete intersection of two plane curves of degree k with C and Z disjoint",
    "E is a general extension of I_Z(-k) by O(k), hence a limit of the trivial bundle on P^2",
    "the restriction of E to C is then a limit of the trivial bundle on C",
)


def hi_p2(i: int, n: int) -> int:
    if i == 0:
        return comb(n + 2, 2) if n >= 0 else 0
    if i == 1:
        return 0
    if i == 2:
        return hi_p2(0, -n - 3)
    raise DomainError(f"cohomological degree must be 0, 1 or 2, got {i}")


def plane_genus(d: int) -> int:
    if d < 1:
        raise DomainError("degree must be positive")
    return (d - 1) * (d - 2) // 2


def h0_plane_curve(d: int, n: int) -> int:
    """h^0(O_C(n)) from 0 -> O(n-d) -> O(n) -> O_C(n) -> 0 (H^1 of P^2 vanishes)."""
    return hi_p2(0, n) - hi_p2(0, n - d)


@dataclass(frozen=True)
class Step:
    statement: str
    lhs: int
    required: int
    passed: bool
    relation: str = "=="

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "lhs": self.lhs,
            "required": self.required,
            "relation": self.relation,
            "pass": self.passed,
        }

    def render(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.statement}: {self.lhs} {self.relation} {self.required}"


@dataclass(frozen=True)
class Certificate:
    d: int
    k: int
    genus: int
    steps: tuple[Step, ...]
    verdict: bool
    destabilizing_degree: int
    assumptions: tuple[str, ...] = field(default=ASSUMPTIONS)

    def first_failure(self, start: int = 1) -> int | None:
        """1-based index of the first failing step at or after ``start``."""
        for i, s in enumerate(self.steps[start - 1 :], start=start):
            if not s.passed:
                return i
        return None

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "genus": self.genus,
            "destabilizing_degree": self.destabilizing_degree,
            "steps": [s.to_json() for s in self.steps],
            "assumptions": list(self.assumptions),
            "verdict": self.verdict,
        }

    def render(self) -> str:
        lines = [f"plane curve of degree {self.d}, genus {self.genus}, k = {self.k}"]
        lines += [f"  ({i}) {s.render()}" for i, s in enumerate(self.steps, start=1)]
        lines += [f"  assume: {a}" for a in self.assumptions]
        lines.append(f"verdict: {'indecomposable limit exists' if self.verdict else 'not certified'}")
        return "\n".join(lines)


def prop4_certificate(d: int, k: int) -> Certificate:
    if d < 1 or k < 1:
        raise DomainError("d and k must be positive")
    steps = []

    steps.append(Step(f"window 0 < k < d/4: 4k = {4 * k} < d = {d}", 4 * k, d, 4 * k < d, "<"))

    # Koszul resolution 0 -> O(-2k) -> O(-k)^2 -> I_Z -> 0, twisted by n = d-2k-3
    n = d - 2 * k - 3
    h2_top = hi_p2(2, d - 4 * k - 3)
    steps.append(Step(f"h^2(O(d-4k-3)) = h^2(O({d - 4 * k - 3}))", h2_top, 0, h2_top == 0))

    # H^1(O(n-k))^2 -> H^1(I_Z(n)) -> H^2(O(n-2k))
    bound_iz = 2 * hi_p2(1, n - k) + h2_top
    steps.append(Step(f"h^1(I_Z(d-2k-3)) = h^1(I_Z({n})) <= 2 h^1(O({n - k})) + h^2(O({n - 2 * k}))",
                      bound_iz, 0, bound_iz == 0))

    # 0 -> O(d-3) -> E(d-k-3) -> I_Z(d-2k-3) -> 0
    bound_e = hi_p2(1, d - 3) + bound_iz
    steps.append(Step(f"h^1(E(d-k-3)) <= h^1(O({d - 3})) + h^1(I_Z({n}))", bound_e, 0, bound_e == 0))

    # 0 -> E(k-d) -> E(k) -> E|C(k) -> 0 with h^1(E(k-d)) = h^1(E(d-k-3)) by duality;
    # h^0(E(k)) = h^0(O(2k)) + h^0(I_Z) and h^0(I_Z) = 0 since Z is nonempty
    h0_ek = hi_p2(0, 2 * k)
    lhs = h0_ek + bound_e
    rhs = h0_plane_curve(d, 2 * k)
    steps.append(Step(
        f"h^0(E|C(k)) <= h^0(E(k)) + h^1(E(d-k-3)) vs h^0(O_C(2k)) = h^0(O_P2({2 * k})) - h^0(O_P2({2 * k - d}))",
        lhs, rhs, lhs == rhs and 2 * k < d,
    ))

    prior = all(s.passed for s in steps)
    steps.append(Step(
        "h^0(E|C(k)) = h^0(L^2) with L = O_C(k): the extension is nontrivial, E|C indecomposable",
        int(prior), 1, prior,
    ))
    return Certificate(d, k, plane_genus(d), tuple(steps), all(s.passed for s in steps), d * k)
