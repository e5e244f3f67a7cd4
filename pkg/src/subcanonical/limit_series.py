"""Limit canonical series on a curve ``X = C u E`` with an elliptic tail.

``C`` has genus ``g-1``, ``E`` is elliptic, they meet at a node ``q`` and
``p`` is a marked point on ``E``. Everything about ``Pic^0(E)`` that matters
here is the order of the class ``p - q``, so a divisor ``b q + c p`` of degree
``2g-2`` is linearly equivalent to ``(2g-2) q`` exactly when that order
divides ``c``.

Aspect sequences (at ``q`` and ``p`` on ``E``) are plain integer tuples: they
belong to a ``g^{g-1}_{2g-2}`` on a genus-1 curve, so the curve-level
invariants of :class:`~subcanonical.sequences.RamificationSequence` do not
apply to them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple, Optional, Sequence

from .errors import InvariantViolation, PreconditionError, ValidationError
from .sequences import Parity, RamificationSequence, parity, vanishing_from_ramification


@dataclass(frozen=True)
class TorsionClass:
    """Order of ``O_E(p - q)`` in ``Pic^0(E)``."""

    order: int

    def __post_init__(self) -> None:
        if isinstance(self.order, bool) or not isinstance(self.order, int) or self.order < 1:
            raise ValidationError(f"torsion order must be a positive integer, got {self.order!r}")

    def kills(self, c: int) -> bool:
        """``c (p - q) ~ 0``."""
        return c % self.order == 0


@dataclass(frozen=True)
class LimitSeriesProblem:
    total_genus: int
    alpha_q: RamificationSequence
    torsion_order: int

    def __post_init__(self) -> None:
        g = self.total_genus
        if g < 3:
            raise ValidationError(f"total genus must be at least 3, got {g}")
        if self.alpha_q.genus != g - 1:
            raise ValidationError(
                f"ramification at the node must have genus g-1 = {g - 1}, "
                f"got genus {self.alpha_q.genus}"
            )
        if self.alpha_q.values[-1] != g - 2:
            raise ValidationError(
                f"node must be subcanonical on C: last entry {self.alpha_q.values[-1]} != g-2"
            )
        TorsionClass(self.torsion_order)

    @property
    def torsion(self) -> TorsionClass:
        return TorsionClass(self.torsion_order)

    @classmethod
    def from_kind(
        cls, g: int, alpha_q: Sequence[int], kind: Literal["full", "half"]
    ) -> "LimitSeriesProblem":
        """``full`` means order ``2g-2``, ``half`` means order ``g-1``."""
        orders = {"full": 2 * g - 2, "half": g - 1}
        if kind not in orders:
            raise ValidationError(f"torsion kind must be 'full' or 'half', got {kind!r}")
        return cls(g, RamificationSequence.of(alpha_q), orders[kind])


@dataclass(frozen=True)
class AspectRamification:
    """Ramification of the ``E``-aspect at the node and at the marked point."""

    r: int
    d_deg: int
    at_q: tuple[int, ...]
    at_p: tuple[int, ...]

    def __post_init__(self) -> None:
        for name, seq in (("at_q", self.at_q), ("at_p", self.at_p)):
            _check_aspect(seq, self.r, self.d_deg, name)


def _check_aspect(seq: Sequence[int], r: int, d_deg: int, name: str) -> None:
    if len(seq) != r + 1:
        raise ValidationError(f"{name} must have {r + 1} entries, got {len(seq)}")
    if seq[0] < 0:
        raise ValidationError(f"{name} must start at a nonnegative value")
    if any(b < a for a, b in zip(seq, seq[1:])):
        raise ValidationError(f"{name} must be nondecreasing: {tuple(seq)}")
    if seq[-1] > d_deg - r:
        raise ValidationError(f"{name} entry {seq[-1]} exceeds d - r = {d_deg - r}")


def c_aspect_ramification(alpha_KC_q: RamificationSequence) -> tuple[int, ...]:
    """Ramification at ``q`` of the ``C``-aspect ``|K_C(2q)|`` given that of ``K_C``."""
    return (0,) + tuple(a + 1 for a in alpha_KC_q.values)


def beta_at_node(problem: LimitSeriesProblem) -> tuple[int, ...]:
    """Ramification of the ``E``-aspect at the node, forced by refinedness."""
    g = problem.total_genus
    alpha = problem.alpha_q.values
    middle = tuple(g - 2 - alpha[g - 2 - j] for j in range(1, g - 1))
    return (0,) + middle + (g - 1,)


class GammaResult(NamedTuple):
    values: tuple[int, ...]
    exceptional_index: Optional[int]


def gamma_at_marked_point(problem: LimitSeriesProblem) -> GammaResult:
    """Ramification at ``p`` of the unique refined limit with ``p`` subcanonical.

    Generically ``gamma = (0, alpha_0, ..., alpha_{g-3}, g-1)``. When ``p - q``
    has order ``g-1`` and some ``alpha_i = g-3-i`` with ``i = g-3`` or
    ``alpha_{i+1} > alpha_i``, entry ``i+1`` is raised by one; ``i`` is then
    returned as the exceptional index.
    """
    g = problem.total_genus
    n = problem.torsion_order
    if n not in (2 * g - 2, g - 1):
        raise PreconditionError(
            f"torsion order must be 2g-2 = {2 * g - 2} or g-1 = {g - 1}, got {n}"
        )
    alpha = problem.alpha_q.values
    gamma = [0] + [alpha[i] for i in range(g - 2)] + [g - 1]
    exceptional = None
    if n == g - 1:
        hits = [
            i for i in range(g - 2)
            if alpha[i] == g - 3 - i and (i == g - 3 or alpha[i + 1] > alpha[i])
        ]
        if len(hits) > 1:
            raise InvariantViolation(f"several exceptional indices {hits} for alpha={alpha}")
        if hits:
            exceptional = hits[0]
            gamma[exceptional + 1] += 1
    return GammaResult(tuple(gamma), exceptional)


def aspect(problem: LimitSeriesProblem) -> AspectRamification:
    g = problem.total_genus
    return AspectRamification(
        g - 1, 2 * g - 2, beta_at_node(problem), gamma_at_marked_point(problem).values
    )


@dataclass(frozen=True)
class CrudeLimitVerdict:
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"passed": self.passed, "violations": list(self.violations)}


def check_crude_limit(
    g: int,
    gamma_p: Sequence[int],
    torsion: TorsionClass,
    alpha_q: RamificationSequence,
) -> CrudeLimitVerdict:
    """Necessary conditions on a crude limit with ``p`` subcanonical on ``E``.

    Every failed condition is listed; an empty list means the data pass.
    """
    gamma = tuple(gamma_p)
    if len(gamma) != g or gamma[-1] != g - 1:
        raise ValidationError(f"gamma must have {g} entries ending in g-1 = {g - 1}")
    if alpha_q.genus != g - 1:
        raise ValidationError(f"alpha_q must have genus g-1 = {g - 1}")
    alpha = alpha_q.values
    problems = []
    if (2 * g - 2) % torsion.order:
        problems.append(f"torsion: order {torsion.order} does not divide 2g-2 = {2 * g - 2}")
    if alpha[-1] != g - 2:
        problems.append(f"node not subcanonical on C: alpha_{g - 2} = {alpha[-1]} != {g - 2}")
    if gamma[0] != 0:
        problems.append(f"gamma_0 = {gamma[0]} != 0")

    failing = [i for i in range(1, g - 1) if alpha[i - 1] < gamma[i]]
    if torsion.order == 2 * g - 2:
        for i in failing:
            problems.append(
                f"inequality at i={i}: alpha_{i - 1} = {alpha[i - 1]} < gamma_{i} = {gamma[i]}"
            )
    elif torsion.order == g - 1:
        allowed = [
            i for i in failing if gamma[i] + i == g - 1 and alpha[i - 1] == gamma[i] - 1
        ]
        excess = [i for i in failing if i not in allowed] + allowed[1:]
        for i in excess:
            problems.append(
                f"inequality at i={i}: alpha_{i - 1} = {alpha[i - 1]} < gamma_{i} = {gamma[i]}"
            )
    return CrudeLimitVerdict(tuple(problems))


def eh_star(beta: Sequence[int], gamma: Sequence[int], g: int) -> bool:
    """``g-2 <= beta_{g-1-j} + gamma_j <= g-1`` for every ``j``."""
    if len(beta) != g or len(gamma) != g:
        raise ValidationError(f"beta and gamma must both have {g} entries")
    return all(g - 2 <= beta[g - 1 - j] + gamma[j] <= g - 1 for j in range(g))


def divisor_relation_holds(b: int, c: int, g: int, torsion: TorsionClass) -> bool:
    """``b q + c p ~ (2g-2) q`` on ``E``."""
    if b < 0 or c < 0:
        raise ValidationError("vanishing orders must be nonnegative")
    return b + c == 2 * g - 2 and torsion.kills(c)


def rho_adjusted(g: int, r: int, d_deg: int, alpha: Sequence[int]) -> int:
    """Brill-Noether number lowered by imposed ramification."""
    if len(alpha) != r + 1:
        raise ValidationError(f"ramification condition must have r+1 = {r + 1} entries")
    return (r + 1) * (d_deg - r) - r * g - sum(alpha)


@dataclass(frozen=True)
class ExpectedDimensions:
    dim_G_lower: int
    dim_D: int
    dim_B: int

    def as_dict(self) -> dict:
        return {"dim_G_lower": self.dim_G_lower, "dim_D": self.dim_D, "dim_B": self.dim_B}


def expected_dimensions(g: int) -> ExpectedDimensions:
    """Dimension count behind the smoothing argument.

    ``dim_B`` is the versal deformation space of the pointed curve, ``dim_G_lower``
    the lower bound for the space of limits with ``p`` subcanonical, and
    ``dim_D`` the boundary locus of curves ``C u E`` (subcanonical pointed
    genus ``g-1`` curve plus an elliptic curve with a torsion point).
    """
    if g < 3:
        raise PreconditionError(f"genus must be at least 3, got {g}")
    dim_B = 3 * g - 2
    alpha = (0,) * (g - 1) + (g - 1,)
    dim_G_lower = dim_B + rho_adjusted(g, g - 1, 2 * g - 2, alpha)
    subcanonical_locus = (3 * (g - 1) - 2) - ((g - 1) - 1)
    dim_D = subcanonical_locus + 1
    return ExpectedDimensions(dim_G_lower, dim_D, dim_B)


def combine_theta_parity(parities: Sequence[Parity]) -> Parity:
    """Parity of a theta characteristic assembled from compact-type components."""
    if not parities:
        raise ValidationError("need at least one parity")
    odd = 0
    for p in parities:
        if p not in ("odd", "even"):
            raise ValidationError(f"parity must be 'odd' or 'even', got {p!r}")
        odd += p == "odd"
    return "odd" if odd % 2 else "even"


def elliptic_theta_parity(torsion: TorsionClass, multiple: int) -> Parity:
    """Parity of the degree-0 theta characteristic ``O_E(multiple (p - q))``.

    Odd exactly when the class is trivial (then it is effective).
    """
    return "odd" if torsion.kills(multiple) else "even"


@dataclass(frozen=True)
class LimitReport:
    problem: LimitSeriesProblem
    c_aspect: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: GammaResult
    star: bool
    crude: CrudeLimitVerdict
    rho: int
    dimensions: ExpectedDimensions
    smoothed_parity: Optional[Parity]

    def as_dict(self) -> dict:
        g = self.problem.total_genus
        return {
            "genus": g,
            "alpha_q": list(self.problem.alpha_q.values),
            "torsion_order": self.problem.torsion_order,
            "c_aspect_at_q": list(self.c_aspect),
            "beta": list(self.beta),
            "gamma": list(self.gamma.values),
            "exceptional_index": self.gamma.exceptional_index,
            "eh_star": self.star,
            "crude_limit": self.crude.as_dict(),
            "rho": self.rho,
            "expected_dimensions": self.dimensions.as_dict(),
            "smoothed_parity": self.smoothed_parity,
        }


def analyse(problem: LimitSeriesProblem) -> LimitReport:
    """Run every construction and check on one problem."""
    g = problem.total_genus
    beta = beta_at_node(problem)
    gamma = gamma_at_marked_point(problem)
    condition = (0,) * (g - 1) + (g - 1,)
    # parity of the smoothed point: theta on C from the node, theta on E from torsion
    v_q = vanishing_from_ramification(problem.alpha_q)
    smoothed = combine_theta_parity(
        [parity(v_q), elliptic_theta_parity(problem.torsion, g - 1)]
    )
    return LimitReport(
        problem=problem,
        c_aspect=c_aspect_ramification(problem.alpha_q),
        beta=beta,
        gamma=gamma,
        star=eh_star(beta, gamma.values, g),
        crude=check_crude_limit(g, gamma.values, problem.torsion, problem.alpha_q),
        rho=rho_adjusted(g, g - 1, 2 * g - 2, condition),
        dimensions=expected_dimensions(g),
        smoothed_parity=smoothed,
    )
