"""Vanishing, ramification and gap encodings of a point on a curve.

A point ``p`` on a smooth curve of genus ``g`` carries three equivalent pieces
of discrete data:

* the vanishing sequence ``0 = a_0 < a_1 < ... < a_{g-1} <= 2g-2`` of orders
  of vanishing of holomorphic differentials at ``p``;
* the ramification sequence ``alpha_k = a_k - k``;
* the Weierstrass gap set ``{a_k + 1}``.

All three are immutable, carry their genus explicitly and validate on
construction, so every function below may assume consistent input.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Optional

from .errors import PreconditionError, ValidationError

Parity = Literal["odd", "even"]
Component = Literal["hyperelliptic", "odd", "even", "unclassified"]


def _as_int_tuple(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError(f"{what}: entries must be integers, got {v!r}")
        out.append(v)
    return tuple(out)


def _check_genus(genus: int, what: str) -> None:
    if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
        raise ValidationError(f"{what}: genus must be a nonnegative integer, got {genus!r}")


@dataclass(frozen=True)
class VanishingSequence:
    """Strictly increasing orders ``a_0 < ... < a_{g-1}`` with ``a_0 = 0``.

    Genus 0 (the empty sequence) is allowed so that a rational base curve can
    be described uniformly with other base curves.
    """

    genus: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_genus(self.genus, "vanishing sequence")
        values = _as_int_tuple(self.values, "vanishing sequence")
        object.__setattr__(self, "values", values)
        g = self.genus
        if len(values) != g:
            raise ValidationError(
                f"vanishing sequence has {len(values)} entries but genus is {g}"
            )
        if g == 0:
            return
        if values[0] != 0:
            raise ValidationError(f"vanishing sequence must start at 0, got {values[0]}")
        for a, b in zip(values, values[1:]):
            if b <= a:
                raise ValidationError(f"vanishing sequence not strictly increasing: {values}")
        if values[-1] > 2 * g - 2:
            raise ValidationError(
                f"vanishing order {values[-1]} exceeds 2g-2 = {2 * g - 2}"
            )

    @classmethod
    def of(cls, values: Iterable[int]) -> "VanishingSequence":
        """Build a sequence whose genus is its length."""
        values = tuple(values)
        return cls(len(values), values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return self.genus

    def __str__(self) -> str:
        return ",".join(map(str, self.values))


@dataclass(frozen=True)
class RamificationSequence:
    """Nondecreasing ``alpha_0 <= ... <= alpha_{g-1}`` with ``alpha_0 = 0``."""

    genus: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_genus(self.genus, "ramification sequence")
        values = _as_int_tuple(self.values, "ramification sequence")
        object.__setattr__(self, "values", values)
        g = self.genus
        if len(values) != g:
            raise ValidationError(
                f"ramification sequence has {len(values)} entries but genus is {g}"
            )
        if g == 0:
            return
        if values[0] != 0:
            raise ValidationError(f"ramification sequence must start at 0, got {values[0]}")
        for a, b in zip(values, values[1:]):
            if b < a:
                raise ValidationError(f"ramification sequence not nondecreasing: {values}")
        if values[-1] > g - 1:
            raise ValidationError(f"ramification entry {values[-1]} exceeds g-1 = {g - 1}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "RamificationSequence":
        values = tuple(values)
        return cls(len(values), values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return self.genus

    def __str__(self) -> str:
        return ",".join(map(str, self.values))


@dataclass(frozen=True)
class GapSet:
    """The ``g`` Weierstrass gaps at a point, stored sorted."""

    genus: int
    gaps: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_genus(self.genus, "gap set")
        raw = _as_int_tuple(self.gaps, "gap set")
        gaps = tuple(sorted(set(raw)))
        if len(gaps) != len(raw):
            raise ValidationError(f"gap set has repeated entries: {raw}")
        object.__setattr__(self, "gaps", gaps)
        g = self.genus
        if len(gaps) != g:
            raise ValidationError(f"gap set has {len(gaps)} gaps but genus is {g}")
        if g == 0:
            return
        if gaps[0] < 1:
            raise ValidationError(f"gaps must be positive, got {gaps[0]}")
        if gaps[0] != 1:
            raise ValidationError("1 must be a gap in a gap set of positive genus")
        if gaps[-1] > 2 * g - 1:
            raise ValidationError(f"gap {gaps[-1]} exceeds 2g-1 = {2 * g - 1}")

    @classmethod
    def of(cls, gaps: Iterable[int]) -> "GapSet":
        gaps = tuple(gaps)
        return cls(len(gaps), gaps)

    def __contains__(self, n: object) -> bool:
        return n in self.gaps

    def __iter__(self):
        return iter(self.gaps)

    def __len__(self) -> int:
        return self.genus

    def __str__(self) -> str:
        return ",".join(map(str, self.gaps))


def ramification_from_vanishing(v: VanishingSequence) -> RamificationSequence:
    return RamificationSequence(v.genus, tuple(a - k for k, a in enumerate(v.values)))


def vanishing_from_ramification(r: RamificationSequence) -> VanishingSequence:
    return VanishingSequence(r.genus, tuple(alpha + k for k, alpha in enumerate(r.values)))


def gaps_from_vanishing(v: VanishingSequence) -> GapSet:
    return GapSet(v.genus, tuple(a + 1 for a in v.values))


def vanishing_from_gaps(s: GapSet) -> VanishingSequence:
    return VanishingSequence(s.genus, tuple(n - 1 for n in s.gaps))


def weight(r: RamificationSequence) -> int:
    """Weierstrass weight: the sum of the ramification sequence."""
    return sum(r.values)


def is_subcanonical(v: VanishingSequence) -> bool:
    """A differential vanishing to order 2g-2 at the point exists."""
    g = v.genus
    return g >= 1 and v.values[-1] == 2 * g - 2


def _require_subcanonical(v: VanishingSequence) -> None:
    if not is_subcanonical(v):
        raise PreconditionError(
            f"vanishing sequence {v} is not subcanonical (last entry must be "
            f"2g-2 = {2 * v.genus - 2})"
        )


def theta_h0(v: VanishingSequence) -> int:
    """h^0 of the theta characteristic O((g-1)p) at a subcanonical point.

    This is the number of vanishing orders that are at least ``g - 1``.
    """
    _require_subcanonical(v)
    return sum(1 for a in v.values if a >= v.genus - 1)


def parity(v: VanishingSequence) -> Parity:
    return "odd" if theta_h0(v) % 2 else "even"


def hyperelliptic_vanishing(g: int) -> VanishingSequence:
    return VanishingSequence(g, tuple(range(0, 2 * g - 1, 2)))


def classify_component(v: VanishingSequence) -> Component:
    """Component of the subcanonical locus that the sequence belongs to.

    The three-way split is only meaningful from genus 4 on; below that the
    point is reported as ``"unclassified"`` (its parity is still available
    through :func:`parity`).
    """
    _require_subcanonical(v)
    if v.genus < 4:
        return "unclassified"
    if v == hyperelliptic_vanishing(v.genus):
        return "hyperelliptic"
    return parity(v)


@dataclass(frozen=True)
class PointProfile:
    genus: int
    vanishing: VanishingSequence
    ramification: RamificationSequence
    gaps: GapSet
    weight: int
    subcanonical: bool
    theta_h0: Optional[int]
    parity: Optional[Parity]
    component: Optional[Component]

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "vanishing": list(self.vanishing.values),
            "ramification": list(self.ramification.values),
            "gaps": list(self.gaps.gaps),
            "weight": self.weight,
            "theta_h0": self.theta_h0,
            "parity": self.parity,
            "subcanonical": self.subcanonical,
            "component": self.component,
        }


def profile(v: VanishingSequence) -> PointProfile:
    """Collect every invariant of a point from its vanishing sequence.

    Theta data and the component are ``None`` for non-subcanonical points,
    where the theta characteristic ``O((g-1)p)`` does not exist.
    """
    r = ramification_from_vanishing(v)
    sub = is_subcanonical(v)
    return PointProfile(
        genus=v.genus,
        vanishing=v,
        ramification=r,
        gaps=gaps_from_vanishing(v),
        weight=weight(r),
        subcanonical=sub,
        theta_h0=theta_h0(v) if sub else None,
        parity=parity(v) if sub else None,
        component=classify_component(v) if sub else None,
    )
