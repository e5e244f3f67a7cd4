"""Subcanonical ramification points of cyclic covers.

A ``d``-sheeted cyclic cover ``C -> B`` of a genus ``h`` curve, totally
ramified at ``p`` over ``q``, splits the pushforward of the canonical sheaf
of ``C`` into eigen-summands. When the summands are controlled by the
vanishing sequence of ``B`` at ``q`` (always for double covers; for higher
degree when ``q`` is itself subcanonical) the vanishing sequence at ``p`` is
read off residue class by residue class. Only those combinatorial rules are
modelled here, not the covers themselves.

Existence of the cover also needs enough distinct branch points for a
Bertini argument (at least ``2h + 1``). That is a geometric side condition
and is not enforced; the bounds ``g >= 3h`` (double covers) and
``ell >= (2h + 1) / d`` (higher degree) are.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Union

from .errors import InvariantViolation, PreconditionError, ValidationError
from .sequences import PointProfile, VanishingSequence, profile


def rh_genus(d: int, h: int, deg_D: int) -> int:
    """Genus of a ``d``-sheeted cyclic cover of a genus-``h`` curve.

    Riemann-Hurwitz for a cover totally ramified over the ``deg_D`` points of
    the branch divisor: ``2g - 2 = d(2h - 2) + (d - 1) deg_D``.
    """
    if d < 2:
        raise ValidationError(f"number of sheets must be at least 2, got {d}")
    if h < 0:
        raise ValidationError(f"base genus must be nonnegative, got {h}")
    if deg_D < 0:
        raise ValidationError(f"branch divisor degree must be nonnegative, got {deg_D}")
    if deg_D % d:
        raise ValidationError(f"branch divisor degree {deg_D} is not divisible by d = {d}")
    rhs = d * (2 * h - 2) + (d - 1) * deg_D
    if rhs % 2:
        raise ValidationError(f"2g-2 = {rhs} is odd; no integral genus")
    if rhs < 2:
        raise ValidationError(f"2g-2 = {rhs} gives genus below 2")
    return rhs // 2 + 1


def cyclic_genus(d: int, h: int, ell: int) -> int:
    """Genus of the cover when the line bundle ``L`` with ``L^d = O(D)`` has degree ``ell``."""
    return d * (d - 1) * ell // 2 + d * (h - 1) + 1


@dataclass(frozen=True)
class CoverSpec:
    """Data of a cyclic cover with a totally ramified marked point.

    ``base_vanishing`` is the vanishing sequence of the base curve at the
    image point (empty for a rational base).
    """

    sheets: int
    base_genus: int
    ell: int
    base_vanishing: VanishingSequence

    def __post_init__(self) -> None:
        if self.sheets < 2:
            raise ValidationError(f"number of sheets must be at least 2, got {self.sheets}")
        if self.base_genus < 0:
            raise ValidationError(f"base genus must be nonnegative, got {self.base_genus}")
        if self.ell < 1:
            raise ValidationError(f"ell must be a positive integer, got {self.ell}")
        if self.base_vanishing.genus != self.base_genus:
            raise ValidationError(
                f"base vanishing sequence has genus {self.base_vanishing.genus}, "
                f"expected {self.base_genus}"
            )

    @property
    def genus(self) -> int:
        return cyclic_genus(self.sheets, self.base_genus, self.ell)

    @property
    def branch_degree(self) -> int:
        return self.sheets * self.ell


@dataclass(frozen=True)
class CoverResult:
    total_genus: int
    vanishing: VanishingSequence
    profile: PointProfile
    sheets: int
    base_genus: int
    base_vanishing: VanishingSequence
    ell: Optional[int] = None
    construction: str = field(default="")

    def as_dict(self) -> dict:
        out = self.profile.as_dict()
        out["cover"] = {
            "construction": self.construction,
            "sheets": self.sheets,
            "base_genus": self.base_genus,
            "base_vanishing": list(self.base_vanishing.values),
            "ell": self.ell,
        }
        return out


def _finish(
    g: int,
    orders: Sequence[int],
    *,
    sheets: int,
    base: VanishingSequence,
    ell: Optional[int],
    construction: str,
) -> CoverResult:
    orders = sorted(orders)
    if len(orders) != g or orders[0] != 0 or orders[-1] != 2 * g - 2:
        raise InvariantViolation(
            f"{construction}: rule produced {orders}, expected {g} orders from 0 to {2 * g - 2}"
        )
    try:
        v = VanishingSequence(g, tuple(orders))
    except ValidationError as exc:
        raise InvariantViolation(f"{construction}: {exc}") from exc
    return CoverResult(
        total_genus=g,
        vanishing=v,
        profile=profile(v),
        sheets=sheets,
        base_genus=base.genus,
        base_vanishing=base,
        ell=ell,
        construction=construction,
    )


def double_cover_vanishing(g: int, base_vanishing: VanishingSequence) -> CoverResult:
    """Vanishing sequence at a ramification point of a double cover of genus ``g``.

    With ``A`` the base vanishing sequence at the branch point:
    ``2m + 1`` occurs iff ``m`` is in ``A``; ``2m`` occurs iff ``0 <= m <= g-1``
    and ``g - 2 - m`` is not in ``A``.
    """
    h = base_vanishing.genus
    if g < 2:
        raise PreconditionError(f"genus must be at least 2, got {g}")
    if g < 3 * h:
        raise PreconditionError(f"double cover rule needs g >= 3h; got g={g}, h={h}")
    base = set(base_vanishing.values)
    orders = [2 * m + 1 for m in base_vanishing.values]
    orders += [2 * m for m in range(g) if (g - 2 - m) not in base]
    return _finish(
        g, orders, sheets=2, base=base_vanishing, ell=None,
        construction=f"double cover of genus-{h} base",
    )


def cyclic_cover_vanishing(spec: CoverSpec) -> CoverResult:
    """Vanishing sequence at the totally ramified point of a ``d``-cyclic cover.

    Requires the image point to be subcanonical on the base. For residue
    ``i`` and ``m >= 0``, ``dm + i`` occurs iff ``m <= (d-1-i) ell - 2`` or
    ``m - (d-1-i) ell`` is a base vanishing order.
    """
    d, h, ell = spec.sheets, spec.base_genus, spec.ell
    if d * ell < 2 * h + 1:
        raise PreconditionError(f"need ell >= (2h+1)/d; got ell={ell}, h={h}, d={d}")
    if h >= 1 and spec.base_vanishing.values[-1] != 2 * h - 2:
        raise PreconditionError(
            f"base point must be subcanonical: last base vanishing order "
            f"{spec.base_vanishing.values[-1]} != 2h-2 = {2 * h - 2}"
        )
    g = spec.genus
    if g < 2:
        raise PreconditionError(f"cover genus {g} is below 2")
    base = set(spec.base_vanishing.values)
    top = 2 * g - 2
    orders = []
    for i in range(d):
        shift = (d - 1 - i) * ell
        for m in range(top // d + 1):
            n = d * m + i
            if n > top:
                break
            if m <= shift - 2 or (m - shift) in base:
                orders.append(n)
    return _finish(
        g, orders, sheets=d, base=spec.base_vanishing, ell=ell,
        construction=f"{d}-cyclic cover of genus-{h} base",
    )


class NamedConstruction(str, Enum):
    HYPERELLIPTIC = "hyperelliptic"
    BIELLIPTIC = "bielliptic"
    GENUS2_BASE_GENERAL = "genus2_base_general"
    GENUS2_BASE_WEIERSTRASS = "genus2_base_weierstrass"
    GENUS3_BASE_GENERAL = "genus3_base_general"
    GENUS3_BASE_013 = "genus3_base_013"
    GENUS3_BASE_FLEX = "genus3_base_flex"
    GENUS3_BASE_HYPERELLIPTIC = "genus3_base_hyperelliptic"
    MAX_BASE_GENERAL = "max_base_general"


# (base vanishing sequence or None for "general point of genus floor(g/3)", minimum g)
_NAMED: dict[NamedConstruction, tuple[Optional[tuple[int, ...]], int]] = {
    NamedConstruction.HYPERELLIPTIC: ((), 2),
    NamedConstruction.BIELLIPTIC: ((0,), 3),
    NamedConstruction.GENUS2_BASE_GENERAL: ((0, 1), 6),
    NamedConstruction.GENUS2_BASE_WEIERSTRASS: ((0, 2), 6),
    NamedConstruction.GENUS3_BASE_GENERAL: ((0, 1, 2), 9),
    NamedConstruction.GENUS3_BASE_013: ((0, 1, 3), 9),
    NamedConstruction.GENUS3_BASE_FLEX: ((0, 1, 4), 9),
    NamedConstruction.GENUS3_BASE_HYPERELLIPTIC: ((0, 2, 4), 9),
    NamedConstruction.MAX_BASE_GENERAL: (None, 6),
}


def named_base(name: Union[NamedConstruction, str], g: int) -> VanishingSequence:
    name = _parse_name(name)
    base, low = _NAMED[name]
    if g < low:
        raise PreconditionError(f"{name.value} construction needs g >= {low}, got {g}")
    if base is None:
        base = tuple(range(g // 3))
    return VanishingSequence.of(base)


def _parse_name(name: Union[NamedConstruction, str]) -> NamedConstruction:
    try:
        return NamedConstruction(name)
    except ValueError:
        choices = ", ".join(n.value for n in NamedConstruction)
        raise ValidationError(f"unknown construction {name!r}; choose from {choices}") from None


def named_construction(name: Union[NamedConstruction, str], g: int) -> CoverResult:
    """Double-cover construction behind one of the standard families."""
    name = _parse_name(name)
    result = double_cover_vanishing(g, named_base(name, g))
    return CoverResult(
        total_genus=result.total_genus,
        vanishing=result.vanishing,
        profile=result.profile,
        sheets=2,
        base_genus=result.base_genus,
        base_vanishing=result.base_vanishing,
        construction=name.value,
    )
