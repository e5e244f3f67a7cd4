"""Numerical semigroups of Weierstrass non-gaps.

The non-gaps at a point are closed under addition, which gives a necessary
condition for a candidate gap set to occur on a curve. A semigroup of genus
``g`` is stored as a dense membership table over ``0 .. 2g+1``; every integer
past the table is a member.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import ValidationError
from .sequences import (
    GapSet,
    RamificationSequence,
    gaps_from_vanishing,
    ramification_from_vanishing,
    vanishing_from_gaps,
    vanishing_from_ramification,
)


@dataclass(frozen=True)
class ClosureViolation:
    """Two non-gaps whose sum is a gap."""

    x: int
    y: int
    sum: int

    def as_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "sum": self.sum}


@dataclass(frozen=True)
class NumericalSemigroup:
    genus: int
    membership: tuple[bool, ...]

    def __post_init__(self) -> None:
        g = self.genus
        table = tuple(bool(b) for b in self.membership)
        object.__setattr__(self, "membership", table)
        if len(table) != self.bound + 1:
            raise ValidationError(
                f"membership table must cover 0..{self.bound}, got {len(table)} entries"
            )
        if not table[0]:
            raise ValidationError("0 must belong to a numerical semigroup")
        gaps = [n for n, member in enumerate(table) if not member]
        if len(gaps) != g:
            raise ValidationError(f"table has {len(gaps)} non-members, genus is {g}")
        if gaps and gaps[-1] > 2 * g - 1:
            raise ValidationError(f"non-member {gaps[-1]} exceeds 2g-1")
        witness = _first_violation(table)
        if witness is not None:
            raise ValidationError(
                f"membership table is not additively closed: "
                f"{witness.x} + {witness.y} = {witness.sum}"
            )

    @property
    def bound(self) -> int:
        return 2 * self.genus + 1

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int) or n < 0:
            return False
        return n > self.bound or self.membership[n]

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(n for n, member in enumerate(self.membership) if not member)

    def gap_set(self) -> GapSet:
        return GapSet(self.genus, self.gaps)

    def small_elements(self) -> tuple[int, ...]:
        """Members up to the Frobenius number plus one."""
        f = frobenius(self)
        return tuple(n for n in range(f + 2) if n in self)

    def generators(self) -> tuple[int, ...]:
        """Minimal generating set (members that are not sums of two positive members)."""
        top = frobenius(self) + max(2, self.multiplicity()) + 1
        gens = []
        for n in range(1, top + 1):
            if n not in self:
                continue
            if not any(x in self and (n - x) in self for x in range(1, n // 2 + 1)):
                gens.append(n)
        return tuple(gens)

    def multiplicity(self) -> int:
        """Smallest positive member."""
        n = 1
        while n not in self:
            n += 1
        return n


def _mask(table: tuple[bool, ...]) -> int:
    m = 0
    for n, member in enumerate(table):
        if member:
            m |= 1 << n
    return m


def _first_violation(table: tuple[bool, ...]) -> Optional[ClosureViolation]:
    """Lexicographically smallest (x, y), 0 < x <= y, members with x + y a non-member.

    Works on bitmasks: shifting the member mask by ``x`` lists every ``x + y``
    at once, and intersecting with the non-member mask exposes violations.
    """
    size = len(table)
    full = (1 << size) - 1
    members = _mask(table)
    holes = full & ~members
    positive = members & ~1
    x = 1
    while positive >> x:
        if (positive >> x) & 1:
            # sums x + y with y >= x, y a positive member
            bad = ((positive >> x) << (2 * x)) & holes
            if bad:
                s = (bad & -bad).bit_length() - 1
                return ClosureViolation(x, s - x, s)
        x += 1
    return None


def from_gaps(gaps: GapSet) -> Union[NumericalSemigroup, ClosureViolation]:
    """Semigroup whose non-members are exactly ``gaps``, or a closure witness.

    A failed closure is a verdict, not an error: the lexicographically smallest
    violating pair is returned.
    """
    g = gaps.genus
    gapset = set(gaps.gaps)
    table = tuple(n not in gapset for n in range(2 * g + 2))
    witness = _first_violation(table)
    if witness is not None:
        return witness
    return NumericalSemigroup(g, table)


def frobenius(s: NumericalSemigroup) -> int:
    """Largest gap, or -1 for the trivial semigroup."""
    gaps = s.gaps
    return gaps[-1] if gaps else -1


def is_symmetric(s: NumericalSemigroup) -> bool:
    """``x`` is a member exactly when ``2g-1-x`` is not, for ``0 <= x <= 2g-1``."""
    f = 2 * s.genus - 1
    if f < 0:
        return False
    return all((x in s) != ((f - x) in s) for x in range(f + 1))


@dataclass(frozen=True)
class AdmissibilityVerdict:
    ramification: RamificationSequence
    gaps: GapSet
    semigroup: Optional[NumericalSemigroup]
    violation: Optional[ClosureViolation]

    @property
    def admissible(self) -> bool:
        return self.violation is None

    def as_dict(self) -> dict:
        out = {
            "admissible": self.admissible,
            "gaps": list(self.gaps.gaps),
            "violation": self.violation.as_dict() if self.violation else None,
        }
        if self.semigroup is not None:
            out["generators"] = list(self.semigroup.generators())
            out["symmetric"] = is_symmetric(self.semigroup)
            out["frobenius"] = frobenius(self.semigroup)
        return out


def check_gaps_admissible(gaps: GapSet) -> AdmissibilityVerdict:
    result = from_gaps(gaps)
    r = ramification_from_vanishing(vanishing_from_gaps(gaps))
    if isinstance(result, ClosureViolation):
        return AdmissibilityVerdict(r, gaps, None, result)
    return AdmissibilityVerdict(r, gaps, result, None)


def check_ramification_admissible(r: RamificationSequence) -> AdmissibilityVerdict:
    """Semigroup condition for the non-gaps of a ramification sequence."""
    return check_gaps_admissible(gaps_from_vanishing(vanishing_from_ramification(r)))
