"""Chern characters, Todd classes and Mukai vectors with exact coefficients.

Topological types of bundles are `ChernData` records (rank, c1, c2, c3)
attached to a `ThreefoldRing`; c2 is stored as the functional vector
integral(c2 . e_i), c3 as the scalar integral(c3).  All series identities
(Chern character, Todd class, its formal square root, tensor twists) are
truncated at degree 6 and evaluated over Fraction, so a half or a
twelfth survives as exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LatticeValidationError
from .rational import as_fraction, as_vector, is_integral
from .rings import GradedClass, K3Restriction, K3Vector, ThreefoldRing, restrict_to_k3

__all__ = [
    "ChernData",
    "MukaiVector",
    "chern_character",
    "chern_from_character",
    "chern_sum",
    "dual_chern",
    "twist_chern",
    "todd_class",
    "sqrt_series",
    "mukai_vector",
    "k3_mukai_vector",
    "structure_sheaf_chi",
]


@dataclass(frozen=True)
class ChernData:
    """Topological type of a bundle: rank and Chern data against a ring.

    `c1` is a coordinate vector in the ring's H^2 basis, `c2` the
    functional vector of integrals c2 . e_i, and `c3` the integral of c3.
    Entries may be any rationals; nothing forces them to come from an
    honest bundle.
    """

    ring: ThreefoldRing
    rank: int
    c1: tuple[Fraction, ...]
    c2: tuple[Fraction, ...]
    c3: Fraction
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise LatticeValidationError(f"rank must be a positive integer, got {self.rank!r}")
        object.__setattr__(self, "c1", as_vector(self.c1))
        object.__setattr__(self, "c2", as_vector(self.c2))
        object.__setattr__(self, "c3", as_fraction(self.c3))
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        if len(self.c1) != self.ring.rho or len(self.c2) != self.ring.rho:
            raise LatticeValidationError("c1/c2 data must have length rho")

    @property
    def is_integral(self) -> bool:
        return is_integral(self.c1, self.c2, self.c3)

    def c1_dot_c2(self) -> Fraction:
        """Integral of c1 . c2 over the threefold."""
        return sum((a * b for a, b in zip(self.c1, self.c2)), Fraction(0))


def chern_character(e: ChernData) -> GradedClass:
    """Truncated Chern character of a topological type.

    ch = rank + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6.
    """
    ring = e.ring
    c1_sq = ring.square_to_h4(e.c1, e.c1)
    ch2 = tuple((a - 2 * b) / 2 for a, b in zip(c1_sq, e.c2))
    ch3 = (ring.cubic(e.c1, e.c1, e.c1) - 3 * e.c1_dot_c2() + 3 * e.c3) / 6
    return ring.graded(a0=e.rank, a2=e.c1, a4=ch2, a6=ch3)


def chern_from_character(ring: ThreefoldRing, ch: GradedClass, labels=()) -> ChernData:
    """Invert the Chern character: recover (rank, c1, c2, c3) from ch.

    The degree-0 part must be a positive integer rank.
    """
    if ch.a0.denominator != 1 or ch.a0 < 1:
        raise LatticeValidationError(f"character degree-0 part {ch.a0} is not a positive rank")
    c1 = ch.a2
    c1_sq = ring.square_to_h4(c1, c1)
    c2 = tuple(a / 2 - b for a, b in zip(c1_sq, ch.a4))
    c1c2 = sum((a * b for a, b in zip(c1, c2)), Fraction(0))
    c3 = 2 * ch.a6 - ring.cubic(c1, c1, c1) / 3 + c1c2
    return ChernData(ring, int(ch.a0), c1, c2, c3, labels)


def dual_chern(e: ChernData) -> ChernData:
    """Topological type of the dual bundle: c_i goes to (-1)^i c_i."""
    return ChernData(e.ring, e.rank, tuple(-a for a in e.c1), e.c2, -e.c3, e.labels)


def twist_chern(e: ChernData, L, k: int = 1) -> ChernData:
    """Topological type of E tensored with the k-th power of a line bundle.

    Computed through the character identity ch(E x L^k) = ch(E) e^{kL} and
    inverted back to Chern data, so the Whitney-formula bookkeeping is
    never written out by hand.
    """
    L = as_vector(L)
    twisted = chern_character(e) * e.ring.exp_h2(tuple(k * a for a in L))
    return chern_from_character(e.ring, twisted, e.labels)


def chern_sum(e1: ChernData, e2: ChernData) -> ChernData:
    """Topological type of a direct sum, via additivity of the character."""
    if e1.ring != e2.ring:
        raise LatticeValidationError("summands live on different rings")
    total = chern_character(e1) + chern_character(e2)
    return chern_from_character(e1.ring, total, e1.labels + e2.labels)


def todd_class(ring: ThreefoldRing) -> GradedClass:
    """Todd class 1 + c1/2 + (c1^2 + c2)/12 + (c1 c2)/24 of the tangent bundle."""
    c1_sq = ring.square_to_h4(ring.c1_coords, ring.c1_coords)
    td2 = tuple(a / 2 for a in ring.c1_coords)
    td4 = tuple((a + b) / 12 for a, b in zip(c1_sq, ring.c2_values))
    td6 = sum((a * b for a, b in zip(ring.c1_coords, ring.c2_values)), Fraction(0)) / 24
    return ring.graded(a0=1, a2=td2, a4=td4, a6=td6)


def sqrt_series(x: GradedClass) -> GradedClass:
    """Formal square root of a unital graded class, degree by degree.

    Writing y = 1 + y2 + y4 + y6 and matching y^2 = x gives

        y2 = x2 / 2,
        y4 = (x4 - y2^2) / 2,
        y6 = (x6 - 2 y2.y4) / 2,

    where y2^2 is an H^4 functional and y2.y4 the Poincare pairing.
    The degree-0 part of x must be 1.
    """
    if x.a0 != 1:
        raise LatticeValidationError(f"square root requires unit degree-0 part, got {x.a0}")
    ring = x.ring
    y2 = tuple(a / 2 for a in x.a2)
    y2_sq = ring.square_to_h4(y2, y2)
    y4 = tuple((a - b) / 2 for a, b in zip(x.a4, y2_sq))
    pairing = sum((a * b for a, b in zip(y2, y4)), Fraction(0))
    y6 = (x.a6 - 2 * pairing) / 2
    return ring.graded(a0=1, a2=y2, a4=y4, a6=y6)


@dataclass(frozen=True)
class MukaiVector:
    """A graded class tagged with the normalization that produced it.

    The tag records whether the ambient ring was Calabi-Yau or quasi-Fano
    when ch . sqrt(td) was formed; both use the full Todd class of the
    threefold.
    """

    graded: GradedClass
    normalization: str

    @property
    def ring(self) -> ThreefoldRing:
        return self.graded.ring

    @property
    def is_integral(self) -> bool:
        return is_integral(self.graded.a0, self.graded.a2, self.graded.a4, self.graded.a6)

    def __str__(self):
        return f"{self.graded} [{self.normalization}]"


def mukai_vector(e: ChernData) -> MukaiVector:
    """Mukai vector ch(E) . sqrt(td M) of a topological type.

    The result need not be integral (Todd denominators survive); callers
    that care can consult `is_integral`.
    """
    ring = e.ring
    graded = chern_character(e) * sqrt_series(todd_class(ring))
    tag = "cy3-full-todd" if ring.is_calabi_yau else "fano-full-todd"
    return MukaiVector(graded=graded, normalization=tag)


def _restriction_of(flag_or_restriction) -> K3Restriction:
    if isinstance(flag_or_restriction, K3Restriction):
        return flag_or_restriction
    k3 = getattr(flag_or_restriction, "k3", None)
    if isinstance(k3, K3Restriction):
        return k3
    raise TypeError("expected a K3Restriction or an object carrying one as .k3")


def k3_mukai_vector(flag_or_restriction, e: ChernData) -> K3Vector:
    """Mukai vector of the restriction of a bundle to an anticanonical K3.

    On a K3 surface sqrt(td) = 1 + pt, so the vector is

        (rank, c1 . S-basis, integral_S ch2 + rank),

    computed by restricting the ambient Chern character and adding the
    rank to the point component.
    """
    k3 = _restriction_of(flag_or_restriction)
    restricted = restrict_to_k3(chern_character(e), k3)
    return K3Vector(restricted.v0, restricted.v2, restricted.v4 + e.rank)


def structure_sheaf_chi(ring: ThreefoldRing) -> Fraction:
    """Euler characteristic chi(O) = integral of c1 c2 / 24."""
    return sum(
        (a * b for a, b in zip(ring.c1_coords, ring.c2_values)), Fraction(0)
    ) / 24
