from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from common.errors import InputError
from scalars.types import QuadraticSurd

ABOVE = "Coh>th"
AT_OR_BELOW = "Coh<=th"
CLASS_CHOICES = [(ABOVE, "slopes above theta"), (AT_OR_BELOW, "slopes at most theta")]


class EllipticError(InputError):
    default_detail = "Invalid object of the derived category."


@dataclass(frozen=True, order=True)
class Charge:
    """(rank, degree) of a coherent sheaf; rank 0 means torsion."""

    r: int
    d: int

    def __post_init__(self):
        if self.r < 0:
            raise EllipticError(f"Rank {self.r} is negative.")
        if self.r == 0 and self.d <= 0:
            raise EllipticError(f"Torsion charge (0, {self.d}) needs positive degree.")

    @property
    def is_torsion(self):
        return self.r == 0

    @property
    def slope(self):
        """d/r, or None for the infinite slope of torsion sheaves."""
        return None if self.is_torsion else Fraction(self.d, self.r)

    def __str__(self):
        return f"({self.r},{self.d})"


@dataclass(frozen=True, order=True)
class StablePiece:
    charge: Charge
    label: str = ""

    def __post_init__(self):
        if gcd(self.charge.r, self.charge.d) != 1:
            raise EllipticError(f"Stable pieces need coprime charge, got {self.charge}.")

    def __str__(self):
        return f"{self.charge}{':' + self.label if self.label else ''}"


@dataclass(frozen=True, order=True)
class Summand:
    """`mult` copies of `piece` placed in cohomological degree `k`."""

    k: int
    piece: StablePiece
    mult: int = 1


class FormalObject:
    """Finite direct sum of shifted stable pieces; equal (k, piece) summands are merged."""

    __slots__ = ("summands",)

    def __init__(self, summands=()):
        counts = Counter()
        for summand in summands:
            if summand.mult <= 0:
                raise EllipticError(f"Multiplicity {summand.mult} of {summand.piece} is not positive.")
            counts[(summand.k, summand.piece)] += summand.mult
        object.__setattr__(
            self,
            "summands",
            tuple(Summand(k, piece, mult) for (k, piece), mult in sorted(counts.items())),
        )

    def __setattr__(self, name, value):
        raise AttributeError("FormalObject is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    @classmethod
    def from_charge(cls, k, r, d, *, label="", mult=1):
        """Split a semistable charge with g = gcd(r, d) into g copies of a stable piece."""
        if r == 0 and d == 0:
            raise EllipticError("Charge (0, 0) is not a sheaf.")
        g = gcd(r, d)
        piece = StablePiece(Charge(r // g, d // g), label)
        return cls([Summand(k, piece, mult * g)])

    @property
    def is_empty(self):
        return not self.summands

    def multiset(self):
        return Counter({(s.k, s.piece): s.mult for s in self.summands})

    def shift(self, s):
        """X[s]: a piece in degree k moves to degree k - s."""
        return FormalObject(Summand(summand.k - s, summand.piece, summand.mult) for summand in self.summands)

    def __add__(self, other):
        return FormalObject(self.summands + other.summands)

    def __eq__(self, other):
        if not isinstance(other, FormalObject):
            return NotImplemented
        return self.summands == other.summands

    __hash__ = None

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __repr__(self):
        body = " + ".join(f"{s.mult}x{s.piece}[{-s.k}]" for s in self.summands)
        return f"FormalObject({body or '0'})"


@dataclass(frozen=True)
class Theta:
    value: QuadraticSurd

    def __post_init__(self):
        if not self.value.is_irrational:
            raise EllipticError(f"theta = {self.value.to_text()} must be irrational.")

    def __float__(self):
        return float(self.value)

    def to_text(self):
        return self.value.to_text()
