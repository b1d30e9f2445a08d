from dataclasses import dataclass, field

from bundles.types import HeisenbergCharge
from common.errors import ContractViolation
from common.logs_file import logger
from scalars.services import affine_sign, surd_compare

from .types import ABOVE, AT_OR_BELOW, EllipticError, FormalObject, Summand


def classify(charge, theta):
    if charge.is_torsion:
        return ABOVE
    return ABOVE if surd_compare(theta.value, charge.slope) == "<" else AT_OR_BELOW


def euler_form(a, b):
    return a.r * b.d - a.d * b.r


def hom_dims(A, B):
    """(dim Hom, dim Ext^1) between stable pieces on a genus one curve."""
    if A == B:
        return 1, 1
    chi = euler_form(A.charge, B.charge)
    return max(chi, 0), max(-chi, 0)


def ext_dim(A, B, degree):
    if degree not in (0, 1):
        return 0
    return hom_dims(A, B)[degree]


def level(summand, theta):
    """Smallest n with the summand in D^{<=n}; it lies in D^{>=n} exactly for n <= level."""
    return summand.k if classify(summand.piece.charge, theta) == ABOVE else summand.k + 1


def in_le(X, n, theta):
    return all(level(s, theta) <= n for s in X)


def in_ge(X, n, theta):
    return all(level(s, theta) >= n for s in X)


def truncate(X, theta, n=0):
    """(tau^{<=n} X, tau^{>=n+1} X); the triangle between them splits in this model."""
    lower = [s for s in X if level(s, theta) <= n]
    upper = [s for s in X if level(s, theta) > n]
    return FormalObject(lower), FormalObject(upper)


def heart_member(X, theta):
    return in_le(X, 0, theta) and in_ge(X, 0, theta)


def k0_class(X):
    r = sum((-1) ** (s.k % 2) * s.mult * s.piece.charge.r for s in X)
    d = sum((-1) ** (s.k % 2) * s.mult * s.piece.charge.d for s in X)
    return r, d


def hom_dimension(X, Y):
    """dim Hom(X, Y); a piece in degree kx maps to one in degree ky through Ext^(kx - ky)."""
    return sum(
        x.mult * y.mult * ext_dim(x.piece, y.piece, x.k - y.k)
        for x in X
        for y in Y
    )


def graded_hom_dimension(X, Y, k):
    """dim H^k(X, Y) = dim Hom(X, Y[k])."""
    return hom_dimension(X, Y.shift(k))


@dataclass
class SplittingReport:
    whole: tuple
    lower: tuple
    upper: tuple
    partition_exact: bool

    @property
    def holds(self):
        total = (self.lower[0] + self.upper[0], self.lower[1] + self.upper[1])
        return self.partition_exact and total == self.whole


def splitting_check(X, theta, n=0):
    X0, X1 = truncate(X, theta, n)
    report = SplittingReport(
        whole=k0_class(X),
        lower=k0_class(X0),
        upper=k0_class(X1),
        partition_exact=(X0.multiset() + X1.multiset()) == X.multiset(),
    )
    if not report.holds:
        logger.error("K0 splitting failed for %r", X)
    return report


@dataclass
class HomVanishingReport:
    total: int
    contributions: list = field(default_factory=list)

    @property
    def holds(self):
        return self.total == 0


def hom_vanishing_check(X, Y, theta):
    """dim Hom(X, Y) for X in D^{<=0} and Y in D^{>=1}, pair by pair."""
    if not in_le(X, 0, theta):
        raise EllipticError("membership: X is not in D^{<=0}.")
    if not in_ge(Y, 1, theta):
        raise EllipticError("membership: Y is not in D^{>=1}.")

    contributions = []
    for x in X:
        for y in Y:
            degree = x.k - y.k
            dimension = x.mult * y.mult * ext_dim(x.piece, y.piece, degree)
            contributions.append((x, y, degree, dimension))
    return HomVanishingReport(total=sum(item[3] for item in contributions), contributions=contributions)


@dataclass
class AdjunctionReport:
    n: int
    rows: list = field(default_factory=list)

    @property
    def holds(self):
        return all(left == right for _, left, right in self.rows)


def truncation_adjunction_check(X, Y, n, theta, degrees=range(-2, 3)):
    """H^k(X, tau^{<=n+k} Y) = H^k(X, Y) for X in D^{<=n}."""
    if not in_le(X, n, theta):
        raise EllipticError(f"precondition: X is not in D^{{<={n}}}.")
    report = AdjunctionReport(n=n)
    for k in degrees:
        truncated, _ = truncate(Y, theta, n + k)
        report.rows.append((k, graded_hom_dimension(X, truncated, k), graded_hom_dimension(X, Y, k)))
    return report


def dual_adjunction_check(X, Y, n, theta, degrees=range(-2, 3)):
    """H^k(tau^{>=n-k} Y, X) = H^k(Y, X) for X in D^{>=n}."""
    if not in_ge(X, n, theta):
        raise EllipticError(f"precondition: X is not in D^{{>={n}}}.")
    report = AdjunctionReport(n=n)
    for k in degrees:
        _, truncated = truncate(Y, theta, n - k - 1)
        report.rows.append((k, graded_hom_dimension(truncated, X, k), graded_hom_dimension(Y, X, k)))
    return report


def charge_to_heisenberg(summand, theta):
    """Heart piece to Heisenberg charge: degree 0 gives (d, -r), degree -1 gives (-d, r)."""
    kind = classify(summand.piece.charge, theta)
    r, d = summand.piece.charge.r, summand.piece.charge.d
    if summand.k == 0 and kind == ABOVE:
        n, m = d, -r
    elif summand.k == -1 and kind == AT_OR_BELOW:
        n, m = -d, r
    else:
        raise EllipticError(f"{summand.piece} in degree {summand.k} is not in the heart.")

    if affine_sign(n, m, theta.value) != 1:
        logger.error("Non-positive dimension for charge (%s, %s) at theta %s", n, m, theta.to_text())
        raise ContractViolation(f"n + m*theta is not positive for ({n}, {m}).")
    return HeisenbergCharge(n, m)


def heart_to_heisenberg(X, theta):
    if not heart_member(X, theta):
        raise EllipticError("Object is not in the heart.")
    return [(charge_to_heisenberg(s, theta), s.mult) for s in X]


@dataclass
class AxiomReport:
    shift_stable: bool
    hom_vanishing: HomVanishingReport
    triangle_split: bool
    splitting: SplittingReport

    @property
    def holds(self):
        return self.shift_stable and self.hom_vanishing.holds and self.triangle_split and self.splitting.holds


def axiom_report(X, theta):
    """Weak t-structure axioms on the truncation pieces of X."""
    X0, X1 = truncate(X, theta)
    shift_stable = in_le(X0.shift(1), 0, theta) and in_ge(X1.shift(-1), 1, theta)
    return AxiomReport(
        shift_stable=shift_stable,
        hom_vanishing=hom_vanishing_check(X0, X1, theta),
        triangle_split=(X0 + X1) == X,
        splitting=splitting_check(X, theta),
    )
