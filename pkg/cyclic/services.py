from dataclasses import dataclass, field

from common.errors import ContractViolation
from common.logs_file import logger

from .complexes import ConnesBicomplex, CyclicModule, MixedComplex
from .linalg import SparseMap, span_rank
from .types import KOSZUL, PRINTED, AlgebraPresentation, CyclicError, HomologyResult


def build_cyclic(presentation, n_max, *, convention=KOSZUL, budget=None):
    return CyclicModule(presentation, n_max, convention=convention, budget=budget)


def hochschild_b(module):
    """Boundary matrices b_n : C_n -> C_{n-1} for n = 1..n_max."""
    return {n: module.hochschild_boundary(n) for n in range(1, module.n_max + 1)}


def connes_B(module):
    """Connes operators B_n : C_n -> C_{n+1} for n = 0..n_max-1."""
    if not module.presentation.is_unital:
        raise CyclicError("non-unital presentation: the Connes operator needs identities.")
    return {n: module.connes_operator(n) for n in range(module.n_max)}


@dataclass
class IdentityReport:
    convention: str
    checks: list = field(default_factory=list)

    def record(self, name, n, holds):
        self.checks.append((name, n, holds))

    @property
    def failures(self):
        return [(name, n) for name, n, holds in self.checks if not holds]

    @property
    def holds(self):
        return not self.failures

    def holds_for(self, name):
        return all(holds for check, _, holds in self.checks if check == name)


def identity_suite(module):
    """Exact check of the simplicial, cyclic and mixed-complex identities up to n_max."""
    report = IdentityReport(convention=module.convention)
    P = module.presentation
    top = module.n_max

    for n in range(2, top + 1):
        holds = all(
            module.face(n - 1, i) @ module.face(n, j) == module.face(n - 1, j - 1) @ module.face(n, i)
            for j in range(1, n + 1)
            for i in range(j)
        )
        report.record("simplicial", n, holds)

    for n in range(top + 1):
        t = module.cyclic_operator(n)
        power = t
        for _ in range(n):
            power = t @ power
        report.record("t_order", n, power == SparseMap.identity(module.dimension(n), module.domain))

    for n in range(1, top + 1):
        t_n, t_lower = module.cyclic_operator(n), module.cyclic_operator(n - 1)
        holds = all(
            module.loday_face(n, j) @ t_n == -(t_lower @ module.loday_face(n, j - 1))
            for j in range(1, n + 1)
        )
        wrap = module.loday_face(n, n)
        holds = holds and module.loday_face(n, 0) @ t_n == (-wrap if n % 2 else wrap)
        report.record("cyclic_relations", n, holds)

    for n in range(2, top + 1):
        report.record("b_squared", n, (module.hochschild_boundary(n - 1) @ module.hochschild_boundary(n)).is_zero())

    if P.is_unital:
        for n in range(top - 1):
            report.record("B_squared", n, (module.connes_operator(n + 1) @ module.connes_operator(n)).is_zero())
        for n in range(top):
            total = module.hochschild_boundary(n + 1) @ module.connes_operator(n)
            if n >= 1:
                total = total + module.connes_operator(n - 1) @ module.hochschild_boundary(n)
            report.record("bB_anticommute", n, total.is_zero())

    if P.has_differential:
        for n in range(top + 1):
            delta = module.internal_differential(n)
            report.record("delta_squared", n, (delta @ delta).is_zero())
            if n >= 1:
                total = module.hochschild_boundary(n) @ delta + module.internal_differential(n - 1) @ module.hochschild_boundary(n)
                report.record("b_delta_anticommute", n, total.is_zero())
            if P.is_unital and n < top:
                total = module.connes_operator(n) @ delta + module.internal_differential(n + 1) @ module.connes_operator(n)
                report.record("B_delta_anticommute", n, total.is_zero())

    if report.holds:
        logger.info("Identity suite passed (%s convention, degree %s)", module.convention, top)
    else:
        logger.error("Identity suite failed (%s convention): %s", module.convention, report.failures)
    return report


def sign_convention_report(presentation, n_max, *, budget=None):
    """Run the identity suite under both readings of the wrap-around face sign."""
    return {
        convention: identity_suite(build_cyclic(presentation, n_max, convention=convention, budget=budget))
        for convention in (KOSZUL, PRINTED)
    }


def _require_complex(mixed, degrees):
    for N in degrees:
        if not (mixed.boundary(N - 1) @ mixed.boundary(N)).is_zero():
            logger.error("b^2 != 0 in total degree %s (%s convention)", N, mixed.module.convention)
            raise ContractViolation(
                f"{mixed.module.convention} sign reading fails b^2 = 0 in degree {N}; no homology is reported."
            )


def hh(presentation, n_max, *, convention=KOSZUL, budget=None):
    """HH_N = ker b_N / im b_{N+1} for N = 0..n_max."""
    module = build_cyclic(presentation, n_max + 1, convention=convention, budget=budget)
    mixed = MixedComplex(module)
    _require_complex(mixed, range(1, n_max + 2))

    ranks = {N: mixed.boundary(N).rank() for N in range(0, n_max + 2)}
    dimensions = tuple(mixed.dimension(N) - ranks[N] - ranks[N + 1] for N in range(n_max + 1))
    exact = None if mixed.exact_through is None else n_max
    logger.info("HH dimensions up to %s: %s", n_max, dimensions)
    return HomologyResult(
        theory="HH",
        degrees=tuple(range(n_max + 1)),
        dimensions=dimensions,
        field=str(presentation.domain),
        exact_through=exact,
    )


def _bicomplex(presentation, n_max, convention, budget):
    if not presentation.is_unital:
        raise CyclicError("non-unital presentation: cyclic homology needs identities.")
    module = build_cyclic(presentation, n_max, convention=convention, budget=budget)
    mixed = MixedComplex(module)
    _require_complex(mixed, range(mixed.min_degree + 1, n_max + 1))
    return ConnesBicomplex(mixed)


def hc(presentation, n_max, *, convention=KOSZUL, budget=None):
    """HC_N from the (b, B) bicomplex, reported for N = 0..n_max-2."""
    if n_max < 2:
        raise CyclicError("cyclic homology needs max degree at least 2.")
    bicomplex = _bicomplex(presentation, n_max, convention, budget)
    top = n_max - 2
    dimensions = tuple(bicomplex.homology_dimension(N) for N in range(top + 1))
    exact = None if bicomplex.mixed.exact_through is None else top
    logger.info("HC dimensions up to %s: %s", top, dimensions)
    return HomologyResult(
        theory="HC",
        degrees=tuple(range(top + 1)),
        dimensions=dimensions,
        field=str(presentation.domain),
        exact_through=exact,
    )


def periodicity_rank(bicomplex, high, low):
    """Rank of S^((high - low) / 2) : HC_high -> HC_low on homology."""
    S = SparseMap.identity(bicomplex.dimension(high), bicomplex.domain)
    for M in range(high, low, -2):
        S = bicomplex.periodicity(M) @ S
    images = [S.apply(z) for z in bicomplex.differential(high).kernel()]
    boundaries = list(bicomplex.differential(low + 1).transpose().rows.values())
    height = bicomplex.dimension(low)
    return span_rank(images + boundaries, height, bicomplex.domain) - bicomplex.rank(low + 1)


def _stable_value(bicomplex, levels, window):
    """Stable dimension of the S-tower over `levels`, or None when the window cannot decide."""
    if len(levels) >= 3:
        a, b, c = levels[-3:]
        lower, upper, through = (
            periodicity_rank(bicomplex, b, a),
            periodicity_rank(bicomplex, c, b),
            periodicity_rank(bicomplex, c, a),
        )
        return through if lower == upper == through else None
    if len(levels) == 2:
        a, b = levels
        rank = periodicity_rank(bicomplex, b, a)
        if rank == bicomplex.homology_dimension(a) == bicomplex.homology_dimension(b):
            return rank
    if len(levels) == 1:
        # HC vanishing in the level and the degree above it pins the tower to zero
        a = levels[0]
        if a + 2 < window and bicomplex.homology_dimension(a) == bicomplex.homology_dimension(a + 2) == 0:
            return 0
    return None


def hp(presentation, window, *, convention=KOSZUL, budget=None):
    """Even and odd periodic dimensions from the S-tower of HC inside the window."""
    if window < 4:
        raise CyclicError("periodic homology needs a window of at least 4.")
    bicomplex = _bicomplex(presentation, window, convention, budget)
    top = window - 2

    values = []
    for parity in (0, 1):
        levels = list(range(parity, top + 1, 2))
        value = None
        if bicomplex.mixed.exact_through is not None:
            value = _stable_value(bicomplex, levels, window)
        values.append(value)

    stabilized = all(value is not None for value in values)
    if not stabilized:
        logger.info("HP window %s did not stabilize: %s", window, values)
    return HomologyResult(
        theory="HP",
        degrees=("even", "odd"),
        dimensions=tuple(values),
        field=str(presentation.domain),
        stabilized=stabilized,
    )


def matrix_algebra(algebra, n):
    """M_n(A) with basis E_ij (x) e_k, named E<i><j>.<name>."""
    if not isinstance(algebra, AlgebraPresentation):
        raise CyclicError("matrix algebras are built over algebra presentations.")
    if n < 1:
        raise CyclicError("matrix size must be positive.")
    d = algebra.dimension

    def index(i, j, k):
        return (i * n + j) * d + k

    basis = [f"E{i}{j}.{name}" for i in range(n) for j in range(n) for name in algebra.basis]
    mult = [
        (index(i, j, a), index(j, m, b), index(i, m, c), value)
        for a, b, c, value in algebra.structure_constants()
        for i in range(n)
        for j in range(n)
        for m in range(n)
    ]
    unit = None
    if algebra.is_unital:
        unit = [algebra.domain.zero] * (n * n * d)
        for i in range(n):
            for k, value in enumerate(algebra.unit_vector()):
                unit[index(i, i, k)] = value
    return AlgebraPresentation(basis, unit, mult)


@dataclass
class MoritaReport:
    size: int
    hh_algebra: HomologyResult
    hh_matrix: HomologyResult
    hc_algebra: HomologyResult
    hc_matrix: HomologyResult

    @property
    def holds(self):
        return (
            self.hh_algebra.dimensions == self.hh_matrix.dimensions
            and self.hc_algebra.dimensions == self.hc_matrix.dimensions
        )


def morita_check(algebra, n, n_max, *, convention=KOSZUL, budget=None):
    """Compare HH (degrees < n_max) and HC (degrees <= n_max - 2) of A and M_n(A), words of length <= n_max + 1."""
    if n_max < 2:
        raise CyclicError("Morita comparison needs max degree at least 2.")
    matrices = matrix_algebra(algebra, n)
    report = MoritaReport(
        size=n,
        hh_algebra=hh(algebra, n_max - 1, convention=convention, budget=budget),
        hh_matrix=hh(matrices, n_max - 1, convention=convention, budget=budget),
        hc_algebra=hc(algebra, n_max, convention=convention, budget=budget),
        hc_matrix=hc(matrices, n_max, convention=convention, budget=budget),
    )
    if not report.holds:
        logger.error("Morita comparison failed for n=%s: %s", n, report)
    return report
