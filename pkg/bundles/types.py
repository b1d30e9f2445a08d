import math
from dataclasses import dataclass
from fractions import Fraction

from common.errors import InputError
from nctorus.matrices import NCMatrix
from scalars.services import lambda_power, theta_affine
from scalars.types import ONE, ZERO, SymbolicScalar, gaussian, gaussian_parts

C_MONOMIAL = (0, 0, 0, 0, 0, 1)
C_THETA_MONOMIAL = (0, 0, 1, 0, 0, 1)
QUARTER_TURNS = (
    SymbolicScalar.constant(1),
    SymbolicScalar.constant(0, 1),
    SymbolicScalar.constant(-1),
    SymbolicScalar.constant(0, -1),
)


class BundleError(InputError):
    default_detail = "Invalid bundle data."


@dataclass(frozen=True)
class HeisenbergCharge:
    """Charge (n, m) of the Heisenberg module E_{n,m}; m = 0 marks the free module A^|n|."""

    n: int
    m: int

    def __post_init__(self):
        if self.n == 0 and self.m == 0:
            raise BundleError("Charge (0, 0) has n + m*th = 0.")

    @property
    def is_free(self):
        return self.m == 0

    @property
    def modulus(self):
        return abs(self.m)

    @property
    def dim(self):
        return theta_affine(self.n, self.m)

    @property
    def mu(self):
        return SymbolicScalar.constant(self.m) / self.dim

    @property
    def epsilon(self):
        self._require_heisenberg()
        return self.dim / self.m

    def _require_heisenberg(self):
        if self.is_free:
            raise BundleError(f"Charge ({self.n}, 0) is the free module; use a free connection.")

    def phase_offset(self, alpha):
        """Constant part c*alpha*n/m of the U2 phase on residue alpha."""
        return SymbolicScalar.unit("c") * Fraction(alpha * self.n, self.m)


# Polynomials in x are tuples of SymbolicScalar coefficients, lowest degree first.

def poly_trim(coefficients):
    coefficients = list(coefficients)
    while coefficients and coefficients[-1].is_zero:
        coefficients.pop()
    return tuple(coefficients)


def poly_add(left, right):
    size = max(len(left), len(right))
    padded_left = tuple(left) + (ZERO,) * (size - len(left))
    padded_right = tuple(right) + (ZERO,) * (size - len(right))
    return poly_trim(a + b for a, b in zip(padded_left, padded_right))


def poly_scale(poly, scalar):
    if scalar.is_zero:
        return ()
    return poly_trim(scalar * coefficient for coefficient in poly)


def poly_mul(left, right):
    if not left or not right:
        return ()
    product = [ZERO] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if a.is_zero:
            continue
        for j, b in enumerate(right):
            if not b.is_zero:
                product[i + j] = product[i + j] + a * b
    return poly_trim(product)


def poly_derivative(poly):
    return poly_trim(coefficient * power for power, coefficient in enumerate(poly) if power)


def poly_translate(poly, shift):
    """Coefficients of p(x + shift)."""
    result = [ZERO] * len(poly)
    powers = [ONE]
    for _ in range(len(poly)):
        powers.append(powers[-1] * shift)
    for degree, coefficient in enumerate(poly):
        if coefficient.is_zero:
            continue
        for power in range(degree + 1):
            result[power] = result[power] + coefficient * powers[degree - power] * math.comb(degree, power)
    return poly_trim(result)


def normalize_phase(poly, q0):
    """Fold exp(c*k) = 1, exp(c/4) = i and exp(c*th*k) = L^k out of a constant exponent."""
    terms = q0.polynomial_terms()
    if not terms:
        return poly, q0

    factor = ONE
    changed = False
    for monomial in (C_MONOMIAL, C_THETA_MONOMIAL):
        if monomial not in terms:
            continue
        re, im = gaussian_parts(terms[monomial])
        if monomial == C_MONOMIAL and (4 * re).denominator == 1:
            turns = int(4 * re) % 4
            factor = factor * QUARTER_TURNS[turns]
            changed = changed or re != 0
            re = Fraction(0)
        else:
            whole = math.floor(re)
            if monomial == C_THETA_MONOMIAL and whole:
                factor = factor * lambda_power(whole)
            changed = changed or whole != 0
            re -= whole
        terms[monomial] = gaussian(re, im)

    if not changed:
        return poly, q0
    return poly_scale(poly, factor), SymbolicScalar.from_terms(terms)


@dataclass(frozen=True, eq=False)
class GaussTerm:
    """p(x) * exp(q2 x^2 + q1 x + q0)."""

    poly: tuple
    q2: SymbolicScalar
    q1: SymbolicScalar
    q0: SymbolicScalar

    def same_exponent(self, other):
        return self.q2 == other.q2 and self.q1 == other.q1 and self.q0 == other.q0

    def with_poly(self, poly):
        return GaussTerm(poly_trim(poly), self.q2, self.q1, self.q0)

    def translate(self, shift):
        """The term as a function of x + shift."""
        return GaussTerm(
            poly_translate(self.poly, shift),
            self.q2,
            self.q1 + self.q2 * shift * 2,
            self.q0 + self.q1 * shift + self.q2 * shift * shift,
        )

    def mul_x(self):
        return self.with_poly((ZERO,) + self.poly if self.poly else ())

    def mul_poly(self, poly):
        return self.with_poly(poly_mul(self.poly, poly))

    def mul_exp_linear(self, slope, offset):
        return GaussTerm(self.poly, self.q2, self.q1 + slope, self.q0 + offset)

    def derivative(self):
        exponent_derivative = poly_trim((self.q1, self.q2 * 2))
        return self.with_poly(poly_add(poly_derivative(self.poly), poly_mul(self.poly, exponent_derivative)))

    def scale(self, scalar):
        return self.with_poly(poly_scale(self.poly, SymbolicScalar.coerce(scalar)))


def merge_terms(terms):
    merged = []
    for term in terms:
        poly, q0 = normalize_phase(term.poly, term.q0)
        if not poly:
            continue
        term = GaussTerm(poly, term.q2, term.q1, q0)
        for index, existing in enumerate(merged):
            if existing.same_exponent(term):
                merged[index] = existing.with_poly(poly_add(existing.poly, term.poly))
                break
        else:
            merged.append(term)
    return tuple(term for term in merged if term.poly)


class GaussJet:
    """Section of E_{n,m}: for each residue alpha mod |m| a finite sum of GaussTerms."""

    __slots__ = ("modulus", "components")

    def __init__(self, modulus, components=None):
        if modulus < 1:
            raise BundleError("Sections need a positive modulus |m|.")
        cleaned = {}
        for alpha, terms in (components or {}).items():
            if not 0 <= alpha < modulus:
                raise BundleError(f"Residue {alpha} is outside 0..{modulus - 1}.")
            terms = merge_terms(terms)
            if terms:
                cleaned[alpha] = terms
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "components", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("GaussJet is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    @classmethod
    def zero(cls, modulus):
        return cls(modulus)

    @classmethod
    def constant(cls, modulus, alpha, value=ONE):
        """The indicator section value * 1_alpha."""
        return cls(modulus, {alpha: [GaussTerm((SymbolicScalar.coerce(value),), ZERO, ZERO, ZERO)]})

    def component(self, alpha):
        return self.components.get(alpha, ())

    @property
    def is_zero(self):
        return not self.components

    def map_terms(self, function):
        return GaussJet(
            self.modulus,
            {alpha: [function(term) for term in terms] for alpha, terms in self.components.items()},
        )

    def _combine(self, other, sign):
        if self.modulus != other.modulus:
            raise BundleError(f"Sections over moduli {self.modulus} and {other.modulus} do not combine.")
        components = {alpha: list(terms) for alpha, terms in self.components.items()}
        for alpha, terms in other.components.items():
            extra = terms if sign > 0 else [term.scale(-1) for term in terms]
            components.setdefault(alpha, []).extend(extra)
        return GaussJet(self.modulus, components)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, scalar):
        return self.map_terms(lambda term: term.scale(scalar))

    def __eq__(self, other):
        if not isinstance(other, GaussJet):
            return NotImplemented
        return self.modulus == other.modulus and (self - other).is_zero

    __hash__ = None

    def term_count(self):
        return sum(len(terms) for terms in self.components.values())

    def to_records(self):
        return [
            {
                "alpha": alpha,
                "poly": [coefficient.to_text() for coefficient in term.poly],
                "q2": term.q2.to_text(),
                "q1": term.q1.to_text(),
                "q0": term.q0.to_text(),
            }
            for alpha in sorted(self.components)
            for term in self.components[alpha]
        ]

    def __repr__(self):
        return f"GaussJet(modulus={self.modulus}, terms={self.term_count()})"


@dataclass(frozen=True)
class FreeConnection:
    """Holomorphic structure v -> delta(v) + B v on the free module A^rank."""

    B: NCMatrix

    def __post_init__(self):
        rows, columns = self.B.shape
        if rows != columns:
            raise BundleError(f"Connection matrix must be square, got {rows}x{columns}.")

    @property
    def rank(self):
        return self.B.shape[0]
