from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.rings import ring

from common.errors import InputError


class ScalarError(InputError):
    default_detail = "Invalid scalar."


class ScalarDivisionError(ScalarError, ZeroDivisionError):
    default_detail = "division by zero"


# Li stands for L^-1; every stored monomial carries at most one of the two.
UNIT_NAMES = ("L", "Li", "th", "tau", "z", "c")
SCALAR_RING, *UNIT_GENERATORS = ring(",".join(UNIT_NAMES), QQ_I)
L_INDEX, LI_INDEX = 0, 1
PRINTED_UNITS = ("L", "th", "tau", "z", "c")

GaussianRational = QQ_I.dtype


def rational(value):
    if isinstance(value, QQ.dtype):
        return value
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def gaussian(re=0, im=0):
    if isinstance(re, GaussianRational) and not im:
        return re
    return QQ_I(rational(re), rational(im))


def gaussian_parts(value):
    return (
        Fraction(int(value.x.numerator), int(value.x.denominator)),
        Fraction(int(value.y.numerator), int(value.y.denominator)),
    )


def gaussian_to_complex(value):
    return complex(float(value.x), float(value.y))


def _fraction_text(value):
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def gaussian_text(value):
    re, im = gaussian_parts(value)
    if not im:
        return _fraction_text(re)
    imaginary = "i" if abs(im) == 1 else f"{_fraction_text(abs(im))}i"
    if not re:
        return f"-{imaginary}" if im < 0 else imaginary
    sign = "-" if im < 0 else "+"
    return f"({_fraction_text(re)} {sign} {imaginary})"


def _laurent_normal(poly):
    """Apply L * Li = 1 to every monomial of `poly`."""
    if not any(monom[L_INDEX] and monom[LI_INDEX] for monom in poly.keys()):
        return poly

    terms = {}
    for monom, coeff in poly.items():
        net = monom[L_INDEX] - monom[LI_INDEX]
        key = (max(net, 0), max(-net, 0)) + monom[2:]
        terms[key] = terms[key] + coeff if key in terms else coeff
    return SCALAR_RING.from_dict({key: coeff for key, coeff in terms.items() if coeff})


def _lambda_shift(exponent):
    generator = UNIT_GENERATORS[L_INDEX] if exponent >= 0 else UNIT_GENERATORS[LI_INDEX]
    return generator ** abs(exponent)


def _normal_fraction(numerator, denominator):
    numerator = _laurent_normal(numerator)
    denominator = _laurent_normal(denominator)
    if not denominator:
        raise ScalarDivisionError()
    if not numerator:
        return SCALAR_RING.zero, SCALAR_RING.one

    lifted = max(monom[LI_INDEX] for monom in denominator.keys())
    if lifted:
        shift = _lambda_shift(lifted)
        numerator = _laurent_normal(numerator * shift)
        denominator = _laurent_normal(denominator * shift)

    lowest = min(monom[L_INDEX] for monom in denominator.keys())
    if lowest:
        numerator = _laurent_normal(numerator * _lambda_shift(-lowest))
        denominator = denominator.exquo(_lambda_shift(lowest))

    leading = denominator.LC
    if denominator.is_ground:
        return numerator.quo_ground(leading), SCALAR_RING.one

    numerator = numerator.quo_ground(leading)
    denominator = denominator.quo_ground(leading)
    if not any(monom[LI_INDEX] for monom in numerator.keys()):
        quotient, remainder = numerator.div(denominator)
        if not remainder:
            return quotient, SCALAR_RING.one
    return numerator, denominator


class SymbolicScalar:
    """Exact rational function over Q(i) in the formal units L, th, tau, z, c.

    Values are immutable. Normalization is lazy: numerator and denominator are
    not reduced by their gcd, so equality is decided by cross-multiplication.
    """

    __slots__ = ("numerator", "denominator")
    __hash__ = None

    def __init__(self, numerator=None, denominator=None):
        numerator = SCALAR_RING.zero if numerator is None else numerator
        denominator = SCALAR_RING.one if denominator is None else denominator
        numerator, denominator = _normal_fraction(numerator, denominator)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicScalar is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    @classmethod
    def constant(cls, re=0, im=0):
        return cls(SCALAR_RING.ground_new(gaussian(re, im)))

    @classmethod
    def unit(cls, name):
        if name not in PRINTED_UNITS:
            raise ScalarError(f"Unknown unit {name!r}.")
        return cls(UNIT_GENERATORS[UNIT_NAMES.index(name)])

    @classmethod
    def from_terms(cls, terms):
        """Build a polynomial scalar from {exponent tuple: GaussianRational}."""
        return cls(SCALAR_RING.from_dict({monom: coeff for monom, coeff in terms.items() if coeff}))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, SymbolicScalar):
            return value
        if isinstance(value, GaussianRational):
            return cls(SCALAR_RING.ground_new(value))
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        return NotImplemented

    @property
    def is_zero(self):
        return not self.numerator

    @property
    def is_polynomial(self):
        return self.denominator == SCALAR_RING.one

    @property
    def is_constant(self):
        return self.is_polynomial and self.numerator.is_ground

    def constant_value(self):
        if not self.is_constant:
            raise ScalarError(f"{self.to_text()} is not a constant.")
        return self.numerator.LC if self.numerator else QQ_I.zero

    def polynomial_terms(self):
        if not self.is_polynomial:
            return None
        return dict(self.numerator.items())

    def units(self):
        found = set()
        for poly in (self.numerator, self.denominator):
            for monom in poly.keys():
                for index, exponent in enumerate(monom):
                    if exponent:
                        found.add("L" if index == LI_INDEX else UNIT_NAMES[index])
        return found

    def __eq__(self, other):
        other = SymbolicScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.denominator == other.denominator:
            return self.numerator == other.numerator
        return not _laurent_normal(
            self.numerator * other.denominator - other.numerator * self.denominator
        )

    def __bool__(self):
        return not self.is_zero

    def __neg__(self):
        return _raw(-self.numerator, self.denominator)

    def __add__(self, other):
        other = SymbolicScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.denominator == other.denominator:
            return SymbolicScalar(self.numerator + other.numerator, self.denominator)
        return SymbolicScalar(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = SymbolicScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = SymbolicScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = SymbolicScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        return SymbolicScalar(
            self.numerator * other.numerator,
            self.denominator * other.denominator,
        )

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ScalarDivisionError()
        return SymbolicScalar(self.denominator, self.numerator)

    def __truediv__(self, other):
        other = SymbolicScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = SymbolicScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        return SymbolicScalar(base.numerator ** abs(exponent), base.denominator ** abs(exponent))

    def to_text(self):
        numerator = _poly_text(self.numerator)
        if self.is_polynomial:
            return numerator
        if len(self.numerator) > 1:
            numerator = f"({numerator})"
        return f"{numerator} / ({_poly_text(self.denominator)})"

    @property
    def is_single_term(self):
        return self.is_polynomial and len(self.numerator) <= 1

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"SymbolicScalar({self.to_text()!r})"


def _raw(numerator, denominator):
    scalar = object.__new__(SymbolicScalar)
    object.__setattr__(scalar, "numerator", numerator)
    object.__setattr__(scalar, "denominator", denominator)
    return scalar


def _monomial_text(monom):
    factors = []
    lambda_exponent = monom[L_INDEX] - monom[LI_INDEX]
    exponents = (lambda_exponent,) + tuple(monom[2:])
    for name, exponent in zip(PRINTED_UNITS, exponents):
        if exponent == 1:
            factors.append(name)
        elif exponent:
            factors.append(f"{name}^{exponent}")
    return " * ".join(factors)


def _term_text(monom, coeff):
    units = _monomial_text(monom)
    if not units:
        return gaussian_text(coeff)
    if coeff == QQ_I.one:
        return units
    if coeff == -QQ_I.one:
        return f"-{units}"
    return f"{gaussian_text(coeff)} * {units}"


def _poly_text(poly):
    if not poly:
        return "0"
    pieces = []
    for monom, coeff in sorted(poly.items(), key=lambda item: item[0], reverse=True):
        text = _term_text(monom, coeff)
        if not pieces:
            pieces.append(text)
        elif text.startswith("-"):
            pieces.append(f"- {text[1:]}")
        else:
            pieces.append(f"+ {text}")
    return " ".join(pieces)


ZERO = SymbolicScalar()
ONE = SymbolicScalar.constant(1)


def _sign(value):
    return (value > 0) - (value < 0)


def sign_of_root_expression(u, v, radicand):
    """Exact sign of u + v*sqrt(radicand) for integers u, v."""
    su, sv = _sign(u), _sign(v)
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    difference = u * u - v * v * radicand
    if difference > 0:
        return su
    if difference < 0:
        return sv
    return 0


@dataclass(frozen=True)
class QuadraticSurd:
    """The real number (p + q*sqrt(D)) / r with D squarefree."""

    p: int
    q: int
    D: int
    r: int

    def __post_init__(self):
        for name in ("p", "q", "D", "r"):
            if not isinstance(getattr(self, name), int):
                raise ScalarError(f"Surd field {name} must be an integer.")
        if self.r <= 0:
            raise ScalarError("Surd denominator must be positive.")
        if self.D < 2 or any(power > 1 for power in factorint(self.D).values()):
            raise ScalarError(f"Radicand {self.D} is not a squarefree integer greater than 1.")

    @property
    def is_irrational(self):
        return self.q != 0

    def __float__(self):
        return (self.p + self.q * self.D ** 0.5) / self.r

    def to_text(self):
        sign = "-" if self.q < 0 else "+"
        return f"({self.p} {sign} {abs(self.q)}*sqrt({self.D}))/{self.r}"

    def __str__(self):
        return self.to_text()
