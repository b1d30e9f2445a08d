from functools import lru_cache

from common.errors import InputError
from scalars.types import ONE, ZERO, SymbolicScalar


class TorusError(InputError):
    default_detail = "Invalid noncommutative torus element."


@lru_cache(maxsize=256)
def twist(exponent):
    return SymbolicScalar.unit("L") ** exponent


def _monomial_text(m, n):
    factors = []
    for name, exponent in (("U1", m), ("U2", n)):
        if exponent == 1:
            factors.append(name)
        elif exponent:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors)


def coefficient_text(scalar):
    text = scalar.to_text()
    if scalar.is_single_term:
        return text
    return f"({text})"


class NCElement:
    """Finitely supported sum of a[m, n] * U1^m U2^n; zero coefficients are never stored."""

    __slots__ = ("coeffs",)
    __hash__ = None

    def __init__(self, coeffs=None):
        cleaned = {}
        for (m, n), value in (coeffs or {}).items():
            value = SymbolicScalar.coerce(value)
            if value is NotImplemented:
                raise TorusError(f"Coefficient of U1^{m} U2^{n} is not a scalar.")
            if not value.is_zero:
                cleaned[(int(m), int(n))] = value
        object.__setattr__(self, "coeffs", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("NCElement is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    @classmethod
    def monomial(cls, m, n, coeff=ONE):
        return cls({(m, n): coeff})

    @classmethod
    def scalar(cls, value):
        return cls({(0, 0): value})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, NCElement):
            return value
        scalar = SymbolicScalar.coerce(value)
        if scalar is NotImplemented:
            return NotImplemented
        return cls.scalar(scalar)

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monomial(self):
        return len(self.coeffs) == 1

    @property
    def is_scalar(self):
        return not self.coeffs or set(self.coeffs) == {(0, 0)}

    def coefficient(self, m, n):
        return self.coeffs.get((m, n), ZERO)

    def support(self):
        return sorted(self.coeffs)

    def terms(self):
        return [(key, self.coeffs[key]) for key in self.support()]

    def map_coefficients(self, function):
        return NCElement({key: function(key, value) for key, value in self.coeffs.items()})

    def __eq__(self, other):
        other = NCElement.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(value == other.coeffs[key] for key, value in self.coeffs.items())

    def __bool__(self):
        return not self.is_zero

    def __neg__(self):
        return self.map_coefficients(lambda key, value: -value)

    def __add__(self, other):
        other = NCElement.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        total = dict(self.coeffs)
        for key, value in other.coeffs.items():
            total[key] = total[key] + value if key in total else value
        return NCElement(total)

    __radd__ = __add__

    def __sub__(self, other):
        other = NCElement.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = NCElement.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, scalar):
        scalar = SymbolicScalar.coerce(scalar)
        if scalar.is_zero:
            return NCElement()
        return self.map_coefficients(lambda key, value: scalar * value)

    def __mul__(self, other):
        if isinstance(other, NCElement):
            return self._twisted_product(other)
        scalar = SymbolicScalar.coerce(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def __rmul__(self, other):
        scalar = SymbolicScalar.coerce(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def _twisted_product(self, other):
        # U1 U2 = L U2 U1, so U2 U1 = L^-1 U1 U2. Carrying U2^b to the right
        # of U1^c takes b*c adjacent swaps: U1^a U2^b U1^c U2^d = L^(-bc) U1^(a+c) U2^(b+d).
        total = {}
        for (a, b), left in self.coeffs.items():
            for (c, d), right in other.coeffs.items():
                value = left * right
                if b * c:
                    value = value * twist(-b * c)
                key = (a + c, b + d)
                total[key] = total[key] + value if key in total else value
        return NCElement(total)

    def inverse(self):
        if not self.is_monomial:
            raise TorusError(f"{self.to_text()} is not an invertible monomial.")
        ((a, b), value), = self.coeffs.items()
        return NCElement.monomial(-a, -b, twist(-a * b) / value)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = NCElement.scalar(ONE)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def to_text(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for (m, n), value in self.terms():
            units = _monomial_text(m, n)
            if not units:
                text = value.to_text() if value.is_single_term else f"({value.to_text()})"
            elif value == ONE:
                text = units
            elif value == -ONE:
                text = f"-{units}"
            else:
                text = f"{coefficient_text(value)} * {units}"
            if not pieces:
                pieces.append(text)
            elif text.startswith("-"):
                pieces.append(f"- {text[1:]}")
            else:
                pieces.append(f"+ {text}")
        return " ".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"NCElement({self.to_text()!r})"


U1 = NCElement.monomial(1, 0)
U2 = NCElement.monomial(0, 1)
