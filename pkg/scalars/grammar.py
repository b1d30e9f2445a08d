from fractions import Fraction

from pyparsing import Forward, Opt, ParseException, Regex, Suppress, ZeroOrMore, one_of

from .types import QuadraticSurd, ScalarDivisionError, ScalarError, SymbolicScalar

SIGNED_INT = Regex(r"[+-]?\d+").set_parse_action(lambda tokens: int(tokens[0]))
UNSIGNED_INT = Regex(r"\d+").set_parse_action(lambda tokens: int(tokens[0]))
GAUSSIAN_LITERAL = Regex(r"\d+(?:/\d+)?i?|i\b")
SCALAR_UNIT = Regex(r"(?:L|th|tau|z|c)\b")


def literal_value(text):
    imaginary = text.endswith("i")
    digits = text[:-1] if imaginary else text
    if not digits:
        digits = "1"
    numerator, _, denominator = digits.partition("/")
    if denominator and int(denominator) == 0:
        raise ScalarDivisionError()
    value = Fraction(int(numerator), int(denominator or 1))
    return SymbolicScalar.constant(0, value) if imaginary else SymbolicScalar.constant(value)


class ScalarAlgebra:
    """Arithmetic callbacks the expression grammar folds its tokens with."""

    def power(self, value, exponent):
        return value ** exponent

    def negate(self, value):
        return -value

    def multiply(self, left, right):
        return left * right

    def divide(self, left, right):
        return left / right

    def add(self, left, right):
        return left + right

    def subtract(self, left, right):
        return left - right


def build_expression(operand, algebra):
    """Infix grammar over `operand` with ^ (integer exponents), unary signs, * / and + -."""
    expression = Forward()
    atom = operand | (Suppress("(") + expression + Suppress(")"))

    power = atom + Opt(Suppress("^") + SIGNED_INT)
    power.set_parse_action(
        lambda tokens: algebra.power(tokens[0], tokens[1]) if len(tokens) > 1 else tokens[0]
    )

    signed = ZeroOrMore(one_of("+ -")) + power

    def apply_signs(tokens):
        value = tokens[-1]
        for sign in tokens[:-1]:
            if sign == "-":
                value = algebra.negate(value)
        return value

    signed.set_parse_action(apply_signs)

    def fold(operations):
        def action(tokens):
            value = tokens[0]
            for index in range(1, len(tokens), 2):
                value = operations[tokens[index]](value, tokens[index + 1])
            return value

        return action

    term = signed + ZeroOrMore(one_of("* /") + signed)
    term.set_parse_action(fold({"*": algebra.multiply, "/": algebra.divide}))

    expression <<= term + ZeroOrMore(one_of("+ -") + term)
    expression.set_parse_action(fold({"+": algebra.add, "-": algebra.subtract}))
    return expression


_SCALAR_OPERAND = (
    GAUSSIAN_LITERAL.copy().set_parse_action(lambda tokens: literal_value(tokens[0]))
    | SCALAR_UNIT.copy().set_parse_action(lambda tokens: SymbolicScalar.unit(tokens[0]))
)
SCALAR_EXPRESSION = build_expression(_SCALAR_OPERAND, ScalarAlgebra())

SURD = (
    Suppress("(")
    + SIGNED_INT
    + one_of("+ -")
    + UNSIGNED_INT
    + Suppress("*")
    + Suppress("sqrt")
    + Suppress("(")
    + UNSIGNED_INT
    + Suppress(")")
    + Suppress(")")
    + Suppress("/")
    + UNSIGNED_INT
)


def parse_scalar(text):
    if not isinstance(text, str):
        raise ScalarError(f"Scalar must be text, got {type(text).__name__}.")
    try:
        return SCALAR_EXPRESSION.parse_string(text, parse_all=True)[0]
    except ParseException as exc:
        raise ScalarError(f"Cannot parse scalar {text!r} at column {exc.col}: {exc.msg}")


def parse_surd(text):
    if not isinstance(text, str):
        raise ScalarError(f"Surd must be text, got {type(text).__name__}.")
    try:
        p, sign, q, radicand, r = SURD.parse_string(text, parse_all=True)
    except ParseException as exc:
        raise ScalarError(f"Cannot parse surd {text!r} at column {exc.col}: {exc.msg}")
    return QuadraticSurd(p, q if sign == "+" else -q, radicand, r)
