from pyparsing import ParseException, Regex

from scalars.grammar import GAUSSIAN_LITERAL, SCALAR_UNIT, ScalarAlgebra, build_expression, literal_value
from scalars.types import ScalarError, SymbolicScalar

from .types import U1, U2, NCElement, TorusError

GENERATOR = Regex(r"U[12]\b")


class TorusAlgebra(ScalarAlgebra):
    def divide(self, left, right):
        if not right.is_scalar:
            raise TorusError(f"Cannot divide by the non-scalar element {right.to_text()}.")
        return left * right.coefficient(0, 0).inverse()


_ELEMENT_OPERAND = (
    GENERATOR.copy().set_parse_action(lambda tokens: U1 if tokens[0] == "U1" else U2)
    | GAUSSIAN_LITERAL.copy().set_parse_action(lambda tokens: NCElement.scalar(literal_value(tokens[0])))
    | SCALAR_UNIT.copy().set_parse_action(lambda tokens: NCElement.scalar(SymbolicScalar.unit(tokens[0])))
)
ELEMENT_EXPRESSION = build_expression(_ELEMENT_OPERAND, TorusAlgebra())


def parse_element(text):
    if isinstance(text, int) and not isinstance(text, bool):
        return NCElement.scalar(text)
    if not isinstance(text, str):
        raise TorusError(f"Element must be text, got {type(text).__name__}.")
    try:
        return ELEMENT_EXPRESSION.parse_string(text, parse_all=True)[0]
    except ParseException as exc:
        raise TorusError(f"Cannot parse element {text!r} at column {exc.col}: {exc.msg}")
    except ScalarError as exc:
        raise TorusError(f"Cannot parse element {text!r}: {exc.detail}")
