from .types import NCElement, TorusError


def _entry(value):
    element = NCElement.coerce(value)
    if element is NotImplemented:
        raise TorusError(f"Matrix entry {value!r} is not an element.")
    return element


class NCMatrix:
    """Matrix over the torus algebra; vectors are single-column matrices."""

    __slots__ = ("rows",)
    __hash__ = None

    def __init__(self, rows):
        rows = tuple(tuple(_entry(entry) for entry in row) for row in rows)
        if not rows or not rows[0]:
            raise TorusError("Matrices need at least one row and one column.")
        if any(len(row) != len(rows[0]) for row in rows):
            raise TorusError("Matrix rows have different lengths.")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("NCMatrix is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    @classmethod
    def identity(cls, size):
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, row_count, column_count):
        return cls([[0] * column_count for _ in range(row_count)])

    @classmethod
    def column(cls, entries):
        return cls([[entry] for entry in entries])

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    def entry(self, i, j):
        return self.rows[i][j]

    def entries(self):
        return [entry for row in self.rows for entry in row]

    def map(self, function):
        return NCMatrix([[function(entry) for entry in row] for row in self.rows])

    @property
    def is_zero(self):
        return all(entry.is_zero for entry in self.entries())

    def _require_shape(self, other, operation):
        if self.shape != other.shape:
            raise TorusError(f"Cannot {operation} matrices of shapes {self.shape} and {other.shape}.")

    def __add__(self, other):
        self._require_shape(other, "add")
        return NCMatrix([[a + b for a, b in zip(left, right)] for left, right in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._require_shape(other, "subtract")
        return NCMatrix([[a - b for a, b in zip(left, right)] for left, right in zip(self.rows, other.rows)])

    def __matmul__(self, other):
        if self.shape[1] != other.shape[0]:
            raise TorusError(f"Cannot multiply matrices of shapes {self.shape} and {other.shape}.")
        product = []
        for row in self.rows:
            product_row = []
            for j in range(other.shape[1]):
                total = NCElement()
                for k, entry in enumerate(row):
                    if entry.is_zero or other.rows[k][j].is_zero:
                        continue
                    total = total + entry * other.rows[k][j]
                product_row.append(total)
            product.append(product_row)
        return NCMatrix(product)

    def __eq__(self, other):
        if not isinstance(other, NCMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries(), other.entries()))

    def to_rows(self):
        return [[entry.to_text() for entry in row] for row in self.rows]

    def __repr__(self):
        return f"NCMatrix({self.to_rows()!r})"
