from sympy.polys.matrices import DomainMatrix

from .types import add_into


class SparseMap:
    """Exact linear map K^cols -> K^rows stored as {row: {col: value}} without zeros."""

    __slots__ = ("rows", "shape", "domain")

    def __init__(self, rows, shape, domain):
        self.rows = {i: dict(row) for i, row in rows.items() if row}
        self.shape = tuple(shape)
        self.domain = domain

    @classmethod
    def zeros(cls, shape, domain):
        return cls({}, shape, domain)

    @classmethod
    def identity(cls, size, domain):
        return cls({i: {i: domain.one} for i in range(size)}, (size, size), domain)

    @classmethod
    def from_columns(cls, columns, height, domain):
        """Columns are {row: value} images of the source basis vectors."""
        rows = {}
        for j, column in enumerate(columns):
            for i, value in column.items():
                add_into(rows.setdefault(i, {}), j, value)
        return cls(rows, (height, len(columns)), domain)

    def is_zero(self):
        return not self.rows

    def _require_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._require_same_shape(other)
        rows = {i: dict(row) for i, row in self.rows.items()}
        for i, row in other.rows.items():
            target = rows.setdefault(i, {})
            for j, value in row.items():
                add_into(target, j, value)
        return SparseMap(rows, self.shape, self.domain)

    def __neg__(self):
        return SparseMap({i: {j: -v for j, v in row.items()} for i, row in self.rows.items()}, self.shape, self.domain)

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        rows = {}
        for i, row in self.rows.items():
            target = {}
            for j, a in row.items():
                for k, b in other.rows.get(j, {}).items():
                    add_into(target, k, a * b)
            if target:
                rows[i] = target
        return SparseMap(rows, (self.shape[0], other.shape[1]), self.domain)

    def __eq__(self, other):
        if not isinstance(other, SparseMap):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def apply(self, vector):
        result = {}
        for i, row in self.rows.items():
            total = self.domain.zero
            for j, value in row.items():
                if j in vector:
                    total += value * vector[j]
            if total:
                result[i] = total
        return result

    def transpose(self):
        rows = {}
        for i, row in self.rows.items():
            for j, value in row.items():
                rows.setdefault(j, {})[i] = value
        return SparseMap(rows, (self.shape[1], self.shape[0]), self.domain)

    def to_domain_matrix(self):
        return DomainMatrix(self.rows, self.shape, self.domain)

    def to_lists(self):
        return [[self.rows.get(i, {}).get(j, self.domain.zero) for j in range(self.shape[1])] for i in range(self.shape[0])]

    def rank(self):
        return sum(_block_rank(block, self.domain) for block in self._blocks())

    def _blocks(self):
        """Split the nonzero pattern into independent row/column blocks."""
        parent = {}

        def find(col):
            while parent[col] != col:
                parent[col] = parent[parent[col]]
                col = parent[col]
            return col

        for row in self.rows.values():
            cols = list(row)
            for col in cols:
                parent.setdefault(col, col)
            root = find(cols[0])
            for col in cols[1:]:
                other = find(col)
                if other != root:
                    parent[other] = root

        blocks = {}
        for i in sorted(self.rows):
            row = self.rows[i]
            blocks.setdefault(find(next(iter(row))), []).append(row)
        return list(blocks.values())

    def kernel(self):
        """Basis of the null space as a list of {col: value} vectors."""
        height, width = self.shape
        if not width:
            return []
        if self.is_zero():
            return [{j: self.domain.one} for j in range(width)]
        null = self.to_domain_matrix().nullspace().to_dok()
        vectors = {}
        for (r, c), value in null.items():
            vectors.setdefault(r, {})[c] = value
        return [vectors[r] for r in sorted(vectors)]


def _block_rank(rows, domain):
    cols = sorted({j for row in rows for j in row})
    if len(rows) == 1 or len(cols) == 1:
        return 1
    position = {j: k for k, j in enumerate(cols)}
    data = {i: {position[j]: v for j, v in row.items()} for i, row in enumerate(rows)}
    return DomainMatrix(data, (len(rows), len(cols)), domain).rank()


def block_map(blocks, row_sizes, col_sizes, domain):
    """Assemble {(block_row, block_col): SparseMap} into one map."""
    row_offsets = _offsets(row_sizes)
    col_offsets = _offsets(col_sizes)
    rows = {}
    for (r, c), block in blocks.items():
        for i, row in block.rows.items():
            target = rows.setdefault(row_offsets[r] + i, {})
            for j, value in row.items():
                add_into(target, col_offsets[c] + j, value)
    return SparseMap(rows, (sum(row_sizes), sum(col_sizes)), domain)


def _offsets(sizes):
    offsets, total = [], 0
    for size in sizes:
        offsets.append(total)
        total += size
    return offsets


def span_rank(vectors, height, domain):
    return SparseMap.from_columns(vectors, height, domain).rank()
