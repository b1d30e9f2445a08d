"""Independent dense computations used to cross-check the sparse homology pipeline."""

from itertools import product

from sympy import Matrix, Rational


def _rational(value):
    return Rational(int(value.numerator), int(value.denominator))


def _products(algebra):
    table = {}
    for i, j, k, value in algebra.structure_constants():
        table.setdefault((i, j), []).append((k, _rational(value)))
    return table


class _TensorWords:
    """All words of length n + 1 in the basis of an ungraded algebra, with dense b and t."""

    def __init__(self, algebra, top):
        self.table = _products(algebra)
        self.words = [list(product(range(algebra.dimension), repeat=n + 1)) for n in range(top + 1)]
        self.positions = [{word: i for i, word in enumerate(items)} for items in self.words]

    def dimension(self, n):
        return len(self.words[n])

    def boundary(self, n):
        """b: C_n -> C_(n-1), the wrap-around term carrying (-1)^n."""
        matrix = Matrix.zeros(self.dimension(n - 1), self.dimension(n))
        for col, word in enumerate(self.words[n]):
            for i in range(n):
                for k, c in self.table.get((word[i], word[i + 1]), []):
                    matrix[self.positions[n - 1][word[:i] + (k,) + word[i + 2:]], col] += (-1) ** i * c
            for k, c in self.table.get((word[n], word[0]), []):
                matrix[self.positions[n - 1][(k,) + word[1:n]], col] += (-1) ** n * c
        return matrix

    def one_minus_t(self, n):
        """1 - t on C_n with t(a_0, ..., a_n) = (-1)^n (a_n, a_0, ..., a_(n-1))."""
        matrix = Matrix.eye(self.dimension(n))
        for col, word in enumerate(self.words[n]):
            matrix[self.positions[n][word[-1:] + word[:-1]], col] -= (-1) ** n
        return matrix


def bar_complex_hh(algebra, top):
    """HH_0..HH_top of an ungraded rational algebra from the textbook boundary on all tensor words."""
    words = _TensorWords(algebra, top + 1)

    def boundary_rank(n):
        if n == 0 or not words.dimension(n):
            return 0
        return words.boundary(n).rank()

    ranks = [boundary_rank(n) for n in range(top + 2)]
    return tuple(words.dimension(n) - ranks[n] - ranks[n + 1] for n in range(top + 1))


def connes_complex_hc(algebra, top):
    """HC_0..HC_top of an ungraded rational algebra as homology of C_n / (1 - t) under b."""
    words = _TensorWords(algebra, top + 1)
    coinvariant_ranks = [words.one_minus_t(n).rank() if words.dimension(n) else 0 for n in range(top + 2)]

    def boundary_rank(n):
        # rank of C_n -> C_(n-1) / im(1 - t); b carries im(1 - t) into im(1 - t)
        if n == 0 or not words.dimension(n):
            return 0
        stacked = Matrix.hstack(words.boundary(n), words.one_minus_t(n - 1))
        return stacked.rank() - coinvariant_ranks[n - 1]

    ranks = [boundary_rank(n) for n in range(top + 2)]
    return tuple(
        words.dimension(n) - coinvariant_ranks[n] - ranks[n] - ranks[n + 1]
        for n in range(top + 1)
    )


def commutator_quotient_dimension(algebra):
    """dim A/[A, A] from the span of all e_i e_j - e_j e_i."""
    size = algebra.dimension
    table = {}
    for i, j, k, value in algebra.structure_constants():
        table[(i, j, k)] = _rational(value)
    columns = []
    for i in range(size):
        for j in range(size):
            columns.append([table.get((i, j, k), 0) - table.get((j, i, k), 0) for k in range(size)])
    if not columns:
        return 0
    return size - Matrix(columns).rank()
