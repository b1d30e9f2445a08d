from django.conf import settings

from common.errors import BudgetExceeded
from common.logs_file import logger

from .linalg import SparseMap, block_map
from .types import KOSZUL, PRINTED, CyclicError, add_into


def count_words(presentation, n):
    """Number of cyclically composable words of length n + 1 (trace of the adjacency power)."""
    objects = presentation.objects
    adjacency = {x: {y: 0 for y in objects} for x in objects}
    for f in range(presentation.size):
        adjacency[presentation.targets[f]][presentation.sources[f]] += 1

    power = {x: {y: int(x == y) for y in objects} for x in objects}
    for _ in range(n + 1):
        power = {
            x: {y: sum(power[x][z] * adjacency[z][y] for z in objects) for y in objects}
            for x in objects
        }
    return sum(power[x][x] for x in objects)


def enumerate_words(presentation, n):
    """Words (a_0, ..., a_n) with a_i ending where a_{i-1} starts and a_n ending where a_0 starts."""
    words = []

    def extend(prefix):
        if len(prefix) == n + 1:
            if presentation.sources[prefix[-1]] == presentation.targets[prefix[0]]:
                words.append(tuple(prefix))
            return
        for f in presentation.morphisms_into(presentation.sources[prefix[-1]]):
            prefix.append(f)
            extend(prefix)
            prefix.pop()

    for first in range(presentation.size):
        extend([first])
    return words


def _sign(exponent):
    return -1 if exponent % 2 else 1


class CyclicModule:
    """Cyclic module of a presentation in Hochschild lengths 0..n_max.

    C_n has the words (a_0, ..., a_n) as basis. Faces are indexed so that
    face(n, i) merges a_{n-i} with its right neighbour, face(n, 0) being the
    wrap-around face a_n * a_0. The wrap-around face carries the Koszul sign
    |a_n| * (|a_0| + ... + |a_{n-1}|), plus n under the printed convention.
    """

    def __init__(self, presentation, n_max, *, convention=KOSZUL, budget=None):
        if n_max < 0:
            raise CyclicError("max degree must be nonnegative.")
        if convention not in (KOSZUL, PRINTED):
            raise CyclicError(f"Unknown sign convention {convention!r}.")
        budget = settings.WORKBENCH_TERM_BUDGET if budget is None else budget

        for n in range(n_max + 1):
            size = count_words(presentation, n)
            if size > budget:
                logger.error("Cyclic module degree %s needs %s words, budget %s", n, size, budget)
                raise BudgetExceeded(
                    f"degree {n} term has {size} words, budget is {budget}.",
                    dimension=size,
                    budget=budget,
                )

        self.presentation = presentation
        self.n_max = n_max
        self.convention = convention
        self.domain = presentation.domain
        self.words = [enumerate_words(presentation, n) for n in range(n_max + 1)]
        self._positions = [{word: i for i, word in enumerate(words)} for words in self.words]
        self._cache = {}
        logger.info(
            "Built cyclic module up to degree %s (%s convention): %s",
            n_max,
            convention,
            [len(words) for words in self.words],
        )

    def dimension(self, n):
        return len(self.words[n])

    def word_degree(self, word):
        return sum(self.presentation.degrees[f] for f in word)

    def _require(self, n, low=0, high=None):
        high = self.n_max if high is None else high
        if not low <= n <= high:
            raise CyclicError(f"degree {n} is outside {low}..{high}.")

    def _cached(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def _linear_map(self, n_from, n_to, image):
        positions = self._positions[n_to]
        columns = []
        for word in self.words[n_from]:
            column = {}
            for target, coeff in image(word).items():
                add_into(column, positions[target], coeff)
            columns.append(column)
        return SparseMap.from_columns(columns, self.dimension(n_to), self.domain)

    def loday_face(self, n, j):
        """d_j: merge a_j a_{j+1} for j < n; d_n is the signed wrap-around a_n a_0."""
        self._require(n, low=1)
        if not 0 <= j <= n:
            raise CyclicError(f"face index {j} is outside 0..{n}.")
        P = self.presentation

        def image(word):
            result = {}
            if j < n:
                for h, c in P.compose(word[j], word[j + 1]).items():
                    add_into(result, word[:j] + (h,) + word[j + 2:], c)
                return result
            exponent = P.degrees[word[n]] * self.word_degree(word[:n])
            if self.convention == PRINTED:
                exponent += n
            for h, c in P.compose(word[n], word[0]).items():
                add_into(result, (h,) + word[1:n], c if _sign(exponent) > 0 else -c)
            return result

        return self._cached(("d", n, j), lambda: self._linear_map(n, n - 1, image))

    def face(self, n, i):
        return self.loday_face(n, n - i)

    def cyclic_operator(self, n):
        """t(a_0, ..., a_n) = (-1)^(n + |a_n|(|a_0| + ... + |a_{n-1}|)) (a_n, a_0, ..., a_{n-1})."""
        self._require(n)
        P = self.presentation
        one = self.domain.one

        def image(word):
            exponent = n + P.degrees[word[n]] * self.word_degree(word[:n])
            return {(word[n],) + word[:n]: one if _sign(exponent) > 0 else -one}

        return self._cached(("t", n), lambda: self._linear_map(n, n, image))

    def norm(self, n):
        def build():
            t = self.cyclic_operator(n)
            total, power = SparseMap.identity(self.dimension(n), self.domain), t
            for _ in range(n):
                total = total + power
                power = t @ power
            return total

        return self._cached(("N", n), build)

    def extra_degeneracy(self, n):
        """s(a_0, ..., a_n) = (1, a_0, ..., a_n) with the identity of the target of a_0."""
        self._require(n, high=self.n_max - 1)
        P = self.presentation
        if not P.is_unital:
            raise CyclicError("non-unital presentation: the Connes operator needs identities.")

        def image(word):
            return {(e,) + word: c for e, c in P.identity(P.targets[word[0]]).items()}

        return self._cached(("s", n), lambda: self._linear_map(n, n + 1, image))

    def hochschild_boundary(self, n):
        """b = sum (-1)^i face(n, i), equal to (-1)^n times the Loday boundary."""
        self._require(n)

        def build():
            if n == 0:
                return SparseMap.zeros((0, self.dimension(0)), self.domain)
            total = SparseMap.zeros((self.dimension(n - 1), self.dimension(n)), self.domain)
            for i in range(n + 1):
                face = self.face(n, i)
                total = total - face if i % 2 else total + face
            return total

        return self._cached(("b", n), build)

    def connes_operator(self, n):
        """B = (-1)^n (1 - t) s N : C_n -> C_{n+1}."""
        self._require(n, high=self.n_max - 1)

        def build():
            one_minus_t = SparseMap.identity(self.dimension(n + 1), self.domain) - self.cyclic_operator(n + 1)
            B = one_minus_t @ self.extra_degeneracy(n) @ self.norm(n)
            return -B if n % 2 else B

        return self._cached(("B", n), build)

    def internal_differential(self, n):
        """delta = (-1)^n sum_i (-1)^(|a_0| + ... + |a_{i-1}|) (..., d a_i, ...)."""
        self._require(n)
        P = self.presentation

        def image(word):
            result = {}
            for i, f in enumerate(word):
                sign = _sign(n + self.word_degree(word[:i]))
                for h, c in P.differential(f).items():
                    add_into(result, word[:i] + (h,) + word[i + 1:], c if sign > 0 else -c)
            return result

        return self._cached(("delta", n), lambda: self._linear_map(n, n, image))


def _columns(sparse_map):
    return sparse_map.transpose().rows


class MixedComplex:
    """Total complex of a cyclic module graded by Hochschild length minus internal degree.

    boundary(N) is b + delta out of total degree N; connes(N) is B out of
    total degree N, dropping words of the top length, which have no image.
    """

    def __init__(self, module):
        self.module = module
        self.domain = module.domain
        cells = {}
        for n, words in enumerate(module.words):
            for col, word in enumerate(words):
                cells.setdefault(n - module.word_degree(word), []).append((n, col))
        self._cells = cells
        self._index = {N: {cell: i for i, cell in enumerate(items)} for N, items in cells.items()}
        self._cache = {}

    @property
    def exact_through(self):
        """Highest total degree whose chains are all present, None if positive degrees make every degree partial."""
        if self.module.presentation.max_degree > 0:
            return None
        return self.module.n_max

    @property
    def min_degree(self):
        return min(self._cells, default=0)

    @property
    def max_degree(self):
        return max(self._cells, default=0)

    def dimension(self, N):
        return len(self._cells.get(N, ()))

    def _assemble(self, N_from, N_to, parts):
        target = self._index.get(N_to, {})
        columns = []
        for n, col in self._cells.get(N_from, ()):
            column = {}
            for shift, per_length in parts:
                if not 0 <= n + shift <= self.module.n_max or per_length(n) is None:
                    continue
                for row, value in per_length(n).get(col, {}).items():
                    add_into(column, target[(n + shift, row)], value)
            columns.append(column)
        return SparseMap.from_columns(columns, self.dimension(N_to), self.domain)

    def _module_columns(self, name, n):
        key = (name, n)
        if key not in self._cache:
            module = self.module
            if name == "b":
                self._cache[key] = _columns(module.hochschild_boundary(n)) if n >= 1 else {}
            elif name == "delta":
                self._cache[key] = _columns(module.internal_differential(n))
            else:
                self._cache[key] = _columns(module.connes_operator(n)) if n < module.n_max else None
        return self._cache[key]

    def boundary(self, N):
        key = ("boundary", N)
        if key not in self._cache:
            parts = [(-1, lambda n: self._module_columns("b", n))]
            if self.module.presentation.has_differential:
                parts.append((0, lambda n: self._module_columns("delta", n)))
            self._cache[key] = self._assemble(N, N - 1, parts)
        return self._cache[key]

    def connes(self, N):
        key = ("connes", N)
        if key not in self._cache:
            self._cache[key] = self._assemble(N, N + 1, [(1, lambda n: self._module_columns("B", n))])
        return self._cache[key]


class ConnesBicomplex:
    """(b, B) bicomplex: degree M collects the total-complex degrees M - 2p for p >= 0."""

    def __init__(self, mixed):
        self.mixed = mixed
        self.domain = mixed.domain
        self._cache = {}
        self._ranks = {}

    def components(self, M):
        low = self.mixed.min_degree
        return [M - 2 * p for p in range(0, (M - low) // 2 + 1)] if M >= low else []

    def dimension(self, M):
        return sum(self.mixed.dimension(N) for N in self.components(M))

    def differential(self, M):
        key = ("D", M)
        if key not in self._cache:
            source = self.components(M)
            target = self.components(M - 1)
            blocks = {}
            for p, N in enumerate(source):
                if p < len(target):
                    blocks[(p, p)] = self.mixed.boundary(N)
                if p >= 1:
                    blocks[(p - 1, p)] = self.mixed.connes(N)
            self._cache[key] = block_map(
                blocks,
                [self.mixed.dimension(N) for N in target],
                [self.mixed.dimension(N) for N in source],
                self.domain,
            )
        return self._cache[key]

    def periodicity(self, M):
        """S: degree M -> degree M - 2, dropping the p = 0 column."""
        source = self.components(M)
        target = self.components(M - 2)
        blocks = {
            (p - 1, p): SparseMap.identity(self.mixed.dimension(N), self.domain)
            for p, N in enumerate(source)
            if p >= 1 and p - 1 < len(target)
        }
        return block_map(
            blocks,
            [self.mixed.dimension(N) for N in target],
            [self.mixed.dimension(N) for N in source],
            self.domain,
        )

    def rank(self, M):
        if M not in self._ranks:
            self._ranks[M] = self.differential(M).rank()
        return self._ranks[M]

    def homology_dimension(self, M):
        return self.dimension(M) - self.rank(M) - self.rank(M + 1)
