from dataclasses import dataclass

from sympy.polys.domains import QQ, QQ_I

from common.errors import InputError
from scalars.types import gaussian

KOSZUL = "koszul"
PRINTED = "printed"
SIGN_CONVENTION_CHOICES = (
    (KOSZUL, "Koszul sign on the wrap-around face"),
    (PRINTED, "Wrap-around face also carries (-1)^n"),
)

SINGLE_OBJECT = "*"


class CyclicError(InputError):
    default_detail = "Invalid presentation."


def add_into(vector, index, coeff):
    value = vector.get(index)
    value = coeff if value is None else value + coeff
    if value:
        vector[index] = value
    else:
        vector.pop(index, None)


class Presentation:
    """Finite graded linear category given by basis morphisms.

    Morphism `f` goes from `sources[f]` to `targets[f]` in cohomological degree
    `degrees[f]`. `compose(f, g)` is f after g and is only nonzero when
    sources[f] == targets[g]. Coefficients live in QQ, or QQ_I as soon as one
    input coefficient is not real.
    """

    def __init__(self, *, objects, names, sources, targets, degrees, composition, differential, identities):
        gaussian_tables = {
            "composition": {key: _gaussian_vector(terms) for key, terms in composition.items()},
            "differential": {key: _gaussian_vector(terms) for key, terms in differential.items()},
        }
        identity_table = None
        if identities is not None:
            identity_table = {obj: _gaussian_vector(terms) for obj, terms in identities.items()}

        values = [v for table in gaussian_tables.values() for terms in table.values() for v in terms.values()]
        if identity_table:
            values += [v for terms in identity_table.values() for v in terms.values()]
        self.domain = QQ if all(not v.y for v in values) else QQ_I
        convert = (lambda v: v.x) if self.domain == QQ else (lambda v: v)

        self.objects = tuple(objects)
        self.names = tuple(names)
        self.sources = tuple(sources)
        self.targets = tuple(targets)
        self.degrees = tuple(int(d) for d in degrees)
        self._composition = {
            key: {h: convert(v) for h, v in terms.items()}
            for key, terms in gaussian_tables["composition"].items()
            if terms
        }
        self._differential = {
            key: {h: convert(v) for h, v in terms.items()}
            for key, terms in gaussian_tables["differential"].items()
            if terms
        }
        self._identities = None
        if identity_table is not None:
            self._identities = {
                obj: {h: convert(v) for h, v in identity_table.get(obj, {}).items()}
                for obj in self.objects
            }
        self._into = {obj: tuple(f for f in range(self.size) if self.targets[f] == obj) for obj in self.objects}
        self._verify()

    @property
    def size(self):
        return len(self.names)

    @property
    def is_unital(self):
        return self._identities is not None

    @property
    def is_graded(self):
        return any(self.degrees)

    @property
    def has_differential(self):
        return bool(self._differential)

    @property
    def max_degree(self):
        return max(self.degrees, default=0)

    def morphisms_into(self, obj):
        return self._into[obj]

    def composable(self, f, g):
        return self.sources[f] == self.targets[g]

    def compose(self, f, g):
        return self._composition.get((f, g), {})

    def differential(self, f):
        return self._differential.get(f, {})

    def identity(self, obj):
        if self._identities is None:
            raise CyclicError("Presentation has no identities.")
        return self._identities[obj]

    def compose_vectors(self, u, v):
        result = {}
        for f, a in u.items():
            for g, b in v.items():
                for h, c in self.compose(f, g).items():
                    add_into(result, h, a * b * c)
        return result

    def differentiate(self, u):
        result = {}
        for f, a in u.items():
            for h, c in self.differential(f).items():
                add_into(result, h, a * c)
        return result

    def _label(self, f):
        return self.names[f]

    def _verify(self):
        one = self.domain.one

        for (f, g), terms in self._composition.items():
            if not self.composable(f, g):
                raise CyclicError(f"composition: {self._label(f)} and {self._label(g)} are not composable.")
            for h in terms:
                if (self.sources[h], self.targets[h]) != (self.sources[g], self.targets[f]):
                    raise CyclicError(
                        f"composition: {self._label(f)}*{self._label(g)} has a term {self._label(h)} with wrong endpoints."
                    )
                if self.degrees[h] != self.degrees[f] + self.degrees[g]:
                    raise CyclicError(
                        f"composition: {self._label(f)}*{self._label(g)} has a term {self._label(h)} of wrong degree."
                    )

        for f, terms in self._differential.items():
            for h in terms:
                if (self.sources[h], self.targets[h]) != (self.sources[f], self.targets[f]):
                    raise CyclicError(f"differential: d({self._label(f)}) leaves Hom({self.sources[f]}, {self.targets[f]}).")
                if self.degrees[h] != self.degrees[f] + 1:
                    raise CyclicError(f"differential: d({self._label(f)}) has a term of wrong degree.")
            if self.differentiate(terms):
                raise CyclicError(f"differential: d^2({self._label(f)}) is not zero.")

        if self._identities is not None:
            for obj, terms in self._identities.items():
                for h in terms:
                    if self.sources[h] != obj or self.targets[h] != obj or self.degrees[h]:
                        raise CyclicError(f"identity of {obj}: {self._label(h)} is not a degree 0 endomorphism.")
            for f in range(self.size):
                basis = {f: one}
                if self.compose_vectors(self.identity(self.targets[f]), basis) != basis:
                    raise CyclicError(f"unit law fails on the left of {self._label(f)}.")
                if self.compose_vectors(basis, self.identity(self.sources[f])) != basis:
                    raise CyclicError(f"unit law fails on the right of {self._label(f)}.")

        for f in range(self.size):
            for g in self.morphisms_into(self.sources[f]):
                for h in self.morphisms_into(self.sources[g]):
                    left = self.compose_vectors(self.compose(f, g), {h: one})
                    right = self.compose_vectors({f: one}, self.compose(g, h))
                    if left != right:
                        raise CyclicError(
                            f"composition is not associative at ({self._label(f)}, {self._label(g)}, {self._label(h)})."
                        )

        for f in range(self.size):
            for g in self.morphisms_into(self.sources[f]):
                left = self.differentiate(self.compose(f, g))
                right = self.compose_vectors(self.differentiate({f: one}), {g: one})
                sign = -one if self.degrees[f] % 2 else one
                for h, c in self.compose_vectors({f: one}, self.differentiate({g: one})).items():
                    add_into(right, h, sign * c)
                if left != right:
                    raise CyclicError(f"Leibniz rule fails at ({self._label(f)}, {self._label(g)}).")


def _gaussian_vector(terms):
    vector = {}
    for index, coeff in terms.items():
        add_into(vector, index, gaussian(coeff))
    return vector


class AlgebraPresentation(Presentation):
    """Finite-dimensional algebra: basis names, unit coordinates, e_i * e_j = sum value * e_k."""

    def __init__(self, basis, unit, mult):
        basis = tuple(basis)
        size = len(basis)
        composition = {}
        for i, j, k, value in mult:
            for index in (i, j, k):
                if not 0 <= index < size:
                    raise CyclicError(f"mult: index {index} is outside the basis.")
            add_into(composition.setdefault((i, j), {}), k, gaussian(value))

        identities = None
        if unit is not None:
            if len(unit) != size:
                raise CyclicError(f"unit: expected {size} coordinates, got {len(unit)}.")
            identities = {SINGLE_OBJECT: {i: value for i, value in enumerate(unit)}}

        self.basis = basis
        super().__init__(
            objects=(SINGLE_OBJECT,),
            names=basis,
            sources=(SINGLE_OBJECT,) * size,
            targets=(SINGLE_OBJECT,) * size,
            degrees=(0,) * size,
            composition=composition,
            differential={},
            identities=identities,
        )

    @property
    def dimension(self):
        return self.size

    def unit_vector(self):
        identity = self.identity(SINGLE_OBJECT)
        return [identity.get(i, self.domain.zero) for i in range(self.size)]

    def structure_constants(self):
        """Sparse triples (i, j, k, value), sorted."""
        return sorted(
            (i, j, k, value)
            for (i, j), terms in self._composition.items()
            for k, value in terms.items()
        )

    def as_category(self):
        """The same algebra as a one-object dg category concentrated in degree 0."""
        names = self.basis
        return DgCategoryPresentation(
            objects=[SINGLE_OBJECT],
            morphisms=[(name, SINGLE_OBJECT, SINGLE_OBJECT, 0) for name in names],
            identities=(
                {SINGLE_OBJECT: {names[i]: v for i, v in self.identity(SINGLE_OBJECT).items()}}
                if self.is_unital
                else None
            ),
            differential=[],
            composition=[(names[i], names[j], names[k], value) for i, j, k, value in self.structure_constants()],
        )


class DgCategoryPresentation(Presentation):
    """Finite dg category: named objects, graded Hom bases, differential and composition by name."""

    def __init__(self, objects, morphisms, identities, differential, composition):
        objects = tuple(objects)
        if len(set(objects)) != len(objects):
            raise CyclicError("objects: names must be unique.")

        names, sources, targets, degrees = [], [], [], []
        for name, source, target, degree in morphisms:
            for endpoint in (source, target):
                if endpoint not in objects:
                    raise CyclicError(f"morphisms: {name} uses unknown object {endpoint!r}.")
            names.append(name)
            sources.append(source)
            targets.append(target)
            degrees.append(degree)
        if len(set(names)) != len(names):
            raise CyclicError("morphisms: names must be unique.")
        index = {name: i for i, name in enumerate(names)}

        def lookup(name, where):
            if name not in index:
                raise CyclicError(f"{where}: unknown morphism {name!r}.")
            return index[name]

        composition_table = {}
        for f, g, h, value in composition:
            key = (lookup(f, "composition"), lookup(g, "composition"))
            add_into(composition_table.setdefault(key, {}), lookup(h, "composition"), gaussian(value))

        differential_table = {}
        for f, h, value in differential:
            add_into(differential_table.setdefault(lookup(f, "differential"), {}), lookup(h, "differential"), gaussian(value))

        identity_table = None
        if identities is not None:
            identity_table = {}
            for obj, terms in identities.items():
                if obj not in objects:
                    raise CyclicError(f"identities: unknown object {obj!r}.")
                identity_table[obj] = {lookup(name, "identities"): value for name, value in terms.items()}
            missing = [obj for obj in objects if obj not in identity_table]
            if missing:
                raise CyclicError(f"identities: no identity for {', '.join(missing)}.")

        super().__init__(
            objects=objects,
            names=names,
            sources=sources,
            targets=targets,
            degrees=degrees,
            composition=composition_table,
            differential=differential_table,
            identities=identity_table,
        )


@dataclass(frozen=True)
class HomologyResult:
    """Dimensions per degree over the coefficient field.

    `exact_through` is the highest degree whose value is unaffected by the
    length truncation (None when internal degrees are positive and no degree
    is guaranteed). For periodic homology `degrees` is ("even", "odd") and a
    parity the window cannot decide has dimension None.
    """

    theory: str
    degrees: tuple
    dimensions: tuple
    field: str
    exact_through: int = None
    stabilized: bool = None

    def table(self):
        if self.dimensions is None:
            return [(degree, None) for degree in self.degrees]
        return list(zip(self.degrees, self.dimensions))

    def dimension(self, degree):
        return dict(self.table())[degree]
