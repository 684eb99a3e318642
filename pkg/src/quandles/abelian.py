"""Finite abelian groups as explicit products of cyclic groups.

Elements are integer tuples, one coordinate per cyclic factor; homomorphisms
are integer matrices acting on column vectors. Groups are stored exactly in
the moduli form they were supplied in (no silent normalization to invariant
factors); :func:`quotient_invariants` is the one canonicalizing operation,
and it goes through an integer Smith normal form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import CapExceeded

DEFAULT_SUBGROUP_CAP = 10**6


@dataclass(frozen=True)
class FinAbGroup:
    """Direct product of cyclic groups Z_d1 x ... x Z_dk.

    Moduli of 1 are allowed (trivial coordinates); they arise in tensor
    squares, where keeping them preserves the pair indexing.

    >>> g = FinAbGroup((2, 4))
    >>> g.order
    8
    >>> g.add((1, 3), (1, 2))
    (0, 1)
    """

    moduli: tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(d) for d in self.moduli)
        if any(d < 1 for d in moduli):
            raise ValueError(f"moduli must be >= 1: {moduli!r}")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def cyclic(cls, m):
        return cls(()) if m == 1 else cls((m,))

    @classmethod
    def trivial(cls):
        return cls(())

    @property
    def rank(self):
        return len(self.moduli)

    @property
    def order(self):
        return math.prod(self.moduli)

    @property
    def zero(self):
        return (0,) * self.rank

    @cached_property
    def _elements(self):
        return tuple(product(*(range(d) for d in self.moduli)))

    def elements(self):
        """All elements in row-major (mixed radix) order."""
        return self._elements

    def check(self, x):
        x = tuple(x)
        if len(x) != self.rank or any(not 0 <= a < d for a, d in zip(x, self.moduli)):
            raise ValueError(f"{x!r} is not an element of {self.descriptor()}")
        return x

    def basis(self):
        """The standard generators e_1, ..., e_k (skipping trivial coordinates)."""
        out = []
        for i in range(self.rank):
            e = [0] * self.rank
            if self.moduli[i] > 1:
                e[i] = 1
            out.append(tuple(e))
        return out

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.moduli))

    def neg(self, x):
        return tuple((-a) % d for a, d in zip(x, self.moduli))

    def sub(self, x, y):
        return tuple((a - b) % d for a, b, d in zip(x, y, self.moduli))

    def smul(self, n, x):
        return tuple((n * a) % d for a, d in zip(x, self.moduli))

    def order_of(self, x):
        """Least n > 0 with n*x = 0."""
        self.check(x)
        return math.lcm(*(d // math.gcd(d, a) for a, d in zip(x, self.moduli))) if x else 1

    def index_of(self, x):
        idx = 0
        for a, d in zip(x, self.moduli):
            idx = idx * d + a
        return idx

    def element_at(self, idx):
        coords = []
        for d in reversed(self.moduli):
            coords.append(idx % d)
            idx //= d
        return tuple(reversed(coords))

    def cayley_table(self):
        """The addition table over element indices (for coset quandle input)."""
        elems = self.elements()
        return [[self.index_of(self.add(x, y)) for y in elems] for x in elems]

    def descriptor(self):
        """Serialization like ``Z 2 x Z 4``; the trivial group prints as ``Z 1``."""
        if not self.moduli:
            return "Z 1"
        return " x ".join(f"Z {d}" for d in self.moduli)

    @classmethod
    def from_descriptor(cls, text):
        """Parse ``Z 2 x Z 4`` (also the compact form ``Z2xZ4``)."""
        moduli = []
        for part in text.split("x"):
            part = part.strip()
            if not part.upper().startswith("Z"):
                raise ValueError(f"cannot parse group descriptor: {text!r}")
            try:
                d = int(part[1:].strip())
            except ValueError:
                raise ValueError(f"cannot parse group descriptor: {text!r}") from None
            if d < 1:
                raise ValueError(f"modulus must be >= 1 in {text!r}")
            if d > 1:
                moduli.append(d)
        return cls(tuple(moduli))


class AbHom:
    """Homomorphism between finite abelian groups, as an integer matrix.

    The matrix has one row per target coordinate and one column per source
    coordinate; the image of the j-th source generator is the j-th column.
    Ill-defined matrices (where some column's order does not divide the
    corresponding source modulus) are rejected at construction time.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix):
        rows = [tuple(int(v) % d for v in row) for row, d in zip(matrix, target.moduli)]
        if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
            raise ValueError(
                f"matrix must be {target.rank}x{source.rank} for "
                f"{source.descriptor()} -> {target.descriptor()}"
            )
        self.source = source
        self.target = target
        self.matrix = tuple(rows)
        for j, d in enumerate(source.moduli):
            column = tuple(self.matrix[i][j] for i in range(target.rank))
            column_order = target.order_of(column)
            if d % column_order != 0:
                raise ValueError(
                    f"column {j} has order {column_order}, "
                    f"not a divisor of the source modulus {d}"
                )

    @classmethod
    def identity(cls, group):
        n = group.rank
        return cls(group, group, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, group):
        n = group.rank
        return cls(group, group, [[0] * n for _ in range(n)])

    @classmethod
    def scaling(cls, group, n):
        """Multiplication by n, the map usually written lambda_n."""
        k = group.rank
        return cls(group, group, [[n if i == j else 0 for j in range(k)] for i in range(k)])

    def __call__(self, x):
        x = self.source.check(x)
        return tuple(
            sum(row[j] * x[j] for j in range(self.source.rank)) % d
            for row, d in zip(self.matrix, self.target.moduli)
        )

    def _require_endo(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("homomorphisms must share source and target")

    def __add__(self, other):
        self._require_endo(other)
        return AbHom(
            self.source,
            self.target,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)],
        )

    def __sub__(self, other):
        self._require_endo(other)
        return AbHom(
            self.source,
            self.target,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)],
        )

    def compose(self, other):
        """self after other."""
        if other.target != self.source:
            raise ValueError("composition mismatch")
        rows = []
        for i in range(self.target.rank):
            rows.append(
                [
                    sum(self.matrix[i][k] * other.matrix[k][j] for k in range(self.source.rank))
                    for j in range(other.source.rank)
                ]
            )
        return AbHom(other.source, self.target, rows)

    def is_automorphism(self):
        """True iff source == target and the map permutes the element set."""
        if self.source != self.target:
            return False
        elems = self.source.elements()
        return len({self(x) for x in elems}) == len(elems)

    def inverse(self):
        if not self.is_automorphism():
            raise ValueError("only automorphisms can be inverted")
        preimage = {self(x): x for x in self.source.elements()}
        cols = [preimage[e] for e in self.source.basis()]
        rows = [[cols[j][i] for j in range(self.source.rank)] for i in range(self.source.rank)]
        return AbHom(self.source, self.source, rows)

    def pow(self, n):
        """n-fold composition; negative n only for automorphisms."""
        if self.source != self.target:
            raise ValueError("powers need an endomorphism")
        if n < 0:
            return self.inverse().pow(-n)
        result = AbHom.identity(self.source)
        base = self
        while n:
            if n & 1:
                result = result.compose(base)
            n >>= 1
            if n:
                base = base.compose(base)
        return result

    def __eq__(self, other):
        return (
            isinstance(other, AbHom)
            and self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self):
        return f"AbHom({self.source.descriptor()} -> {self.target.descriptor()}, {self.matrix})"

    def to_json(self):
        return {
            "source": self.source.descriptor(),
            "target": self.target.descriptor(),
            "matrix": [list(r) for r in self.matrix],
        }

    @classmethod
    def from_json(cls, data):
        source = FinAbGroup.from_descriptor(data["source"])
        target = FinAbGroup.from_descriptor(data["target"])
        return cls(source, target, data["matrix"])


def hom_is_automorphism(h):
    return h.is_automorphism()


@dataclass(frozen=True)
class TensorSquare:
    """The tensor square of a finite abelian group.

    For base moduli (d_1, ..., d_k) the tensor square has one coordinate per
    ordered pair (i, j), of modulus gcd(d_i, d_j), indexed row-major.
    """

    base: FinAbGroup
    group: FinAbGroup

    def pair_index(self, i, j):
        return i * self.base.rank + j

    def pure_tensor(self, x, y):
        """The element x (x) y, expanded biadditively over coordinates."""
        x = self.base.check(x)
        y = self.base.check(y)
        k = self.base.rank
        return tuple(
            (x[i] * y[j]) % self.group.moduli[self.pair_index(i, j)]
            for i in range(k)
            for j in range(k)
        )


def tensor_square(g):
    k = g.rank
    moduli = tuple(math.gcd(g.moduli[i], g.moduli[j]) for i in range(k) for j in range(k))
    return TensorSquare(g, FinAbGroup(moduli))


def twisted_tensor_relators(g, alpha):
    """Generators x(x)y - y(x)alpha(x) of the twisting subgroup, on basis pairs.

    Biadditivity of (x, y) -> x(x)y - y(x)alpha(x) means the k^2 basis
    instances generate the full subgroup.
    """
    if not alpha.is_automorphism() or alpha.source != g:
        raise ValueError("alpha must be an automorphism of the given group")
    square = tensor_square(g)
    basis = g.basis()
    relators = []
    for ei in basis:
        for ej in basis:
            left = square.pure_tensor(ei, ej)
            right = square.pure_tensor(ej, alpha(ei))
            relators.append(square.group.sub(left, right))
    return relators


@dataclass(frozen=True)
class SubgroupData:
    """A subgroup with its generators and full element enumeration."""

    ambient: FinAbGroup
    generators: tuple[tuple[int, ...], ...]
    element_set: frozenset
    order: int


def subgroup_generated(g, gens, cap=DEFAULT_SUBGROUP_CAP):
    """Enumerate the subgroup generated by ``gens`` (breadth-first closure)."""
    if g.order > cap:
        raise CapExceeded(f"ambient order {g.order} exceeds cap {cap}")
    gens = tuple(g.check(x) for x in gens)
    elements = {g.zero}
    frontier = [g.zero]
    while frontier:
        new = []
        for x in frontier:
            for h in gens:
                y = g.add(x, h)
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    return SubgroupData(g, gens, frozenset(elements), len(elements))


def smith_normal_form(matrix):
    """Diagonal of the Smith normal form of an integer matrix (list of rows).

    Returns nonnegative d_1, ..., d_min(rows, cols) with d_i | d_{i+1} among
    the nonzero entries. Pivoting always picks the smallest-absolute-value
    nonzero entry of the working submatrix, scanning row-major, so the
    intermediate states are reproducible.
    """
    a = [list(map(int, row)) for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    if any(len(r) != ncols for r in a):
        raise ValueError("ragged matrix")
    size = min(nrows, ncols)

    def find_pivot(t):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return best

    t = 0
    while t < size:
        pivot = find_pivot(t)
        if pivot is None:
            break
        _, pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            if a[t][t] < 0:
                a[t] = [-v for v in a[t]]
            # clear the pivot column, then the pivot row
            for i in range(nrows):
                if i != t and a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [v - q * w for v, w in zip(a[i], a[t])]
            for j in range(ncols):
                if j != t and a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
            dirty = [
                (abs(a[i][t]), i, t) for i in range(t + 1, nrows) if a[i][t]
            ] + [(abs(a[t][j]), t, j) for j in range(t + 1, ncols) if a[t][j]]
            if dirty:
                _, pi, pj = min(dirty)
                if pi != t:
                    a[t], a[pi] = a[pi], a[t]
                if pj != t:
                    for row in a:
                        row[t], row[pj] = row[pj], row[t]
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [v + w for v, w in zip(a[t], a[offender])]
        t += 1
    return [abs(a[i][i]) for i in range(size)]


def quotient_invariants(g, subgroup):
    """Invariant factors of g / subgroup, via the Smith normal form of the
    relation matrix [diag(moduli) | generator columns]."""
    if subgroup.ambient != g:
        raise ValueError("subgroup does not live in the given group")
    k = g.rank
    if k == 0:
        return ()
    columns = []
    for i in range(k):
        col = [0] * k
        col[i] = g.moduli[i]
        columns.append(col)
    for gen in subgroup.generators:
        columns.append(list(gen))
    matrix = [[columns[c][r] for c in range(len(columns))] for r in range(k)]
    diag = smith_normal_form(matrix)
    return tuple(d for d in diag if d > 1)
