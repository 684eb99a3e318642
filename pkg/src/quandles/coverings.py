"""Quandle extensions, coverings, congruences and quotient reconstruction.

An extension glues a fiber S onto each point of a base quandle X via a
dynamical cocycle beta, with (x, s)*(y, t) = (x*y, beta(x, y, s)(t)). When
beta does not depend on s it is a constant cocycle into Sym(S) and the
canonical projection is a covering: equal projections force equal left
translations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .cocycles import (
    ConstantCocycle,
    are_cohomologous,
    cocycle_from_json,
    cocycle_to_json,
)
from .core import Quandle
from .errors import (
    BudgetExceeded,
    InvalidCocycle,
    NotCompatible,
    NotConnected,
    NotHomomorphism,
    NotSurjective,
    NotUniform,
)

CONGRUENCE_SIZE_CAP = 12
EQUIVALENCE_SIZE_CAP = 12


def _normalize_blocks(n, blocks):
    out = tuple(sorted(tuple(sorted(set(b))) for b in blocks if b))
    flat = [x for b in out for x in b]
    if sorted(flat) != list(range(n)):
        raise ValueError("blocks do not partition the point set")
    return out


@dataclass(frozen=True)
class Congruence:
    """A compatible partition of a quandle: blocks of a*b depend only on blocks."""

    quandle: Quandle
    blocks: tuple

    @classmethod
    def from_blocks(cls, quandle, blocks, *, check=True):
        blocks = _normalize_blocks(quandle.size, blocks)
        cong = cls(quandle, blocks)
        if check:
            witness = cong._compatibility_witness()
            if witness is not None:
                raise NotCompatible(f"partition is not a congruence at {witness}")
        return cong

    @cached_property
    def block_index(self):
        table = {}
        for i, block in enumerate(self.blocks):
            for x in block:
                table[x] = i
        return table

    def block_of(self, x):
        return self.block_index[x]

    def _compatibility_witness(self):
        q = self.quandle
        idx = self.block_index
        n = q.size
        for block in self.blocks:
            a = block[0]
            for b in block[1:]:
                for x in range(n):
                    if idx[q.op(x, a)] != idx[q.op(x, b)]:
                        return (x, a, b)
                    if idx[q.op(a, x)] != idx[q.op(b, x)]:
                        return (a, b, x)
        return None

    @property
    def is_uniform(self):
        return len({len(b) for b in self.blocks}) <= 1

    @property
    def is_identity(self):
        return all(len(b) == 1 for b in self.blocks)

    def __len__(self):
        return len(self.blocks)


def ker_left_section(quandle):
    """The congruence identifying points with equal left translations."""
    groups = {}
    for x, row in enumerate(quandle.table):
        groups.setdefault(row, []).append(x)
    return Congruence.from_blocks(quandle, list(groups.values()))


def principal_congruence(quandle, a, b):
    """The least congruence identifying a and b, by merge-and-close."""
    q = quandle
    n = q.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
            return True
        return False

    union(a, b)
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if find(u) == find(v):
                    for x in range(n):
                        if union(q.op(x, u), q.op(x, v)):
                            changed = True
                        if union(q.op(u, x), q.op(v, x)):
                            changed = True
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return Congruence.from_blocks(q, list(groups.values()))


def _join(c1, c2):
    q = c1.quandle
    n = q.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cong in (c1, c2):
        for block in cong.blocks:
            for x in block[1:]:
                rx, ry = find(block[0]), find(x)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    # the join of congruences is transitive-closure of the union, which is
    # again compatible, so no re-closure is needed
    return Congruence.from_blocks(q, list(groups.values()))


def all_congruences(quandle, cap=CONGRUENCE_SIZE_CAP):
    """Every congruence, as the join closure of the principal congruences."""
    if quandle.size > cap:
        raise BudgetExceeded(f"congruence enumeration is capped at size {cap}")
    n = quandle.size
    identity = Congruence.from_blocks(quandle, [[x] for x in range(n)], check=False)
    principals = []
    seen = {identity.blocks}
    for a in range(n):
        for b in range(a + 1, n):
            cong = principal_congruence(quandle, a, b)
            if cong.blocks not in seen:
                seen.add(cong.blocks)
                principals.append(cong)
    found = {identity.blocks: identity}
    for cong in principals:
        found[cong.blocks] = cong
    frontier = list(principals)
    while frontier:
        new = []
        for cong in frontier:
            for base in principals:
                joined = _join(cong, base)
                if joined.blocks not in found:
                    found[joined.blocks] = joined
                    new.append(joined)
        frontier = new
    return sorted(found.values(), key=lambda c: (len(c.blocks[0]), c.blocks))


class DynamicalCocycle:
    """beta(x, y, s) as a permutation of the fiber, stored by image tuples."""

    __slots__ = ("base_size", "fiber_size", "values")

    def __init__(self, base_size, fiber_size, values):
        values = tuple(
            tuple(
                tuple(tuple(int(v) for v in perm) for perm in cell) for cell in row
            )
            for row in values
        )
        if len(values) != base_size or any(
            len(row) != base_size
            or any(len(cell) != fiber_size for cell in row)
            or any(len(perm) != fiber_size for cell in row for perm in cell)
            for row in values
        ):
            raise ValueError("values must be base x base x fiber x fiber")
        self.base_size = base_size
        self.fiber_size = fiber_size
        self.values = values

    def apply(self, x, y, s, t):
        return self.values[x][y][s][t]

    def is_constant(self):
        return all(
            len(set(self.values[x][y])) == 1
            for x in range(self.base_size)
            for y in range(self.base_size)
        )

    def __eq__(self, other):
        return isinstance(other, DynamicalCocycle) and self.values == other.values

    def __hash__(self):
        return hash(self.values)


def dynamical_witness(quandle, fiber_size, values):
    """None for a valid dynamical cocycle, else the smallest violation.

    Checks that every beta(x, y, s) is a bijection of the fiber, the quandle
    condition beta(x, x, s)(s) = s, and the cocycle condition

        beta(xy, xz, beta(x,y,s)(t)) beta(x,z,s) = beta(x, yz, s) beta(y,z,t)

    as an equation between fiber permutations, for all x, y, z, s, t.
    """
    n = quandle.size
    m = fiber_size
    for x in range(n):
        for y in range(n):
            for s in range(m):
                if sorted(values[x][y][s]) != list(range(m)):
                    return ("bijection", (x, y, s))
    for x in range(n):
        for s in range(m):
            if values[x][x][s][s] != s:
                return ("quandle", (x, s))
    t = quandle.table
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for s in range(m):
                    bxys = values[x][y][s]
                    bxzs = values[x][z][s]
                    for t_ in range(m):
                        left_outer = values[t[x][y]][t[x][z]][bxys[t_]]
                        right_outer = values[x][t[y][z]][s]
                        byzt = values[y][z][t_]
                        if any(
                            left_outer[bxzs[w]] != right_outer[byzt[w]]
                            for w in range(m)
                        ):
                            return ("cocycle", (x, y, z, s, t_))
    return None


def is_dynamical_cocycle(quandle, fiber_size, values):
    return dynamical_witness(quandle, fiber_size, values) is None


def lift_constant(beta):
    """View a constant cocycle into Sym(S) as a dynamical cocycle."""
    coeff = beta.coeff
    if coeff.kind != "sym":
        raise ValueError("extensions need a cocycle with symmetric coefficients")
    n = beta.quandle.size
    m = coeff.points
    values = [
        [tuple(coeff.perm_images(beta.values[x][y]) for _ in range(m)) for y in range(n)]
        for x in range(n)
    ]
    return DynamicalCocycle(n, m, values)


@dataclass(frozen=True)
class Covering:
    """A surjective map from a total quandle onto a base, point by point."""

    total: Quandle
    base: Quandle
    projection: tuple


@dataclass(frozen=True)
class Extension:
    """The quandle on X x S built from a dynamical cocycle over X.

    Points are indexed (x, s) -> x * fiber_size + s.
    """

    base: Quandle
    fiber_size: int
    cocycle: DynamicalCocycle
    constant: object
    total: Quandle
    projection: tuple

    def as_covering(self):
        return Covering(self.total, self.base, self.projection)

    def fiber_congruence(self):
        m = self.fiber_size
        blocks = [
            tuple(range(x * m, (x + 1) * m)) for x in range(self.base.size)
        ]
        return Congruence.from_blocks(self.total, blocks)


def extend(quandle, cocycle, fiber_size=None):
    """Build the extension quandle; the cocycle may be constant or dynamical."""
    constant = None
    if isinstance(cocycle, ConstantCocycle):
        constant = cocycle
        dyn = lift_constant(cocycle)
    elif isinstance(cocycle, DynamicalCocycle):
        dyn = cocycle
    else:
        raise TypeError("cocycle must be a ConstantCocycle or DynamicalCocycle")
    if dyn.base_size != quandle.size:
        raise ValueError("cocycle base size does not match the quandle")
    if fiber_size is not None and fiber_size != dyn.fiber_size:
        raise ValueError("fiber size does not match the cocycle")
    witness = dynamical_witness(quandle, dyn.fiber_size, dyn.values)
    if witness is not None:
        raise InvalidCocycle(f"invalid dynamical cocycle: {witness}", witness)
    n = quandle.size
    m = dyn.fiber_size
    table = []
    for x in range(n):
        for s in range(m):
            row = []
            for y in range(n):
                for t_ in range(m):
                    row.append(quandle.op(x, y) * m + dyn.values[x][y][s][t_])
            table.append(row)
    total = Quandle(table)
    projection = tuple(i // m for i in range(n * m))
    ext = Extension(
        base=quandle,
        fiber_size=m,
        cocycle=dyn,
        constant=constant,
        total=total,
        projection=projection,
    )
    # the fibers must form a uniform congruence of the total quandle
    cong = ext.fiber_congruence()
    if not cong.is_uniform:
        raise NotUniform("extension fibers are not uniform")
    return ext


@dataclass(frozen=True)
class QuotientResult:
    """Quotient quandle plus the reconstruction data exhibiting Y as an extension."""

    quotient: Quandle
    cocycle: DynamicalCocycle
    extension: Extension
    embedding: tuple  # total-quandle index of each original point


def quotient(quandle, congruence):
    """Quotient by a uniform congruence, with the rebuilt extension cocycle.

    The block bijections are the order-preserving enumerations of each block;
    the reconstruction x -> ([x], position of x in its block) is verified to
    be an isomorphism onto the rebuilt extension.
    """
    if isinstance(congruence, Congruence):
        if congruence.quandle is not quandle and congruence.quandle != quandle:
            raise ValueError("congruence belongs to a different quandle")
        cong = congruence
    else:
        cong = Congruence.from_blocks(quandle, congruence)
    witness = cong._compatibility_witness()
    if witness is not None:
        raise NotCompatible(f"partition is not a congruence at {witness}")
    if not cong.is_uniform:
        raise NotUniform("congruence blocks differ in size")
    q = quandle
    blocks = cong.blocks
    m = len(blocks[0])
    k = len(blocks)
    idx = cong.block_index
    position = {}
    for block in blocks:
        for s, x in enumerate(block):
            position[x] = s
    qt = [[idx[q.op(blocks[i][0], blocks[j][0])] for j in range(k)] for i in range(k)]
    quotient_quandle = Quandle(qt)
    values = []
    for i in range(k):
        row = []
        for j in range(k):
            target = qt[i][j]
            cell = []
            for s in range(m):
                source = blocks[i][s]
                images = tuple(
                    position[q.op(source, blocks[j][t])] for t in range(m)
                )
                cell.append(images)
            row.append(tuple(cell))
        values.append(tuple(row))
    dyn = DynamicalCocycle(k, m, values)
    ext = extend(quotient_quandle, dyn)
    embedding = tuple(idx[x] * m + position[x] for x in range(q.size))
    for a in range(q.size):
        for b in range(q.size):
            if embedding[q.op(a, b)] != ext.total.op(embedding[a], embedding[b]):
                raise AssertionError("quotient reconstruction is not an isomorphism")
    return QuotientResult(quotient_quandle, dyn, ext, embedding)


def extension_to_json(extension, base_ref=None):
    """JSON form of a constant-cocycle extension: base reference, fiber
    size, and the cocycle document."""
    if extension.constant is None:
        raise ValueError("only constant-cocycle extensions serialize")
    if base_ref is None:
        base_ref = {
            "size": extension.base.size,
            "table": [list(r) for r in extension.base.table],
        }
    return {
        "base": base_ref,
        "fiber_size": extension.fiber_size,
        "cocycle": cocycle_to_json(extension.constant, quandle_ref=base_ref),
    }


def extension_from_json(data, base=None):
    if base is None:
        ref = data["base"]
        if not isinstance(ref, dict) or "table" not in ref:
            raise ValueError("extension document does not embed its base table")
        base = Quandle(ref["table"])
    beta = cocycle_from_json(data["cocycle"], quandle=base)
    ext = extend(base, beta)
    if ext.fiber_size != data["fiber_size"]:
        raise ValueError("declared fiber size does not match the cocycle")
    return ext


def is_covering(total, base, projection, *, require_connected=False):
    """The covering criterion: equal projections force equal left translations.

    The projection must be a surjective homomorphism. Connectivity of the
    total quandle is only enforced on request, since the canonical coset and
    trivial-extension examples have disconnected totals.
    """
    projection = tuple(int(v) for v in projection)
    if len(projection) != total.size or any(
        not 0 <= v < base.size for v in projection
    ):
        raise ValueError("projection must map total points to base points")
    if set(projection) != set(range(base.size)):
        raise NotSurjective("projection misses base points")
    for a in range(total.size):
        for b in range(total.size):
            if projection[total.op(a, b)] != base.op(projection[a], projection[b]):
                raise NotHomomorphism(f"projection fails at ({a}, {b})")
    if require_connected and not total.is_connected():
        raise NotConnected("total quandle is not connected")
    rows = total.table
    for a in range(total.size):
        for b in range(a + 1, total.size):
            if projection[a] == projection[b] and rows[a] != rows[b]:
                return False
    return True


def _as_covering(obj):
    if isinstance(obj, Extension):
        return obj.as_covering(), obj.constant
    if isinstance(obj, Covering):
        return obj, None
    raise TypeError("expected an Extension or Covering")


def coverings_equivalent(first, second, size_cap=EQUIVALENCE_SIZE_CAP):
    """Equivalence of two coverings of one base: an isomorphism over the base.

    Extension-form inputs with constant cocycles are decided through the
    cohomology relation; otherwise a fiber-respecting isomorphism is searched
    by backtracking (first witness in lexicographic image order).
    """
    cov1, beta1 = _as_covering(first)
    cov2, beta2 = _as_covering(second)
    if cov1.base != cov2.base:
        raise ValueError("coverings have different bases")
    if cov1.total.size != cov2.total.size:
        return False
    if beta1 is not None and beta2 is not None and beta1.coeff == beta2.coeff:
        return are_cohomologous(beta1, beta2)
    n = cov1.total.size
    if n > size_cap:
        raise BudgetExceeded(f"equivalence search is capped at size {size_cap}")
    t1, t2 = cov1.total.table, cov2.total.table
    p1, p2 = cov1.projection, cov2.projection
    images = [None] * n
    used = [False] * n

    def consistent(a):
        for b in range(n):
            if images[b] is None:
                continue
            ab = t1[a][b]
            ba = t1[b][a]
            if images[ab] is not None and t2[images[a]][images[b]] != images[ab]:
                return False
            if images[ba] is not None and t2[images[b]][images[a]] != images[ba]:
                return False
        return True

    def search(a):
        if a == n:
            return True
        for b in range(n):
            if not used[b] and p2[b] == p1[a]:
                images[a] = b
                used[b] = True
                if consistent(a) and search(a + 1):
                    return True
                images[a] = None
                used[b] = False
        return False

    return search(0)
