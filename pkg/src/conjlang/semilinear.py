"""Semilinear subsets of Z^m and conjugacy closures in virtually abelian groups.

Vectors are rows; matrices act on the right.  A group element is a pair
``(n, s)`` meaning ``n * s`` with ``n`` in Z^m and ``s`` a coset index (0 is
the identity coset).  With ``t^-1 n t = n Q_t`` and ``s t = c(s, t) r(s, t)``:

    (m, s) (n, t) = (m + n Q_s^-1 + c(s, t), r(s, t))
"""

from __future__ import annotations

import itertools
import json
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import sympy

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]
Element = tuple[Vector, int]


def _vec(v: Iterable[int]) -> Vector:
    return tuple(int(x) for x in v)


def _mat(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(_vec(r) for r in rows)


def vec_add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_neg(v: Sequence[int]) -> Vector:
    return tuple(-a for a in v)


def vec_mat(v: Sequence[int], q: Matrix) -> Vector:
    return tuple(sum(v[i] * q[i][j] for i in range(len(v))) for j in range(len(q[0])))


def mat_mul(p: Matrix, q: Matrix) -> Matrix:
    return tuple(vec_mat(row, q) for row in p)


def identity_matrix(m: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(m)) for i in range(m))


def integer_inverse(q: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    mq = sympy.Matrix(q)
    if mq.rows != mq.cols or mq.det() not in (1, -1):
        raise ValueError(f"matrix {q} is not invertible over the integers")
    return _mat(mq.inv().tolist())


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class LinearSet:
    """``{ base + sum n_i p_i : n_i >= 0 }``."""

    base: Vector
    periods: tuple[Vector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "base", _vec(self.base))
        object.__setattr__(self, "periods", tuple(_vec(p) for p in self.periods))
        if any(len(p) != len(self.base) for p in self.periods):
            raise DimensionError("periods and base differ in dimension")

    @property
    def dim(self) -> int:
        return len(self.base)

    def contains(self, v: Sequence[int]) -> bool:
        return cone_member(self.periods, vec_add(v, vec_neg(self.base)))


@dataclass(frozen=True)
class SemilinearSet:
    dim: int
    components: tuple[LinearSet, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if any(c.dim != self.dim for c in self.components):
            raise DimensionError(f"component dimension differs from {self.dim}")

    @classmethod
    def points(cls, dim: int, vectors: Iterable[Sequence[int]]) -> SemilinearSet:
        return cls(dim, tuple(LinearSet(v) for v in vectors))

    @classmethod
    def lattice(cls, generators: Iterable[Sequence[int]], dim: int) -> SemilinearSet:
        """The subgroup generated by ``generators``, as one linear set with +-periods."""
        periods: list[Vector] = []
        for g in generators:
            g = _vec(g)
            if len(g) != dim:
                raise DimensionError("lattice generator has wrong dimension")
            for p in (g, vec_neg(g)):
                if any(p) and p not in periods:
                    periods.append(p)
        return cls(dim, (LinearSet((0,) * dim, tuple(periods)),))

    def __contains__(self, v: Sequence[int]) -> bool:
        return sls_member(self, v)


def _dist2_to_segment(x: Vector, t: Vector) -> Fraction:
    tt = sum(a * a for a in t)
    if tt == 0:
        return Fraction(sum(a * a for a in x))
    lam = min(max(Fraction(sum(a * b for a, b in zip(x, t)), tt), Fraction(0)), Fraction(1))
    return sum((a - lam * b) ** 2 for a, b in zip(x, t))


def cone_member(periods: Sequence[Vector], target: Sequence[int]) -> bool:
    """Is ``target`` a non-negative integer combination of ``periods``?

    By the Steinitz lemma (applied to ``p_i - target/N``) a solution can be
    ordered so that every partial sum stays within ``2 m max|p|`` of the
    segment ``[0, target]``; a search confined to that tube is exact and finite.
    """
    target = _vec(target)
    if not any(target):
        return True
    periods = [p for p in periods if any(p)]
    if not periods:
        return False
    m = len(target)
    bound = 4 * m * m * max(sum(a * a for a in p) for p in periods)
    start = (0,) * m
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for p in periods:
            y = vec_add(x, p)
            if y == target:
                return True
            if y not in seen and _dist2_to_segment(y, target) <= bound:
                seen.add(y)
                queue.append(y)
    return False


def sls_member(a: SemilinearSet, v: Sequence[int]) -> bool:
    if len(v) != a.dim:
        raise DimensionError(f"vector of dimension {len(v)} tested against dimension {a.dim}")
    return any(c.contains(v) for c in a.components)


def sls_op(a: SemilinearSet, b, op: str) -> SemilinearSet:
    """``union`` / ``sum`` with a set, ``image`` under a matrix, ``shift`` by a vector."""
    if op == "union":
        _check_dim(a, b.dim)
        return SemilinearSet(a.dim, a.components + b.components)
    if op == "sum":
        _check_dim(a, b.dim)
        return SemilinearSet(
            a.dim,
            tuple(
                LinearSet(vec_add(x.base, y.base), x.periods + y.periods)
                for x in a.components
                for y in b.components
            ),
        )
    if op == "image":
        q = _mat(b)
        if len(q) != a.dim or any(len(r) != a.dim for r in q):
            raise DimensionError(f"image matrix must be {a.dim}x{a.dim}")
        return SemilinearSet(
            a.dim,
            tuple(
                LinearSet(vec_mat(c.base, q), tuple(vec_mat(p, q) for p in c.periods))
                for c in a.components
            ),
        )
    if op == "shift":
        s = _vec(b)
        _check_dim(a, len(s))
        return SemilinearSet(
            a.dim, tuple(LinearSet(vec_add(c.base, s), c.periods) for c in a.components)
        )
    raise ValueError(f"unknown semilinear operation {op!r}")


def _check_dim(a: SemilinearSet, dim: int) -> None:
    if a.dim != dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {dim}")


def lattice_image(q: Matrix) -> SemilinearSet:
    """The subgroup ``Z^m (Q^-1 - I)``."""
    q = _mat(q)
    inv = integer_inverse(q)
    m = len(q)
    rows = [vec_add(inv[i], vec_neg(identity_matrix(m)[i])) for i in range(m)]
    return SemilinearSet.lattice(rows, m)


def box_points(m: int, radius: int) -> Iterator[Vector]:
    return itertools.product(range(-radius, radius + 1), repeat=m)


@dataclass(frozen=True)
class VAPresentation:
    """``Z^m`` extended by a finite transversal acting through ``Q_t``."""

    m: int
    cosets: tuple[str, ...]
    action: tuple[Matrix, ...]
    coset_product: tuple[tuple[int, ...], ...]
    cocycle: tuple[tuple[Vector, ...], ...]
    inverse_action: tuple[Matrix, ...] = field(init=False, repr=False)
    coset_inverse: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        k = len(self.cosets)
        object.__setattr__(self, "cosets", tuple(self.cosets))
        object.__setattr__(self, "action", tuple(_mat(q) for q in self.action))
        object.__setattr__(self, "coset_product", tuple(tuple(int(x) for x in r) for r in self.coset_product))
        object.__setattr__(self, "cocycle", tuple(tuple(_vec(v) for v in r) for r in self.cocycle))
        if k < 1 or len(self.action) != k or len(self.coset_product) != k or len(self.cocycle) != k:
            raise ValueError("action, coset_product and cocycle need one entry per coset")
        for q in self.action:
            if len(q) != self.m or any(len(r) != self.m for r in q):
                raise DimensionError(f"action matrices must be {self.m}x{self.m}")
        if self.action[0] != identity_matrix(self.m):
            raise ValueError("the identity coset must act trivially")
        for s in range(k):
            if len(self.coset_product[s]) != k or len(self.cocycle[s]) != k:
                raise ValueError("coset tables must be square")
            for t in range(k):
                if not 0 <= self.coset_product[s][t] < k:
                    raise ValueError(f"coset product ({s}, {t}) out of range")
                if len(self.cocycle[s][t]) != self.m:
                    raise DimensionError(f"cocycle ({s}, {t}) has wrong dimension")
        object.__setattr__(self, "inverse_action", tuple(integer_inverse(q) for q in self.action))
        inverses = []
        for s in range(k):
            right = [t for t in range(k) if self.coset_product[s][t] == 0]
            if len(right) != 1:
                raise ValueError(f"coset {self.cosets[s]} has no unique inverse")
            inverses.append(right[0])
        object.__setattr__(self, "coset_inverse", tuple(inverses))
        self.validate()

    def validate(self, samples: int = 64, seed: int = 0) -> None:
        """Check the action law exactly and associativity on sampled triples."""
        k = len(self.cosets)
        for s in range(k):
            for t in range(k):
                if mat_mul(self.action[s], self.action[t]) != self.action[self.coset_product[s][t]]:
                    raise ValueError(f"Q_{s} Q_{t} differs from Q of their product coset")
        rng = random.Random(seed)

        def sample() -> Element:
            return tuple(rng.randint(-3, 3) for _ in range(self.m)), rng.randrange(k)

        for _ in range(samples):
            x, y, z = sample(), sample(), sample()
            if self.multiply(self.multiply(x, y), z) != self.multiply(x, self.multiply(y, z)):
                raise ValueError(f"multiplication is not associative on {x}, {y}, {z}")

    def coset_index(self, name: str | int) -> int:
        if isinstance(name, int):
            if not 0 <= name < len(self.cosets):
                raise ValueError(f"coset index {name} out of range")
            return name
        try:
            return self.cosets.index(name)
        except ValueError:
            raise ValueError(f"unknown coset {name!r}") from None

    def identity(self) -> Element:
        return (0,) * self.m, 0

    def multiply(self, x: Element, y: Element) -> Element:
        (m, s), (n, t) = x, y
        vec = vec_add(vec_add(m, vec_mat(n, self.inverse_action[s])), self.cocycle[s][t])
        return vec, self.coset_product[s][t]

    def inverse(self, x: Element) -> Element:
        n, s = x
        t = self.coset_inverse[s]
        # (n, s)(n', t) = 1  =>  n' = -(n + c(s, t)) Q_s
        return vec_mat(vec_neg(vec_add(n, self.cocycle[s][t])), self.action[s]), t

    def conjugate(self, x: Element, h: Element) -> Element:
        """``h^-1 x h``."""
        return self.multiply(self.inverse(h), self.multiply(x, h))

    def transversal(self, s: int) -> Element:
        return (0,) * self.m, s

    def elements(self, radius: int) -> Iterator[Element]:
        for s in range(len(self.cosets)):
            for v in box_points(self.m, radius):
                yield v, s


@dataclass(frozen=True)
class VASubset:
    """Union of ``U_i * b_i`` with ``U_i`` semilinear and ``b_i`` a coset."""

    dim: int
    components: tuple[tuple[SemilinearSet, int], ...] = ()

    def member(self, x: Element) -> bool:
        v, s = x
        return any(c == s and sls_member(u, v) for u, c in self.components)

    def merged(self) -> VASubset:
        by_coset: dict[int, SemilinearSet] = {}
        for u, s in self.components:
            by_coset[s] = sls_op(by_coset[s], u, "union") if s in by_coset else u
        return VASubset(self.dim, tuple((by_coset[s], s) for s in sorted(by_coset)))

    def in_box(self, g: VAPresentation, radius: int) -> set[Element]:
        return {x for x in g.elements(radius) if self.member(x)}


def alpha_va(g: VAPresentation, u: VASubset) -> VASubset:
    """All conjugates of ``u``.

    Conjugating ``n b`` by ``k`` in Z^m gives ``(n + k(Q_b^-1 - I)) b``; a
    transversal element ``s`` then maps ``w b`` to ``w Q_s * s^-1 b s``.
    """
    out = []
    for ui, b in u.components:
        w = sls_op(ui, lattice_image(g.action[b]), "sum")
        for s in range(len(g.cosets)):
            vec, coset = g.conjugate(g.transversal(b), g.transversal(s))
            out.append((sls_op(sls_op(w, g.action[s], "image"), vec, "shift"), coset))
    return VASubset(u.dim, tuple(out)).merged()


def alpha_abelian_subset(g: VAPresentation, u: SemilinearSet) -> SemilinearSet:
    """Conjugates of a subset of Z^m: the union of its images under every ``Q_t``."""
    out = SemilinearSet(u.dim)
    for q in g.action:
        out = sls_op(out, sls_op(u, q, "image"), "union")
    return out


def va_brute_ball(g: VAPresentation, u: VASubset, radius: int) -> set[Element]:
    """Conjugates ``h^-1 x h`` of ``x`` in ``u`` by ``h``, both with coordinates in ``[-r, r]``."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    xs = u.in_box(g, radius)
    return {g.conjugate(x, h) for x in xs for h in g.elements(radius)}


def restrict(elements: Iterable[Element], radius: int) -> set[Element]:
    return {x for x in elements if all(abs(a) <= radius for a in x[0])}


def infinite_dihedral() -> VAPresentation:
    return VAPresentation(
        m=1,
        cosets=("id", "flip"),
        action=(((1,),), ((-1,),)),
        coset_product=((0, 1), (1, 0)),
        cocycle=(((0,), (0,)), ((0,), (0,))),
    )


def swap_extension() -> VAPresentation:
    """``Z^2`` extended by the coordinate swap."""
    return VAPresentation(
        m=2,
        cosets=("id", "swap"),
        action=(((1, 0), (0, 1)), ((0, 1), (1, 0))),
        coset_product=((0, 1), (1, 0)),
        cocycle=(((0, 0), (0, 0)), ((0, 0), (0, 0))),
    )


def klein_bottle() -> VAPresentation:
    """``<x, y, t | t^-1 x t = x^-1, t^-1 y t = y, t^2 = y>``: a nonzero cocycle."""
    return VAPresentation(
        m=2,
        cosets=("id", "t"),
        action=(((1, 0), (0, 1)), ((-1, 0), (0, 1))),
        coset_product=((0, 1), (1, 0)),
        cocycle=(((0, 0), (0, 0)), ((0, 0), (0, 1))),
    )


BUILTIN_GROUPS = {
    "dinf": infinite_dihedral,
    "swap": swap_extension,
    "klein": klein_bottle,
}


def presentation_from_dict(data: dict) -> VAPresentation:
    try:
        m = int(data["m"])
        cosets = data["cosets"]
        if isinstance(cosets, int):
            cosets = [str(i) for i in range(cosets)]
        k = len(cosets)
        product = [[c if isinstance(c, int) else cosets.index(c) for c in row] for row in data["coset_product"]]
        cocycle = data.get("cocycle") or [[[0] * m] * k] * k
        return VAPresentation(m, tuple(cosets), tuple(data["Q"]), tuple(map(tuple, product)), tuple(cocycle))
    except KeyError as exc:
        raise ValueError(f"group description is missing field {exc.args[0]!r}") from None


def subset_from_dict(g: VAPresentation, data: dict) -> VASubset:
    comps = []
    for entry in data["components"]:
        coset = g.coset_index(entry.get("coset", 0))
        linear = tuple(LinearSet(tuple(c["base"]), tuple(map(tuple, c.get("periods", [])))) for c in entry["linear"])
        comps.append((SemilinearSet(g.m, linear), coset))
    return VASubset(g.m, tuple(comps))


def load_presentation(spec: str) -> VAPresentation:
    """A builtin name (``dinf``, ``swap``, ``klein``) or a JSON file."""
    if spec in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[spec]()
    return presentation_from_dict(json.loads(Path(spec).read_text()))


def load_subset(g: VAPresentation, path: str) -> VASubset:
    return subset_from_dict(g, json.loads(Path(path).read_text()))
