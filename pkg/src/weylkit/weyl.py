"""Weyl groups as permutations of the root set.

Elements act on roots by permutation and on weight vectors through the
coroot bookkeeping of the root system, so everything stays in exact
integers. Enumeration walks the orbit of the strictly dominant vector
rho = (1, ..., 1): the orbit map w -> w(rho) is a bijection and the
breadth-first layer of a vector is exactly the Coxeter length, which keeps
the enumeration at a few bytes per element (E7's 2.9 million elements fit
comfortably; E8 is refused by the default cap and its order reported from
the closed form instead).
"""

from __future__ import annotations

import numpy as np

from .cartan import DynkinType, GCM, classify
from .roots import Coords, RootSystem

DEFAULT_CAP = 3_000_000
MATERIALIZE_CAP = 200_000


class WeylError(ValueError):
    code = "WeylError"


class IndexOutOfRange(WeylError):
    code = "IndexOutOfRange"

    def __init__(self, i: int, n: int):
        self.i, self.n = i, n
        super().__init__(f"simple index {i} out of range for rank {n}")


class CapExceeded(WeylError):
    code = "CapExceeded"

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"Weyl group enumeration would exceed {cap} elements")


def _check_index(rs_or_n, i: int) -> None:
    n = rs_or_n if isinstance(rs_or_n, int) else rs_or_n.rank
    if not 0 <= i < n:
        raise IndexOutOfRange(i, n)


def reflect(rs: RootSystem, i: int, weight) -> Coords:
    """Simple reflection s_i on a weight in fundamental-weight coordinates.

    s_i(D) = D - <D, coroot_i> alpha_i, an involution fixing the hyperplane
    where the i-th coordinate vanishes.
    """
    _check_index(rs, i)
    w = tuple(weight)
    pair = w[i]
    alpha = rs.simple_weight(i)
    return tuple(x - pair * a for x, a in zip(w, alpha))


class WeylElement:
    """A Weyl group element stored as a permutation of the root index set."""

    __slots__ = ("rs", "perm", "_length", "_inv_perm")

    def __init__(self, rs: RootSystem, perm: tuple[int, ...]):
        self.rs = rs
        self.perm = perm
        self._length: int | None = None
        self._inv_perm: tuple[int, ...] | None = None

    @classmethod
    def identity(cls, rs: RootSystem) -> "WeylElement":
        return cls(rs, tuple(range(len(rs.roots))))

    @property
    def length(self) -> int:
        if self._length is None:
            np_ = self.rs.num_positive
            self._length = sum(1 for i in range(np_) if self.perm[i] >= np_)
        return self._length

    def det(self) -> int:
        return -1 if self.length % 2 else 1

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p, q = self.perm, other.perm
        return WeylElement(self.rs, tuple(p[q[i]] for i in range(len(p))))

    def inverse(self) -> "WeylElement":
        return WeylElement(self.rs, self._inverse_perm())

    def _inverse_perm(self) -> tuple[int, ...]:
        if self._inv_perm is None:
            inv = [0] * len(self.perm)
            for i, p in enumerate(self.perm):
                inv[p] = i
            self._inv_perm = tuple(inv)
        return self._inv_perm

    def act_root_index(self, i: int) -> int:
        return self.perm[i]

    def act_weight(self, weight) -> Coords:
        """Image of a weight: <wD, coroot_j> = <D, w^{-1} coroot_j>."""
        inv = self._inverse_perm()
        rs = self.rs
        w = tuple(weight)
        out = []
        for j in range(rs.rank):
            pre = rs.roots[inv[rs.simple(j).index]]
            out.append(rs.pairing(w, pre.coroot))
        return tuple(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        return f"WeylElement(len={self.length})"


def simple_reflections(rs: RootSystem) -> list[WeylElement]:
    """The generators s_i as root permutations (cached on the root system)."""
    cache = rs._step_cache
    if "_gens" not in cache:
        gens = []
        for i in range(rs.rank):
            perm = tuple(
                rs.index_of(rs.reflect_coords(i, r.coords)) for r in rs.roots
            )
            gens.append(WeylElement(rs, perm))
        cache["_gens"] = gens
    return cache["_gens"]


def element_from_word(rs: RootSystem, word) -> WeylElement:
    gens = simple_reflections(rs)
    out = WeylElement.identity(rs)
    for i in word:
        _check_index(rs, i)
        out = out * gens[i]
    return out


def word_from_vector(rs: RootSystem, vector) -> tuple[int, ...]:
    """Reduced word of the element w with w(rho) = vector.

    Strips the smallest left-descent at each step: coordinate i of the
    vector is negative exactly when s_i shortens the element from the left.
    """
    v = [int(x) for x in vector]
    n = rs.rank
    gcm = rs.gcm.entries
    word = []
    while True:
        i = next((k for k in range(n) if v[k] < 0), None)
        if i is None:
            break
        word.append(i)
        pair = v[i]
        v = [x - pair * a for x, a in zip(v, gcm[i])]
    assert all(x == 1 for x in v), "vector is not in the rho-orbit"
    return tuple(word)


def root_reflection(rs: RootSystem, root_index: int) -> WeylElement:
    """The reflection in an arbitrary root, as a permutation of the roots."""
    alpha = rs.roots[root_index]
    perm = []
    for r in rs.roots:
        pair = rs.pairing(r.weight, alpha.coroot)
        img = tuple(a - pair * b for a, b in zip(r.coords, alpha.coords))
        perm.append(rs.index_of(img))
    return WeylElement(rs, tuple(perm))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _void_view(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    return a.reshape(a.shape[0], -1).view(
        np.dtype((np.void, a.dtype.itemsize * a.shape[1]))
    ).reshape(-1)


def _unique_rows(a: np.ndarray) -> np.ndarray:
    v = np.unique(_void_view(a))
    return v.view(a.dtype).reshape(-1, a.shape[1])


def _setdiff_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    mask = ~np.isin(_void_view(a), _void_view(b), assume_unique=True)
    return a[mask]


class WeylGroup:
    """An enumerated Weyl group.

    ``layers[k]`` holds the rho-orbit vectors of the length-k elements as a
    lexicographically sorted int16 array; the layer sizes are the Poincare
    coefficients. Full permutation elements are materialized on demand and
    only sensible for small groups.
    """

    def __init__(self, rs: RootSystem, layers: list[np.ndarray]):
        self.rs = rs
        self.layers = layers
        self.histogram = [len(layer) for layer in layers]
        self.order = sum(self.histogram)

    @property
    def generators(self) -> list[WeylElement]:
        return simple_reflections(self.rs)

    @property
    def rho(self) -> Coords:
        return tuple(1 for _ in range(self.rs.rank))

    def word_from_vector(self, vector) -> tuple[int, ...]:
        return word_from_vector(self.rs, vector)

    def element_from_vector(self, vector) -> WeylElement:
        return element_from_word(self.rs, self.word_from_vector(vector))

    def longest_element(self) -> WeylElement:
        neg_rho = tuple(-1 for _ in range(self.rs.rank))
        w0 = self.element_from_vector(neg_rho)
        assert w0.length == self.rs.num_positive
        return w0

    def reflections(self) -> list[WeylElement]:
        """The set T of all reflections, indexed by the positive roots."""
        return [root_reflection(self.rs, i) for i in range(self.rs.num_positive)]

    def elements(self, max_materialize: int = MATERIALIZE_CAP) -> list[WeylElement]:
        if self.order > max_materialize:
            raise CapExceeded(max_materialize)
        out = []
        for layer in self.layers:
            for row in layer:
                out.append(self.element_from_vector(row))
        return out

    def contains_vector(self, vector) -> bool:
        v = np.asarray(vector, dtype=np.int16).reshape(1, -1)
        key = _void_view(v)[0]
        for layer in self.layers:
            if np.isin(key, _void_view(layer)).item():
                return True
        return False


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_CAP) -> WeylGroup:
    """Breadth-first closure of the rho-orbit under the simple reflections."""
    n = rs.rank
    c = np.array(rs.gcm.rows(), dtype=np.int16)
    rho = np.ones((1, n), dtype=np.int16)
    layers = [rho]
    prev: np.ndarray | None = None
    cur = rho
    total = 1
    while True:
        cands = np.concatenate(
            [cur - np.outer(cur[:, i], c[i]) for i in range(n)]
        )
        new = _unique_rows(cands)
        if prev is not None:
            new = _setdiff_rows(new, prev)
        if len(new) == 0:
            break
        total += len(new)
        if total > cap:
            raise CapExceeded(cap)
        prev, cur = cur, new
        layers.append(new)
    return WeylGroup(rs, layers)


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def longest_element(group: WeylGroup) -> WeylElement:
    return group.longest_element()


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """A reduced word for w, by smallest-descent stripping (deterministic)."""
    rs = w.rs
    rho = tuple(1 for _ in range(rs.rank))
    return word_from_vector(rs, w.act_weight(rho))


def is_reduced(rs: RootSystem, word) -> bool:
    return element_from_word(rs, word).length == len(word)


def demazure_product(rs: RootSystem, word) -> WeylElement:
    """Monotone fold of a word: take the step only when it lengthens."""
    gens = simple_reflections(rs)
    out = WeylElement.identity(rs)
    for i in word:
        _check_index(rs, i)
        nxt = out * gens[i]
        if nxt.length > out.length:
            out = nxt
    return out


def poincare_polynomial(group: WeylGroup) -> list[int]:
    """Coefficient list b_l = number of elements of length l."""
    return list(group.histogram)


_FAMILY_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2 ** n * _factorial(n),
    "C": lambda n: 2 ** n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: {6: 51_840, 7: 2_903_040, 8: 696_729_600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def weyl_order(dtype: DynkinType) -> int:
    """Closed-form group order, multiplied over the components."""
    out = 1
    for family, rank, _ in dtype.components:
        out *= _FAMILY_ORDERS[family](rank)
    return out


def weyl_order_of_gcm(c: GCM) -> int:
    return weyl_order(classify(c))
