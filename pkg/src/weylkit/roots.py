"""Finite root systems generated from a Cartan matrix.

Every root carries three coordinate systems at once:

* ``coords``: coefficients in the simple-root basis,
* ``coroot``: coefficients of its coroot in the simple-coroot basis,
* ``weight``: pairings with the simple coroots (fundamental-weight basis).

Reflections update root and coroot coordinates simultaneously, so arbitrary
root-against-coroot pairings are integer dot products: pairing(beta, alpha)
= weight(beta) . coroot(alpha).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import GCM, NotFiniteType, Symmetrizer, is_finite_type, symmetrizer

Coords = tuple[int, ...]

# no finite type of rank <= 8 has more roots than E8's 240; the cap only
# trips when a non-finite matrix sneaks past the type check
ORBIT_CAP = 10_000


class RootsError(ValueError):
    code = "RootsError"


class NotARoot(RootsError):
    code = "NotARoot"

    def __init__(self, coords):
        self.coords = tuple(coords)
        super().__init__(f"{tuple(coords)} is not a root")


class OrbitCap(RootsError):
    code = "OrbitCap"

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"reflection orbit exceeded {cap} roots")


@dataclass(frozen=True)
class Root:
    index: int
    coords: Coords          # simple-root basis
    coroot: Coords          # simple-coroot basis
    weight: Coords          # fundamental-weight basis (pairings with coroots)
    height: int
    positive: bool
    length: int             # squared-length ratio, short = 1 in each component

    @property
    def length_class(self) -> str:
        return "short" if self.length == 1 else "long"


class RootSystem:
    """All roots of a finite-type Cartan matrix, in a deterministic order.

    Positive roots come first, sorted by (height, coords); the negatives
    follow in the mirrored order, so ``i`` and ``i + num_positive`` are
    always a root and its negative. Instances are immutable after
    construction and safe to share.
    """

    def __init__(self, gcm: GCM, sym: Symmetrizer, roots: list[Root]):
        self.gcm = gcm
        self.sym = sym
        self.roots = tuple(roots)
        self.rank = gcm.n
        self.num_positive = len(roots) // 2
        self._index = {r.coords: r.index for r in roots}
        self._step_cache: dict = {}

    # -- lookups ------------------------------------------------------------

    def index_of(self, coords) -> int | None:
        return self._index.get(tuple(coords))

    def is_root(self, coords) -> bool:
        return tuple(coords) in self._index

    def root(self, coords) -> Root:
        idx = self.index_of(coords)
        if idx is None:
            raise NotARoot(coords)
        return self.roots[idx]

    def simple(self, i: int) -> Root:
        e = tuple(1 if k == i else 0 for k in range(self.rank))
        return self.roots[self._index[e]]

    @property
    def simples(self) -> list[Root]:
        return [self.simple(i) for i in range(self.rank)]

    @property
    def positives(self) -> list[Root]:
        return [r for r in self.roots if r.positive]

    def negative_of(self, index: int) -> int:
        n = self.num_positive
        return index + n if index < n else index - n

    def simple_weight(self, i: int) -> Coords:
        """Fundamental-weight coordinates of the i-th simple root (row i of C)."""
        return self.gcm.entries[i]

    # -- pairings and reflections --------------------------------------------

    def pairing(self, weight, coroot) -> int:
        return sum(w * c for w, c in zip(weight, coroot))

    def reflect_coords(self, i: int, coords) -> Coords:
        """Simple reflection s_i on root coordinates."""
        pair = sum(a * self.gcm.entries[k][i] for k, a in enumerate(coords))
        return tuple(a - pair if k == i else a for k, a in enumerate(coords))

    def reflect_coroot(self, i: int, coroot) -> Coords:
        """Simple reflection on coroot coordinates."""
        pair = sum(self.gcm.entries[i][k] * b for k, b in enumerate(coroot))
        return tuple(b - pair if k == i else b for k, b in enumerate(coroot))

    def __repr__(self) -> str:
        return f"RootSystem(rank={self.rank}, roots={len(self.roots)})"


def _weight_of(gcm: GCM, coords) -> Coords:
    return tuple(
        sum(a * gcm.entries[k][j] for k, a in enumerate(coords))
        for j in range(gcm.n)
    )


def generate_roots(c: GCM, cap: int = ORBIT_CAP) -> RootSystem:
    """Close the simple roots under all simple reflections.

    Coroots are carried along by reflecting in the coroot lattice at the
    same time, and each new root inherits the length class of the root it
    was reflected from.
    """
    if not is_finite_type(c):
        raise NotFiniteType()
    sym = symmetrizer(c)
    n = c.n
    seen: dict[Coords, tuple[Coords, int]] = {}
    frontier: list[Coords] = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        seen[e] = (e, sym.lengths[i])
        frontier.append(e)

    def refl_coords(i, coords):
        pair = sum(a * c.entries[k][i] for k, a in enumerate(coords))
        return tuple(a - pair if k == i else a for k, a in enumerate(coords))

    def refl_coroot(i, coroot):
        pair = sum(c.entries[i][k] * b for k, b in enumerate(coroot))
        return tuple(b - pair if k == i else b for k, b in enumerate(coroot))

    while frontier:
        coords = frontier.pop()
        coroot, length = seen[coords]
        for i in range(n):
            img = refl_coords(i, coords)
            if img not in seen:
                seen[img] = (refl_coroot(i, coroot), length)
                frontier.append(img)
                if len(seen) > cap:
                    raise OrbitCap(cap)

    positives = []
    for coords, (coroot, length) in seen.items():
        if all(a >= 0 for a in coords):
            positives.append((coords, coroot, length))
        elif not all(a <= 0 for a in coords):
            raise NotFiniteType("orbit produced a root of mixed sign")
    positives.sort(key=lambda t: (sum(t[0]), t[0]))

    roots: list[Root] = []
    for idx, (coords, coroot, length) in enumerate(positives):
        roots.append(Root(idx, coords, coroot, _weight_of(c, coords),
                          sum(coords), True, length))
    np_ = len(positives)
    for idx, (coords, coroot, length) in enumerate(positives):
        neg = tuple(-a for a in coords)
        negv = tuple(-b for b in coroot)
        roots.append(Root(np_ + idx, neg, negv, _weight_of(c, neg),
                          -sum(coords), False, length))
    return RootSystem(c, sym, roots)


def nonsimple_positives(rs: RootSystem) -> list[Root]:
    """Positive roots of height at least 2 (the positives minus the simples)."""
    return [r for r in rs.positives if r.height >= 2]


@dataclass(frozen=True)
class RootString:
    """Maximal interval base + k*direction inside the roots-and-zero set.

    ``down`` steps of the direction can be subtracted and ``up`` added while
    staying inside; the classical identity down - up = pairing(base,
    direction-coroot) is asserted at construction time.
    """

    base: Coords
    direction: Coords
    down: int   # r: steps towards base - k*direction
    up: int     # s: steps towards base + k*direction

    def elements(self) -> list[Coords]:
        return [
            tuple(b + k * d for b, d in zip(self.base, self.direction))
            for k in range(-self.down, self.up + 1)
        ]


def root_string(rs: RootSystem, base, direction) -> RootString:
    """The direction-string through base, with base in roots or zero."""
    base = tuple(base)
    direction = tuple(direction)
    if not rs.is_root(direction):
        raise NotARoot(direction)
    zero = tuple(0 for _ in range(rs.rank))
    if base != zero and not rs.is_root(base):
        raise NotARoot(base)

    def inside(coords):
        return coords == zero or rs.is_root(coords)

    down = 0
    while inside(tuple(b - (down + 1) * d for b, d in zip(base, direction))):
        down += 1
    up = 0
    while inside(tuple(b + (up + 1) * d for b, d in zip(base, direction))):
        up += 1

    base_weight = _weight_of(rs.gcm, base)
    pair = rs.pairing(base_weight, rs.root(direction).coroot)
    assert down - up == pair, "string identity r - s = <base, direction coroot>"
    return RootString(base, direction, down, up)
