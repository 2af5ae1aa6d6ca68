"""Generalized Cartan matrices: validation, finite type, symmetrizer, classification.

Convention (used throughout the package): the entry ``C[i][j]`` is the pairing
of simple root i against simple coroot j, so row i of C lists the
fundamental-weight coordinates of the i-th simple root. Many references use
the transposed convention; the CLI offers a ``--transpose`` adapter.

Catalog matrices follow Bourbaki node numbering. In the B family the double
edge sits at the end of the chain with ``C[n-2][n-1] = -1, C[n-1][n-2] = -2``
(matching the rank-2 catalog entry); the C family is the transpose
orientation. B2 and C2 name the same abstract type and the catalog exposes it
as (B, 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import intmat

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


class GCMError(ValueError):
    """Base for Cartan-matrix validation and classification failures."""

    code = "GCMError"

    def to_json(self) -> dict:
        payload = {"code": self.code, "message": str(self)}
        for key in ("i", "j", "family", "rank"):
            if hasattr(self, key):
                payload[key] = getattr(self, key)
        return payload


class DiagonalNotTwo(GCMError):
    code = "DiagonalNotTwo"

    def __init__(self, i: int):
        self.i = i
        super().__init__(f"diagonal entry at ({i},{i}) is not 2")


class PositiveOffDiagonal(GCMError):
    code = "PositiveOffDiagonal"

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"off-diagonal entry at ({i},{j}) is positive")


class AsymmetricZero(GCMError):
    code = "AsymmetricZero"

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"entry ({i},{j}) is zero iff ({j},{i}) is not")


class NotFiniteType(GCMError):
    code = "NotFiniteType"

    def __init__(self, msg: str = "matrix is not of finite type"):
        super().__init__(msg)


class InvalidType(GCMError):
    code = "InvalidType"

    def __init__(self, family: str, rank: int):
        self.family, self.rank = family, rank
        super().__init__(f"({family},{rank}) is not a valid finite type")


@dataclass(frozen=True)
class GCM:
    """A validated generalized Cartan matrix."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def components(self) -> list[list[int]]:
        """Connected components of the Dynkin graph, by sorted node index."""
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(self.n):
                    if j not in seen and self.entries[i][j] != 0:
                        seen.add(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps


@dataclass(frozen=True)
class Symmetrizer:
    """Minimal positive integers d with d[i] C[i][j] = d[j] C[j][i].

    ``lengths[i]`` is the squared-length ratio of simple root i, normalized
    so the short roots of each component have length 1. With the pairing
    convention above this is max(d over the component) / d[i]; in particular
    the short nodes of a doubly-laced component carry the larger d value.
    """

    d: tuple[int, ...]
    lengths: tuple[int, ...]


@dataclass(frozen=True)
class DynkinType:
    """Irreducible components as (family, rank, node map into the input)."""

    components: tuple[tuple[str, int, tuple[int, ...]], ...]

    def label(self) -> str:
        return "+".join(f"{f}{r}" for f, r, _ in self.components) or "empty"

    def multiset(self) -> tuple[tuple[str, int], ...]:
        return tuple(sorted((f, r) for f, r, _ in self.components))


def validate_gcm(matrix) -> GCM:
    """Check the three Cartan axioms, reporting the first violation row-major."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise GCMError("matrix is not square")
    for row in matrix:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise GCMError("matrix entries must be integers")
    for i in range(n):
        for j in range(n):
            if i == j:
                if matrix[i][i] != 2:
                    raise DiagonalNotTwo(i)
            else:
                if matrix[i][j] > 0:
                    raise PositiveOffDiagonal(i, j)
                if (matrix[i][j] == 0) != (matrix[j][i] == 0):
                    raise AsymmetricZero(i, j)
    return GCM(n, tuple(tuple(row) for row in matrix))


def is_finite_type(c: GCM) -> bool:
    """Sylvester criterion in exact integers: all leading minors positive."""
    return all(m > 0 for m in intmat.leading_principal_minors(c.rows()))


def symmetrizer(c: GCM) -> Symmetrizer:
    """Symmetrizing vector and per-node squared-length ratios."""
    if not is_finite_type(c):
        raise NotFiniteType()
    n = c.n
    d: list[Fraction | None] = [None] * n
    for comp in c.components():
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if c[i][j] != 0 and d[j] is None:
                    # d_i C_ij = d_j C_ji along the edge i - j
                    d[j] = d[i] * Fraction(c[i][j], c[j][i])
                    stack.append(j)
        denom = lcm(*(x.denominator for x in (d[i] for i in comp)))
        numer = gcd(*(x.numerator * (denom // x.denominator)
                      for x in (d[i] for i in comp)))
        for i in comp:
            d[i] = Fraction(d[i] * denom, numer)
    dd = [int(x) for x in d]
    for i in range(n):
        for j in range(n):
            assert dd[i] * c[i][j] == dd[j] * c[j][i], "symmetrizer identity"
    lengths = [0] * n
    for comp in c.components():
        top = max(dd[i] for i in comp)
        for i in comp:
            if top % dd[i] != 0:
                raise NotFiniteType("symmetrizer does not define length classes")
            lengths[i] = top // dd[i]
    return Symmetrizer(tuple(dd), tuple(lengths))


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

def _valid_type(family: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 3,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


def catalog_types(max_rank: int = 8) -> list[tuple[str, int]]:
    """All valid catalog (family, rank) pairs up to the given rank."""
    out = []
    for family in FAMILIES:
        for rank in range(1, max_rank + 1):
            if _valid_type(family, rank):
                out.append((family, rank))
    return out


def catalog(family: str, rank: int) -> GCM:
    """Standard matrix of a finite type in the fixed node ordering.

    >>> catalog("A", 1).rows()
    [[2]]
    >>> catalog("B", 2).rows()
    [[2, -1], [-2, 2]]
    >>> catalog("G", 2).rows()
    [[2, -1], [-3, 2]]
    """
    if not _valid_type(family, rank):
        raise InvalidType(family, rank)
    n = rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j, cij=-1, cji=-1):
        m[i][j] = cij
        m[j][i] = cji

    if family == "A":
        for i in range(n - 1):
            edge(i, i + 1)
    elif family == "B":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, -1, -2)
    elif family == "C":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 3):
            edge(i, i + 1)
        edge(n - 3, n - 2)
        edge(n - 3, n - 1)
    elif family == "E":
        edge(0, 2)
        edge(1, 3)
        for i in range(2, n - 1):
            edge(i, i + 1)
    elif family == "F":
        edge(0, 1)
        edge(1, 2, -2, -1)
        edge(2, 3)
    elif family == "G":
        edge(0, 1, -1, -3)
    return GCM(n, tuple(tuple(row) for row in m))


def _match_component(c: GCM, nodes: list[int], cat: GCM) -> tuple[int, ...] | None:
    """Backtracking isomorphism of a component onto a catalog matrix.

    Returns the node map (catalog position -> input index) or None. The
    search assigns catalog nodes in order to the smallest fitting input
    node, so the recorded map is deterministic.
    """
    r = cat.n
    if len(nodes) != r:
        return None
    assign: list[int] = []
    used: set[int] = set()

    def ok(cat_k: int, node: int) -> bool:
        for cat_prev, prev in enumerate(assign):
            if cat.entries[cat_k][cat_prev] != c.entries[node][prev]:
                return False
            if cat.entries[cat_prev][cat_k] != c.entries[prev][node]:
                return False
        return True

    def backtrack() -> bool:
        k = len(assign)
        if k == r:
            return True
        for node in nodes:
            if node not in used and ok(k, node):
                assign.append(node)
                used.add(node)
                if backtrack():
                    return True
                assign.pop()
                used.remove(node)
        return False

    return tuple(assign) if backtrack() else None


def classify(c: GCM) -> DynkinType:
    """Match each connected component against the finite-type catalog."""
    if not is_finite_type(c):
        raise NotFiniteType()
    comps = []
    for nodes in c.components():
        rank = len(nodes)
        found = None
        for family in FAMILIES:
            if not _valid_type(family, rank):
                continue
            node_map = _match_component(c, nodes, catalog(family, rank))
            if node_map is not None:
                found = (family, rank, node_map)
                break
        if found is None:
            # cannot happen for a positive-definite GCM; defensive
            raise NotFiniteType("component matches no catalog type")
        comps.append(found)
    return DynkinType(tuple(comps))


def block_diag(*parts: GCM) -> GCM:
    """Direct sum of Cartan matrices (disjoint union of diagrams)."""
    n = sum(p.n for p in parts)
    m = [[0] * n for _ in range(n)]
    off = 0
    for p in parts:
        for i in range(p.n):
            for j in range(p.n):
                m[off + i][off + j] = p[i][j]
        off += p.n
    return GCM(n, tuple(tuple(row) for row in m))


def parse_type(label: str) -> GCM:
    """Parse labels like ``G2`` or ``A1+A1`` into a catalog matrix.

    >>> parse_type("A1+A1").rows()
    [[2, 0], [0, 2]]
    >>> classify(parse_type("F4")).label()
    'F4'
    """
    parts = []
    for piece in label.split("+"):
        piece = piece.strip()
        if len(piece) < 2 or piece[0].upper() not in FAMILIES:
            raise InvalidType(piece[:1], 0)
        family = piece[0].upper()
        try:
            rank = int(piece[1:])
        except ValueError:
            raise InvalidType(family, 0) from None
        parts.append(catalog(family, rank))
    return block_diag(*parts)
