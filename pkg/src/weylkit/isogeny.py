"""p-morphisms of pinned root data.

A p-morphism from a source datum to a target datum consists of an integer
matrix f from the target character lattice to the source one, a bijection u
of the source simples onto the target simples, and a map q from source
simples to powers of a prime p, subject to

    f(u(a))            = q(a) * a          on the character lattices,
    transpose(f)(a~)   = q(a) * u(a)~      on the coroot side,

for every simple root a (a~ denotes its coroot). These two families force
the Cartan compatibility q(a) <a, b~> = q(b) <u(a), u(b)~>, which is also
checked explicitly, and they determine the extension of u and q from the
simple roots to all roots; the extension is exposed as a derived map rather
than stored.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .cartan import DynkinType, catalog, catalog_types
from .rootdata import PinnedRootDatum, adjoint_datum


class IsogenyError(ValueError):
    code = "IsogenyError"

    def to_json(self) -> dict:
        return {"code": self.code, "message": str(self)}


class InvalidPMorphism(IsogenyError):
    code = "InvalidPMorphism"


class RootEquationFails(InvalidPMorphism):
    code = "RootEquationFails"

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"f(u(a)) = q(a) a fails at simple index {k}")


class CorootEquationFails(InvalidPMorphism):
    code = "CorootEquationFails"

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"transpose(f) fails the coroot equation at simple index {k}")


class QNotPowerOfP(InvalidPMorphism):
    code = "QNotPowerOfP"

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"q value at simple index {k} is not a power of p")


class CartanIncompatible(InvalidPMorphism):
    code = "CartanIncompatible"

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"Cartan compatibility fails at simple pair ({i},{j})")


@dataclass(frozen=True)
class PMorphism:
    source: PinnedRootDatum
    target: PinnedRootDatum
    f: tuple[tuple[int, ...], ...]   # matrix: target lattice -> source lattice
    u: tuple[int, ...]               # source simple k -> target simple u[k]
    q: tuple[int, ...]               # scaling factor per source simple
    p: int

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "f": [list(r) for r in self.f],
            "u": list(self.u),
            "q": list(self.q),
            "p": self.p,
        }


def _is_p_power(x: int, p: int) -> bool:
    if x < 1:
        return False
    while x % p == 0:
        x //= p
    return x == 1


def _p_valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def validate_pmorphism(phi: PMorphism) -> None:
    """Verify the defining equations exactly; raises on the first failure."""
    src, tgt = phi.source, phi.target
    n = len(src.simples)
    if len(tgt.simples) != n or sorted(phi.u) != list(range(n)):
        raise InvalidPMorphism("u is not a bijection of the simple roots")
    if phi.p < 2 or any(phi.p % d == 0 for d in range(2, phi.p)):
        raise InvalidPMorphism(f"{phi.p} is not prime")
    f = [list(r) for r in phi.f]
    if len(f) != src.rank or any(len(r) != tgt.rank for r in f):
        raise InvalidPMorphism("f has the wrong shape")
    for k in range(n):
        if not _is_p_power(phi.q[k], phi.p):
            raise QNotPowerOfP(k)
    ft = intmat.transpose(f)
    for k in range(n):
        img = intmat.matvec(f, list(tgt.simple_root(phi.u[k])))
        if img != [phi.q[k] * x for x in src.simple_root(k)]:
            raise RootEquationFails(k)
        img_cv = intmat.matvec(ft, list(src.simple_coroot(k)))
        if img_cv != [phi.q[k] * x for x in tgt.simple_coroot(phi.u[k])]:
            raise CorootEquationFails(k)
    cg = src.cartan_matrix()
    ch = tgt.cartan_matrix()
    for i in range(n):
        for j in range(n):
            if phi.q[i] * cg[i][j] != phi.q[j] * ch[phi.u[i]][phi.u[j]]:
                raise CartanIncompatible(i, j)


def frobenius(datum: PinnedRootDatum, p: int, n: int = 1) -> PMorphism:
    """The constant p-morphism: multiplication by p^n on the same datum."""
    assert n >= 1
    scale = p ** n
    rank = datum.rank
    f = tuple(tuple(scale if i == j else 0 for j in range(rank)) for i in range(rank))
    phi = PMorphism(datum, datum, f,
                    tuple(range(len(datum.simples))),
                    tuple(scale for _ in datum.simples), p)
    validate_pmorphism(phi)
    return phi


def compose(outer: PMorphism, inner: PMorphism) -> PMorphism:
    """outer after inner (inner's target datum must equal outer's source)."""
    if inner.target != outer.source or inner.p != outer.p:
        raise InvalidPMorphism("morphisms do not compose")
    f = intmat.matmul([list(r) for r in inner.f], [list(r) for r in outer.f])
    u = tuple(outer.u[inner.u[k]] for k in range(len(inner.u)))
    q = tuple(inner.q[k] * outer.q[inner.u[k]] for k in range(len(inner.q)))
    phi = PMorphism(inner.source, outer.target,
                    tuple(tuple(r) for r in f), u, q, inner.p)
    validate_pmorphism(phi)
    return phi


def factor_primitive_constant(phi: PMorphism) -> tuple[PMorphism, int]:
    """Split off the largest constant Frobenius factor.

    Returns (primitive part, exponent k) with phi = frobenius(p, k) after
    the primitive part; the primitive part has q value 1 somewhere.
    """
    validate_pmorphism(phi)
    k = min(_p_valuation(x, phi.p) for x in phi.q)
    if k == 0:
        return phi, 0
    scale = phi.p ** k
    if any(x % scale for row in phi.f for x in row):
        raise InvalidPMorphism("constant factor does not divide f")
    prim = PMorphism(
        phi.source, phi.target,
        tuple(tuple(x // scale for x in row) for row in phi.f),
        phi.u, tuple(x // scale for x in phi.q), phi.p,
    )
    validate_pmorphism(prim)
    return prim, k


def is_constant(phi: PMorphism) -> bool:
    return len(set(phi.q)) == 1


def is_primitive(phi: PMorphism) -> bool:
    return 1 in phi.q


def extend_to_roots(phi: PMorphism) -> list[tuple[int, int]]:
    """The unique extension of (u, q) from the simples to all roots.

    Returns, for each root index of the source datum, the pair (target root
    index, q value), determined by transpose(f)(coroot) = q * image coroot.
    """
    validate_pmorphism(phi)
    src, tgt = phi.source, phi.target
    ft = intmat.transpose([list(r) for r in phi.f])
    tgt_index = {cv: i for i, cv in enumerate(tgt.coroots)}
    out = []
    for i in range(len(src.roots)):
        img = intmat.matvec(ft, list(src.coroots[i]))
        found = None
        for power in _p_powers_up_to(phi.p, max(map(abs, img)) or 1):
            if all(x % power == 0 for x in img):
                cand = tuple(x // power for x in img)
                j = tgt_index.get(cand)
                if j is not None:
                    found = (j, power)
        if found is None:
            raise InvalidPMorphism(f"no root image for source root {i}")
        out.append(found)
    return out


def _p_powers_up_to(p: int, bound: int) -> list[int]:
    out = [1]
    while out[-1] * p <= bound:
        out.append(out[-1] * p)
    return out


def enumerate_special(family: str, rank: int, p: int) -> list[PMorphism]:
    """All primitive non-constant p-morphisms out of an irreducible type.

    Exhaustive search over target catalog types of the same rank and all
    bijections u of the simples, with q valued in {1, p} and both values
    attained. For each u the Cartan compatibility propagates q across the
    (connected) Dynkin graph from a single seed, so only two q candidates
    exist per bijection. The source and target carry their adjoint data,
    where the defining equations pin f down to a monomial matrix, so a
    solution exists exactly when the compatibility holds.
    """
    src_gcm = catalog(family, rank)
    src_datum = adjoint_datum(src_gcm)
    cg = src_gcm.rows()
    out = []
    for tgt_family, tgt_rank in catalog_types(max_rank=rank):
        if tgt_rank != rank:
            continue
        tgt_gcm = catalog(tgt_family, tgt_rank)
        ch = tgt_gcm.rows()
        tgt_datum = adjoint_datum(tgt_gcm)
        for u in _permutations(rank):
            for seed in (1, p):
                q = _propagate_q(cg, ch, u, seed, p)
                if q is None or set(q) != {1, p}:
                    continue
                f = [[0] * rank for _ in range(rank)]
                for i in range(rank):
                    f[i][u[i]] = q[i]
                phi = PMorphism(src_datum, tgt_datum,
                                tuple(tuple(r) for r in f),
                                tuple(u), q, p)
                validate_pmorphism(phi)
                out.append(phi)
    return out


def _propagate_q(cg, ch, u, seed: int, p: int) -> tuple[int, ...] | None:
    """Solve q_i cg[i][j] = q_j ch[u(i)][u(j)] over the Dynkin graph.

    Returns the unique solution with q[0] = seed and values in {1, p}, or
    None if the equations are inconsistent or leave that range. Assumes the
    source diagram is connected.
    """
    n = len(cg)
    q: list[int | None] = [None] * n
    q[0] = seed
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(n):
            if i == j or cg[i][j] == 0:
                continue
            if ch[u[i]][u[j]] == 0:
                return None
            num = q[i] * cg[i][j]
            den = ch[u[i]][u[j]]
            if num % den:
                return None
            val = num // den
            if val not in (1, p):
                return None
            if q[j] is None:
                q[j] = val
                frontier.append(j)
            elif q[j] != val:
                return None
    if any(x is None for x in q):
        return None
    # full verification, including the non-edge pairs
    for i in range(n):
        for j in range(n):
            if q[i] * cg[i][j] != q[j] * ch[u[i]][u[j]]:
                return None
    return tuple(q)


def enumerate_special_for_type(dtype: DynkinType, p: int) -> list[PMorphism]:
    if len(dtype.components) != 1:
        raise InvalidPMorphism("special isogeny search expects an irreducible type")
    family, rank, _ = dtype.components[0]
    return enumerate_special(family, rank, p)


def _permutations(n: int):
    from itertools import permutations

    return permutations(range(n))
