"""Finite groups as operation tables, with subgroup, quotient and hom machinery.

Elements are integer indices ``0..n-1`` and the identity is always ``0``.
Groups are written multiplicatively in code (``op[a, b]``) but nothing here
assumes commutativity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import (
    CapExceeded,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotHomomorphism,
    NotIso,
    NotNormal,
    NotSubgroup,
)

#: largest automorphism group we are willing to tabulate
AUT_CAP = 5040


def as_table(values) -> np.ndarray:
    arr = np.array(values, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table."""

    op: np.ndarray
    inv: np.ndarray
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "op", as_table(self.op))
        object.__setattr__(self, "inv", as_table(self.inv))

    @property
    def order(self) -> int:
        return int(self.op.shape[0])

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        name = self.label or "group"
        return f"FiniteGroup({name}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.op[a, b])

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return int(self.op[self.op[g, x], self.inv[g]])

    @cached_property
    def rows(self) -> list[list[int]]:
        return self.op.tolist()

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.op, self.op.T))

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        rows = self.rows
        for g in range(n):
            k, x = 1, g
            while x != 0:
                x = rows[x][g]
                k += 1
            orders[g] = k
        return orders

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by decreasing element order."""
        by_order = sorted(range(1, self.order), key=lambda g: (-self.element_orders[g], g))
        gens: list[int] = []
        span = {0}
        for g in by_order:
            if g not in span:
                gens.append(g)
                span = set(closure(self, gens))
            if len(span) == self.order:
                break
        return tuple(gens)

    def same_table(self, other: "FiniteGroup") -> bool:
        return self.order == other.order and bool(np.array_equal(self.op, other.op))


def _from_op(op, label: str = "") -> FiniteGroup:
    """Wrap a table already known to be a group with identity 0."""
    op = np.asarray(op, dtype=np.int64)
    inv = np.argmin(op, axis=1)  # position of the 0 in each row
    return FiniteGroup(op, inv, label)


def validate_group(table, label: str = "") -> FiniteGroup:
    """Check the group axioms on a square table and return a canonical group.

    If the identity is not at index 0 the elements are relabelled by swapping
    it with 0.
    """
    op = np.array(table, dtype=np.int64)
    if op.ndim != 2 or op.shape[0] != op.shape[1] or op.shape[0] == 0:
        raise ValueError("group table must be a non-empty square table")
    n = op.shape[0]
    if op.min() < 0 or op.max() >= n:
        raise ValueError("group table entries must lie in 0..n-1")
    idx = np.arange(n)
    units = [e for e in range(n) if np.array_equal(op[e], idx) and np.array_equal(op[:, e], idx)]
    if not units:
        raise NoIdentity("no two-sided identity element")
    e = units[0]
    inv = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        cands = np.nonzero((op[x] == e) & (op[:, x] == e))[0]
        if len(cands) == 0:
            raise NoInverse(f"element {x} has no two-sided inverse", witness=x)
        inv[x] = cands[0]
    w = _kernels.assoc_witness(op)
    if w is not None:
        raise NotAssociative("operation is not associative", witness=w)
    if e != 0:
        perm = idx.copy()
        perm[0], perm[e] = e, 0  # new index -> old index (an involution)
        op = perm[op[np.ix_(perm, perm)]]
        inv = perm[inv[perm]]
    return FiniteGroup(op, inv, label)


# ---------------------------------------------------------------- constructors


def cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    return _from_op((idx[:, None] + idx[None, :]) % n, f"Z{n}")


def permutation_group(perms, label: str = "") -> FiniteGroup:
    """Group of permutations closed under composition ``(p q)(i) = p(q(i))``.

    ``perms`` must start with the identity permutation.
    """
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    op = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            op[i, j] = index[tuple(p[k] for k in q)]
    return _from_op(op, label)


def symmetric(n: int) -> FiniteGroup:
    return permutation_group(itertools.permutations(range(n)), f"S{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; element ``(k, f)`` is ``r^k s^f``."""
    size = 2 * n
    op = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        k1, f1 = divmod(i, 2)
        for j in range(size):
            k2, f2 = divmod(j, 2)
            k = (k1 + (-k2 if f1 else k2)) % n
            op[i, j] = 2 * k + (f1 ^ f2)
    return _from_op(op, f"D{n}")


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n (``Q8`` for n = 2)."""
    # elements a^k x^f, a of order 2n, x^2 = a^n, x a x^-1 = a^-1
    m = 2 * n
    size = 4 * n
    op = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        f1, k1 = divmod(i, m)
        for j in range(size):
            f2, k2 = divmod(j, m)
            k = (k1 + (-k2 if f1 else k2)) % m
            if f1 and f2:
                k = (k + n) % m
            op[i, j] = (f1 ^ f2) * m + k
    return _from_op(op, "Q8" if n == 2 else f"Dic{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup, label: str | None = None) -> FiniteGroup:
    """``G x H`` with ``(g, h)`` at index ``g * |H| + h``."""
    ng, nh = G.order, H.order
    g = np.arange(ng * nh) // nh
    h = np.arange(ng * nh) % nh
    op = G.op[g[:, None], g[None, :]] * nh + H.op[h[:, None], h[None, :]]
    return _from_op(op, label if label is not None else f"{G.label}x{H.label}")


def klein_four() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2), "V4")


def trivial_group() -> FiniteGroup:
    return cyclic(1)


def semidirect_product(A: FiniteGroup, X: FiniteGroup, act: np.ndarray, label: str = "") -> FiniteGroup:
    """``A x| X`` with ``(a, x)(a1, x1) = (a (x.a1), x x1)``; ``(a, x)`` at ``a * |X| + x``."""
    na, nx = A.order, X.order
    a = np.arange(na * nx) // nx
    x = np.arange(na * nx) % nx
    new_a = A.op[a[:, None], act[x[:, None], a[None, :]]]
    new_x = X.op[x[:, None], x[None, :]]
    return _from_op(new_a * nx + new_x, label)


# ---------------------------------------------------------------- subgroups


def closure(G: FiniteGroup, gens) -> list[int]:
    """Sorted elements of the subgroup generated by ``gens``."""
    rows = G.rows
    gens = [int(g) for g in gens]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = rows[x]
            for s in gens:
                y = row[s]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return int(x) in self.members

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.elements == other.elements and (
            self.parent is other.parent or self.parent.same_table(other.parent)
        )

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Subgroup({self.parent.label}, {list(self.elements)})"

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.elements)

    def issubset(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def is_normal(self) -> bool:
        return normality_witness(self) is None


def subgroup(G: FiniteGroup, elements) -> Subgroup:
    """Validated subgroup from an element collection."""
    elems = tuple(sorted({int(x) for x in elements}))
    members = set(elems)
    if 0 not in members:
        raise NotSubgroup("missing the identity", witness=0)
    for a in elems:
        if int(G.inv[a]) not in members:
            raise NotSubgroup("not closed under inverses", witness=a)
        for b in elems:
            if int(G.op[a, b]) not in members:
                raise NotSubgroup("not closed under the operation", witness=(a, b))
    return Subgroup(G, elems)


def generated(G: FiniteGroup, gens) -> Subgroup:
    return Subgroup(G, tuple(closure(G, gens)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All subgroups, lexicographically ordered by their sorted element tuples."""
    found = {(0,)}
    frontier = [(0,)]
    while frontier:
        nxt = []
        for elems in frontier:
            members = set(elems)
            for g in range(G.order):
                if g in members:
                    continue
                sub = tuple(closure(G, list(elems[1:]) + [g]))
                if sub not in found:
                    found.add(sub)
                    nxt.append(sub)
        frontier = nxt
    return [Subgroup(G, s) for s in sorted(found)]


def normality_witness(N: Subgroup):
    """A pair ``(g, n)`` with ``g n g^-1`` outside ``N``, or ``None``."""
    G = N.parent
    members = N.members
    for g in range(G.order):
        for n in N.elements:
            if G.conj(g, n) not in members:
                return (g, n)
    return None


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return [S for S in subgroups(G) if S.is_normal()]


def center(G: FiniteGroup) -> Subgroup:
    commutes = np.all(G.op == G.op.T, axis=1)
    return Subgroup(G, tuple(int(x) for x in np.nonzero(commutes)[0]))


# ---------------------------------------------------------------- homomorphisms


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    map: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "map", as_table(self.map))

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    def __repr__(self) -> str:
        return f"GroupHom({self.source.label} -> {self.target.label}, {self.map.tolist()})"

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, tuple(int(x) for x in np.nonzero(self.map == 0)[0]))

    def image(self) -> Subgroup:
        return Subgroup(self.target, tuple(sorted({int(x) for x in self.map})))

    @property
    def is_injective(self) -> bool:
        return len(np.unique(self.map)) == self.source.order

    @property
    def is_surjective(self) -> bool:
        return len(np.unique(self.map)) == self.target.order

    @property
    def is_iso(self) -> bool:
        return self.is_injective and self.is_surjective

    @property
    def is_zero(self) -> bool:
        return not self.map.any()

    def inverse(self) -> "GroupHom":
        if not self.is_iso:
            raise NotIso(f"{self!r} is not an isomorphism")
        inv = np.empty(self.source.order, dtype=np.int64)
        inv[self.map] = np.arange(self.source.order)
        return GroupHom(self.target, self.source, inv)

    def same(self, other: "GroupHom") -> bool:
        return bool(np.array_equal(self.map, other.map))


def validate_hom(source: FiniteGroup, target: FiniteGroup, mapping) -> GroupHom:
    m = np.asarray(mapping, dtype=np.int64)
    if m.shape != (source.order,) or (m.size and (m.min() < 0 or m.max() >= target.order)):
        raise NotHomomorphism("map is not a total function into the target")
    if m[0] != 0:
        raise NotHomomorphism("identity is not sent to the identity", witness=0)
    w = _kernels.hom_witness(source.op, target.op, m)
    if w is not None:
        raise NotHomomorphism("map does not respect the operation", witness=w)
    return GroupHom(source, target, m)


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, np.arange(G.order))


def zero_hom(G: FiniteGroup, H: FiniteGroup) -> GroupHom:
    return GroupHom(G, H, np.zeros(G.order, dtype=np.int64))


def compose(f: GroupHom, g: GroupHom) -> GroupHom:
    """``f o g`` (apply ``g`` first)."""
    return GroupHom(g.source, f.target, f.map[g.map])


def _extend(G: FiniteGroup, H: FiniteGroup, gens, imgs):
    """Extend generator images to a map on the generated subgroup, or ``None``."""
    grows, hrows = G.rows, H.rows
    m = [-1] * G.order
    m[0] = 0
    queue = [0]
    pairs = list(zip(gens, imgs))
    for g in queue:
        grow, hrow = grows[g], hrows[m[g]]
        for s, t in pairs:
            x, y = grow[s], hrow[t]
            mx = m[x]
            if mx < 0:
                m[x] = y
                queue.append(x)
            elif mx != y:
                return None
    return m


def _hom_search(G: FiniteGroup, H: FiniteGroup, bijective: bool):
    gens = G.generators
    gorders = [int(G.element_orders[s]) for s in gens]
    horders = H.element_orders
    if bijective:
        cands = [[int(h) for h in np.nonzero(horders == o)[0]] for o in gorders]
    else:
        cands = [[int(h) for h in np.nonzero(o % horders == 0)[0]] for o in gorders]

    def rec(k, imgs):
        if k == len(gens):
            m = _extend(G, H, gens, imgs)
            if m is not None and (not bijective or len(set(m)) == G.order):
                yield m
            return
        for t in cands[k]:
            nxt = imgs + [t]
            if k + 1 < len(gens) and _extend(G, H, gens[: k + 1], nxt) is None:
                continue
            yield from rec(k + 1, nxt)

    if not gens:  # trivial source
        yield [0]
        return
    yield from rec(0, [])


def enumerate_homs(G: FiniteGroup, H: FiniteGroup) -> list[GroupHom]:
    """Every homomorphism ``G -> H``, sorted lexicographically by map."""
    maps = sorted(tuple(m) for m in _hom_search(G, H, bijective=False))
    return [GroupHom(G, H, np.array(m, dtype=np.int64)) for m in maps]


def enumerate_isos(G: FiniteGroup, H: FiniteGroup) -> list[GroupHom]:
    if G.order != H.order:
        return []
    maps = sorted(tuple(m) for m in _hom_search(G, H, bijective=True))
    return [GroupHom(G, H, np.array(m, dtype=np.int64)) for m in maps]


def _invariant(G: FiniteGroup):
    return (G.order, G.is_abelian, tuple(sorted(G.element_orders.tolist())), len(center(G)))


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> GroupHom | None:
    """First isomorphism found by generator-image search, with early exit."""
    if _invariant(G) != _invariant(H):
        return None
    for m in _hom_search(G, H, bijective=True):
        return GroupHom(G, H, np.array(m, dtype=np.int64))
    return None


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


def hom_invariants(h: GroupHom) -> tuple[Subgroup, Subgroup]:
    return h.kernel(), h.image()


# ---------------------------------------------------------------- sub- and quotient groups


def subgroup_as_group(S: Subgroup, label: str = "") -> tuple[FiniteGroup, GroupHom]:
    """Relabel ``S`` as a group on ``0..|S|-1`` (sorted order) with its inclusion."""
    G = S.parent
    elems = np.array(S.elements, dtype=np.int64)
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[elems] = np.arange(len(elems))
    op = pos[G.op[np.ix_(elems, elems)]]
    H = _from_op(op, label)
    return H, GroupHom(H, G, elems)


def quotient(G: FiniteGroup, N: Subgroup, label: str = "") -> tuple[FiniteGroup, GroupHom]:
    """``G/N`` with cosets ordered by least member, plus the projection."""
    w = normality_witness(N)
    if w is not None:
        raise NotNormal(f"{N!r} is not normal", witness=w)
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        k = len(reps)
        reps.append(g)
        for n in N.elements:
            coset_of[G.op[g, n]] = k
    reps = np.array(reps, dtype=np.int64)
    op = coset_of[G.op[np.ix_(reps, reps)]]
    Q = _from_op(op, label or (f"{G.label}/{len(N)}" if G.label else ""))
    return Q, GroupHom(G, Q, coset_of)


# ---------------------------------------------------------------- automorphisms


def automorphisms(G: FiniteGroup) -> list[np.ndarray]:
    """All automorphisms as maps, sorted lexicographically (identity first)."""
    return [h.map for h in enumerate_isos(G, G)]


def automorphism_group(G: FiniteGroup, cap: int = AUT_CAP) -> tuple[FiniteGroup, np.ndarray]:
    """``Aut(G)`` as a table group plus ``eval[aut, g]``; ``(a o b)(g) = a(b(g))``."""
    auts = automorphisms(G)
    if len(auts) > cap:
        raise CapExceeded(f"|Aut({G.label})| = {len(auts)} exceeds {cap}")
    evaluation = np.array(auts, dtype=np.int64).reshape(len(auts), G.order)
    # an automorphism is determined by the images of the generators
    gens = np.array(G.generators, dtype=np.int64)
    radix = G.order ** np.arange(len(gens), dtype=np.int64)
    codes = evaluation[:, gens] @ radix
    order = np.argsort(codes)
    composed = evaluation[:, evaluation[:, gens]]  # [i, j, p] = a_i(a_j(gen_p))
    op = order[np.searchsorted(codes[order], composed @ radix)]
    A = _from_op(op, f"Aut({G.label})" if G.label else "")
    evaluation.setflags(write=False)
    return A, evaluation


# ---------------------------------------------------------------- serialization


def group_to_json(G: FiniteGroup) -> dict:
    return {"label": G.label, "order": G.order, "table": G.op.tolist()}


def group_from_json(data: dict) -> FiniteGroup:
    G = validate_group(data["table"], data.get("label", ""))
    if G.order != data.get("order", G.order):
        raise ValueError(f"declared order {data['order']} does not match table")
    return G


def hom_to_json(h: GroupHom) -> dict:
    return {"source": h.source.label, "target": h.target.label, "map": h.map.tolist()}
