"""Finite groupoids, stars, transitivity, covering morphisms and actions on sets.

Composition follows ``h o g`` defined iff ``d0(h) == d1(g)``; ``comp[h, g]``
holds the composite or ``-1`` where undefined. Partial action tables use the
same ``-1`` convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import (
    AnchorMismatch,
    InvalidAction,
    InvalidGroupoid,
    NotCovering,
    UnknownObject,
)
from .groups import FiniteGroup, as_table, validate_group

TRANSITIVE = "transitive"
SIMPLY_TRANSITIVE = "simply-transitive"
ONE_TRANSITIVE = "one-transitive"
TOTALLY_INTRANSITIVE = "totally-intransitive"


@dataclass(frozen=True)
class Verdict:
    """Result of a yes/no structural check, with a witness when it fails."""

    ok: bool
    reason: str = ""
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True, eq=False)
class Groupoid:
    n_obj: int
    d0: np.ndarray
    d1: np.ndarray
    ident: np.ndarray
    comp: np.ndarray
    inv: np.ndarray
    label: str = ""

    def __post_init__(self):
        for name in ("d0", "d1", "ident", "comp", "inv"):
            object.__setattr__(self, name, as_table(getattr(self, name)))

    @property
    def n_mor(self) -> int:
        return int(self.d0.shape[0])

    def __repr__(self) -> str:
        return f"Groupoid({self.label or '?'}, objects={self.n_obj}, morphisms={self.n_mor})"

    @cached_property
    def hom_counts(self) -> np.ndarray:
        counts = np.zeros((self.n_obj, self.n_obj), dtype=np.int64)
        np.add.at(counts, (self.d0, self.d1), 1)
        return counts

    def hom_set(self, x: int, y: int) -> list[int]:
        return [int(g) for g in np.nonzero((self.d0 == x) & (self.d1 == y))[0]]

    def composable(self, h: int, g: int) -> bool:
        return bool(self.comp[h, g] >= 0)

    def same(self, other: "Groupoid") -> bool:
        return self.n_obj == other.n_obj and all(
            np.array_equal(getattr(self, f), getattr(other, f)) for f in ("d0", "d1", "ident", "comp", "inv")
        )


def validate_groupoid(n_obj, d0, d1, ident, comp, inv=None, label: str = "") -> Groupoid:
    """Check the groupoid axioms; inverses are derived when not supplied."""
    d0 = np.asarray(d0, dtype=np.int64)
    d1 = np.asarray(d1, dtype=np.int64)
    ident = np.asarray(ident, dtype=np.int64)
    comp = np.asarray(comp, dtype=np.int64)
    n = len(d0)
    if comp.shape != (n, n) or d1.shape != (n,) or ident.shape != (n_obj,):
        raise InvalidGroupoid("table shapes disagree")
    if n and (min(d0.min(), d1.min()) < 0 or max(d0.max(), d1.max()) >= n_obj):
        raise InvalidGroupoid("source/target out of range")
    defined = comp >= 0
    expect = d0[:, None] == d1[None, :]
    bad = np.argwhere(defined != expect)
    if len(bad):
        raise InvalidGroupoid("composition defined off the pullback", witness=tuple(bad[0]))
    safe = np.where(defined, comp, 0)
    bad = np.argwhere(defined & ((d0[safe] != d0[None, :]) | (d1[safe] != d1[:, None])))
    if len(bad):
        raise InvalidGroupoid("composite has wrong endpoints", witness=tuple(bad[0]))
    x = np.arange(n_obj)
    if not (np.array_equal(d0[ident], x) and np.array_equal(d1[ident], x)):
        raise InvalidGroupoid("identity with wrong endpoints")
    g = np.arange(n)
    bad = np.nonzero((comp[ident[d1], g] != g) | (comp[g, ident[d0]] != g))[0]
    if len(bad):
        raise InvalidGroupoid("identities are not units", witness=int(bad[0]))
    w = _kernels.comp_assoc_witness(comp)
    if w is not None:
        raise InvalidGroupoid("composition is not associative", witness=w)
    if inv is None:
        inv = np.full(n, -1, dtype=np.int64)
        for k in range(n):
            hits = np.nonzero(comp[:, k] == ident[d0[k]])[0]
            if len(hits) == 0:
                raise InvalidGroupoid("morphism has no inverse", witness=k)
            inv[k] = hits[0]
    inv = np.asarray(inv, dtype=np.int64)
    if n and (not np.array_equal(comp[inv, g], ident[d0]) or not np.array_equal(comp[g, inv], ident[d1])):
        raise InvalidGroupoid("inverse table is wrong")
    return Groupoid(int(n_obj), d0, d1, ident, comp, inv, label)


def _build(n_obj, d0, d1, ident, compose_fn, label="") -> Groupoid:
    """Assemble the composition table from a composite function on defined pairs."""
    d0 = np.asarray(d0, dtype=np.int64)
    d1 = np.asarray(d1, dtype=np.int64)
    n = len(d0)
    comp = np.full((n, n), -1, dtype=np.int64)
    hs, gs = np.nonzero(d0[:, None] == d1[None, :])
    comp[hs, gs] = compose_fn(hs, gs)
    return validate_groupoid(n_obj, d0, d1, ident, comp, label=label)


def group_as_groupoid(G: FiniteGroup) -> Groupoid:
    """One-object groupoid with morphisms the elements of ``G``."""
    n = G.order
    zeros = np.zeros(n, dtype=np.int64)
    return Groupoid(1, zeros, zeros, np.zeros(1, dtype=np.int64), G.op, G.inv, G.label)


def discrete_groupoid(n_obj: int, label: str = "") -> Groupoid:
    idx = np.arange(n_obj)
    comp = np.full((n_obj, n_obj), -1, dtype=np.int64)
    comp[idx, idx] = idx
    return Groupoid(n_obj, idx, idx, idx, comp, idx, label or f"discrete({n_obj})")


# ---------------------------------------------------------------- stars and object groups


def _check_object(G: Groupoid, x: int) -> None:
    if not 0 <= x < G.n_obj:
        raise UnknownObject(f"{G!r} has no object {x}", witness=x)


def star(G: Groupoid, x: int) -> list[int]:
    _check_object(G, x)
    return [int(g) for g in np.nonzero(G.d0 == x)[0]]


def costar(G: Groupoid, x: int) -> list[int]:
    _check_object(G, x)
    return [int(g) for g in np.nonzero(G.d1 == x)[0]]


def object_group(G: Groupoid, x: int) -> tuple[FiniteGroup, np.ndarray]:
    """The vertex group ``G(x, x)`` and the morphism behind each of its elements."""
    _check_object(G, x)
    elems = np.array(G.hom_set(x, x), dtype=np.int64)
    # put the identity first so validate_group sees a canonical table
    elems = np.concatenate([[G.ident[x]], elems[elems != G.ident[x]]])
    pos = np.full(G.n_mor, -1, dtype=np.int64)
    pos[elems] = np.arange(len(elems))
    group = validate_group(pos[G.comp[np.ix_(elems, elems)]], f"{G.label}({x})")
    return group, elems


def components(G: Groupoid) -> list[list[int]]:
    """Connected components as sorted object lists, ordered by least object."""
    reach = G.hom_counts > 0
    seen: set[int] = set()
    comps = []
    for x in range(G.n_obj):
        if x in seen:
            continue
        comp = sorted(int(y) for y in np.nonzero(reach[x])[0])
        seen.update(comp)
        comps.append(comp)
    return comps


# ---------------------------------------------------------------- transitivity


def classify_transitivity(G: Groupoid) -> frozenset[str]:
    """Transitivity flags of ``G``; the empty set means none of them hold.

    ``transitive`` and ``totally-intransitive`` quantify over distinct objects.
    ``simply-transitive`` and ``one-transitive`` bound every hom-set including
    the vertex groups, which is what makes them match injectivity and
    bijectivity of the boundary map of the corresponding crossed module.
    """
    counts = G.hom_counts
    off = ~np.eye(G.n_obj, dtype=bool)
    flags = set()
    if np.all(counts[off] >= 1):
        flags.add(TRANSITIVE)
    if np.all(counts <= 1):
        flags.add(SIMPLY_TRANSITIVE)
    if np.all(counts == 1):
        flags.add(ONE_TRANSITIVE)
    if np.all(counts[off] == 0):
        flags.add(TOTALLY_INTRANSITIVE)
    return frozenset(flags)


# ---------------------------------------------------------------- morphisms and coverings


@dataclass(frozen=True, eq=False)
class GroupoidMorphism:
    source: Groupoid
    target: Groupoid
    obj_map: np.ndarray
    mor_map: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "obj_map", as_table(self.obj_map))
        object.__setattr__(self, "mor_map", as_table(self.mor_map))


def morphism_witness(src: Groupoid, tgt: Groupoid, obj_map, mor_map):
    """First violated functor law as ``(law, data)``, or ``None``."""
    f, F = np.asarray(obj_map), np.asarray(mor_map)
    bad = np.nonzero(tgt.d0[F] != f[src.d0])[0]
    if len(bad):
        return ("d0", int(bad[0]))
    bad = np.nonzero(tgt.d1[F] != f[src.d1])[0]
    if len(bad):
        return ("d1", int(bad[0]))
    bad = np.nonzero(F[src.ident] != tgt.ident[f])[0]
    if len(bad):
        return ("identity", int(bad[0]))
    hs, gs = np.nonzero(src.comp >= 0)
    bad = np.nonzero(F[src.comp[hs, gs]] != tgt.comp[F[hs], F[gs]])[0]
    if len(bad):
        return ("composition", (int(hs[bad[0]]), int(gs[bad[0]])))
    return None


def validate_groupoid_morphism(src: Groupoid, tgt: Groupoid, obj_map, mor_map) -> GroupoidMorphism:
    w = morphism_witness(src, tgt, obj_map, mor_map)
    if w is not None:
        raise InvalidGroupoid(f"not a groupoid morphism ({w[0]})", witness=w[1])
    return GroupoidMorphism(src, tgt, obj_map, mor_map)


def identity_morphism(G: Groupoid) -> GroupoidMorphism:
    return GroupoidMorphism(G, G, np.arange(G.n_obj), np.arange(G.n_mor))


def is_covering_morphism(p: GroupoidMorphism) -> Verdict:
    """Is ``p`` bijective from each star onto the star of the image object?"""
    src, tgt = p.source, p.target
    for x in range(src.n_obj):
        px = int(p.obj_map[x])
        images = p.mor_map[src.d0 == x]
        target_star = np.nonzero(tgt.d0 == px)[0]
        uniq, counts = np.unique(images, return_counts=True)
        if np.any(counts > 1):
            g = int(uniq[np.argmax(counts > 1)])
            return Verdict(False, "not injective on a star", (x, g))
        missing = np.setdiff1d(target_star, uniq)
        if len(missing):
            return Verdict(False, "not surjective on a star", (x, int(missing[0])))
    return Verdict(True)


def lifting_function(p: GroupoidMorphism, a: int, x: int) -> int:
    """The unique morphism in the star at ``x`` sent to ``a`` by a covering ``p``."""
    v = is_covering_morphism(p)
    if not v:
        raise NotCovering(v.reason, witness=v.witness)
    if p.target.d0[a] != p.obj_map[x]:
        raise AnchorMismatch("d0(a) differs from p(x)", witness=(a, x))
    hits = np.nonzero((p.source.d0 == x) & (p.mor_map == a))[0]
    return int(hits[0])


def is_universal_covering(p: GroupoidMorphism) -> Verdict:
    v = is_covering_morphism(p)
    if not v:
        raise NotCovering(v.reason, witness=v.witness)
    if TRANSITIVE not in classify_transitivity(p.source):
        return Verdict(False, "source is not transitive")
    if TRANSITIVE not in classify_transitivity(p.target):
        return Verdict(False, "target is not transitive")
    counts = p.source.hom_counts
    if np.any(counts > 1):
        x, y = np.argwhere(counts > 1)[0]
        return Verdict(False, "a hom-set has more than one element", (int(x), int(y)))
    return Verdict(True)


# ---------------------------------------------------------------- actions on sets


@dataclass(frozen=True, eq=False)
class GroupoidActionOnSet:
    groupoid: Groupoid
    anchor: np.ndarray
    act: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "anchor", as_table(self.anchor))
        object.__setattr__(self, "act", as_table(self.act))

    @property
    def n_carrier(self) -> int:
        return int(self.anchor.shape[0])


_ACTION_LAWS = {
    1: "defined exactly when d0(g) = anchor(s)",
    2: "anchor(g.s) = d1(g)",
    3: "identities act trivially",
    4: "(h o g).s = h.(g.s)",
}


def action_witness(G: Groupoid, anchor, act):
    anchor = np.asarray(anchor, dtype=np.int64)
    act = np.asarray(act, dtype=np.int64)
    if act.shape != (G.n_mor, len(anchor)):
        return ("shape", None)
    w = _kernels.groupoid_action_witness(G.comp, G.ident, G.d0, G.d1, anchor, act)
    if w is None:
        return None
    kind, *rest = w
    return (_ACTION_LAWS[kind], tuple(v for v in rest if v >= 0))


def validate_action(G: Groupoid, anchor, act) -> GroupoidActionOnSet:
    w = action_witness(G, anchor, act)
    if w is not None:
        raise InvalidAction(f"action axiom fails: {w[0]}", witness=w[1])
    return GroupoidActionOnSet(G, anchor, act)


def action_groupoid(action: GroupoidActionOnSet) -> tuple[Groupoid, GroupoidMorphism]:
    """The action groupoid ``G x| S`` and its projection onto ``G``.

    Morphisms are the pairs ``(g, s)`` with ``d0(g) = anchor(s)``, ordered
    lexicographically. ``(g', s') o (g, s)`` (defined when ``s' = g.s``) is
    ``(g' o g, s)``: ``g`` is applied first.
    """
    G = action.groupoid
    act = action.act
    gs, ss = np.nonzero(act >= 0)
    pair_index = np.full(act.shape, -1, dtype=np.int64)
    pair_index[gs, ss] = np.arange(len(gs))
    d0 = ss
    d1 = act[gs, ss]
    ident = pair_index[G.ident[action.anchor], np.arange(action.n_carrier)]

    def compose(h, k):
        return pair_index[G.comp[gs[h], gs[k]], ss[k]]

    H = _build(action.n_carrier, d0, d1, ident, compose, label=f"{G.label}x|S")
    q = GroupoidMorphism(H, G, action.anchor, gs)
    v = is_covering_morphism(q)
    if not v:
        raise InvalidAction(f"projection is not a covering: {v.reason}", witness=v.witness)
    return H, q


def covering_to_action(p: GroupoidMorphism) -> GroupoidActionOnSet:
    """Action of the base on the objects upstairs: ``g.s = d1(lift of g at s)``."""
    v = is_covering_morphism(p)
    if not v:
        raise NotCovering(v.reason, witness=v.witness)
    src, tgt = p.source, p.target
    act = np.full((tgt.n_mor, src.n_obj), -1, dtype=np.int64)
    # each source morphism h is the lift of p(h) at d0(h)
    act[p.mor_map, src.d0] = src.d1
    return validate_action(tgt, p.obj_map, act)


def act_morphism_check(f, action: GroupoidActionOnSet, other: GroupoidActionOnSet) -> Verdict:
    """Is ``f: S -> S'`` a morphism of actions over the same groupoid?"""
    f = np.asarray(f, dtype=np.int64)
    bad = np.nonzero(other.anchor[f] != action.anchor)[0]
    if len(bad):
        return Verdict(False, "anchor not preserved", int(bad[0]))
    gs, ss = np.nonzero(action.act >= 0)
    bad = np.nonzero(f[action.act[gs, ss]] != other.act[gs, f[ss]])[0]
    if len(bad):
        return Verdict(False, "not equivariant", (int(gs[bad[0]]), int(ss[bad[0]])))
    return Verdict(True)


def regular_action(G: FiniteGroup) -> GroupoidActionOnSet:
    """A group, as a one-object groupoid, acting on itself by left translation."""
    return GroupoidActionOnSet(group_as_groupoid(G), np.zeros(G.order, dtype=np.int64), G.op)


def canonical_action(G: Groupoid) -> GroupoidActionOnSet:
    """``G`` acting on its own objects: ``g.x = d1(g)`` when ``d0(g) = x``."""
    act = np.full((G.n_mor, G.n_obj), -1, dtype=np.int64)
    act[np.arange(G.n_mor), G.d0] = G.d1
    return GroupoidActionOnSet(G, np.arange(G.n_obj), act)


# ---------------------------------------------------------------- isomorphism


def find_groupoid_isomorphism(G: Groupoid, H: Groupoid) -> GroupoidMorphism | None:
    """An isomorphism ``G -> H`` or ``None``.

    A connected groupoid is determined by its vertex group and object count, so
    components are matched by size and vertex-group isomorphism, and a functor
    is assembled from a spanning tree of each component.
    """
    from .groups import find_isomorphism

    if G.n_obj != H.n_obj or G.n_mor != H.n_mor:
        return None
    gcomps, hcomps = components(G), components(H)
    if sorted(map(len, gcomps)) != sorted(map(len, hcomps)):
        return None
    vgroups = {}

    def vgroup(K, comp):
        key = (id(K), comp[0])
        if key not in vgroups:
            vgroups[key] = object_group(K, comp[0])
        return vgroups[key]

    used = [False] * len(hcomps)
    obj_map = np.full(G.n_obj, -1, dtype=np.int64)
    mor_map = np.full(G.n_mor, -1, dtype=np.int64)
    for gc in gcomps:
        ggrp, gel = vgroup(G, gc)
        match = None
        for j, hc in enumerate(hcomps):
            if used[j] or len(hc) != len(gc):
                continue
            hgrp, hel = vgroup(H, hc)
            iso = find_isomorphism(ggrp, hgrp)
            if iso is not None:
                match = (j, hc, hel, iso)
                break
        if match is None:
            return None
        j, hc, hel, iso = match
        used[j] = True
        r, s = gc[0], hc[0]
        tree_g = {y: G.hom_set(r, y)[0] for y in gc}
        tree_h = {}
        for y, y2 in zip(gc, hc):
            obj_map[y] = y2
            tree_h[y] = H.hom_set(s, y2)[0]
        vert = {int(gel[i]): int(hel[iso.map[i]]) for i in range(len(gel))}
        for g in np.nonzero(np.isin(G.d0, gc))[0]:
            y, z = int(G.d0[g]), int(G.d1[g])
            # g = t_z o (t_z^-1 o g o t_y) o t_y^-1 with the middle in G(r)
            middle = G.comp[G.inv[tree_g[z]], G.comp[g, tree_g[y]]]
            image = H.comp[tree_h[z], H.comp[vert[int(middle)], H.inv[tree_h[y]]]]
            mor_map[g] = image
    return validate_groupoid_morphism(G, H, obj_map, mor_map)


# ---------------------------------------------------------------- serialization


def groupoid_to_json(G: Groupoid) -> dict:
    return {
        "label": G.label,
        "n_obj": G.n_obj,
        "d0": G.d0.tolist(),
        "d1": G.d1.tolist(),
        "ident": G.ident.tolist(),
        "comp": G.comp.tolist(),
    }


def groupoid_from_json(data: dict) -> Groupoid:
    return validate_groupoid(
        data["n_obj"], data["d0"], data["d1"], data["ident"], data["comp"], label=data.get("label", "")
    )
