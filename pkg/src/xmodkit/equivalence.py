"""The functors between group-groupoids and crossed modules, and round-trip witnesses.

``eta`` lists morphisms ``(a, b)`` of the semidirect product row-major, at
index ``a * |B| + b``. With that indexing ``delta(eta(xm))`` reproduces ``xm``
table for table, and the canonical witnesses below are checked rather than
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .crossed_modules import (
    CrossedModule,
    XModMorphism,
    classify_xmod_transitivity,
    validate_xmod,
    validate_xmod_morphism,
)
from .errors import InternalContradiction, WitnessFails, XModKitError
from .group_groupoids import (
    GroupGroupoid,
    GroupGroupoidMorphism,
    validate_gg_morphism,
    validate_group_groupoid,
)
from .groupoids import Groupoid, classify_transitivity
from .groups import GroupHom, Subgroup, _from_op, subgroup_as_group


def kernel_d0_positions(G: GroupGroupoid) -> tuple[np.ndarray, np.ndarray]:
    """``(elements, pos)``: Ker d0 as sorted morphisms and the inverse lookup."""
    ker = G.kernel_d0()
    pos = np.full(G.n_mor, -1, dtype=np.int64)
    pos[ker] = np.arange(len(ker))
    return ker, pos


def delta(G: GroupGroupoid) -> CrossedModule:
    """``(Ker d0, Ob G, d1)`` with ``b.a = 1_b + a - 1_b``."""
    mor = G.mor_group
    ker, pos = kernel_d0_positions(G)
    A, _ = subgroup_as_group(Subgroup(mor, tuple(int(k) for k in ker)), f"ker({G.label})")
    ids = G.base.ident
    conj = mor.op[mor.op[ids[:, None], ker[None, :]], mor.inv[ids][:, None]]
    try:
        return validate_xmod(A, G.obj_group, G.base.d1[ker], pos[conj], f"delta({G.label})")
    except XModKitError as exc:
        raise InternalContradiction(f"delta produced an invalid crossed module: {exc}") from exc


def eta(xm: CrossedModule) -> GroupGroupoid:
    """The group-groupoid with objects B and morphisms the semidirect product ``A x| B``."""
    A, B, alpha, act = xm.A, xm.B, xm.alpha.map, xm.action.act
    na, nb = A.order, B.order
    idx = np.arange(na * nb)
    a, b = idx // nb, idx % nb
    d0 = b
    d1 = B.op[alpha[a], b]
    ident = np.arange(nb)  # (0, b)
    # (a1, b1) + (a, b) = (a1 + b1.a, b1 + b)
    sum_a = A.op[a[:, None], act[b[:, None], a[None, :]]]
    sum_b = B.op[b[:, None], b[None, :]]
    mor_op = sum_a * nb + sum_b
    # (a1, b1) o (a, b) = (a1 + a, b) when b1 = alpha(a) + b
    comp = np.where(d0[:, None] == d1[None, :], A.op[a[:, None], a[None, :]] * nb + b[None, :], -1)
    inv = A.inv[a] * nb + d1
    name = xm.label or f"{A.label}->{B.label}"
    base = Groupoid(nb, d0, d1, ident, comp, inv, f"eta({name})")
    try:
        return validate_group_groupoid(base, B, _from_op(mor_op, f"{A.label}x|{B.label}"))
    except XModKitError as exc:
        raise InternalContradiction(f"eta produced an invalid group-groupoid: {exc}") from exc


def eta_morphism(m: XModMorphism, source: GroupGroupoid | None = None, target: GroupGroupoid | None = None):
    """``eta`` on morphisms: ``(a, b) -> (f1 a, f2 b)``."""
    src = source or eta(m.source)
    tgt = target or eta(m.target)
    nb, nb2 = m.source.B.order, m.target.B.order
    idx = np.arange(src.n_mor)
    mor_map = m.f1.map[idx // nb] * nb2 + m.f2.map[idx % nb]
    return validate_gg_morphism(src, tgt, m.f2.map, mor_map)


def delta_morphism(F: GroupGroupoidMorphism) -> XModMorphism:
    """``delta`` on morphisms: restrict to Ker d0 and to objects."""
    src, tgt = delta(F.source), delta(F.target)
    ker, _ = kernel_d0_positions(F.source)
    _, pos2 = kernel_d0_positions(F.target)
    return validate_xmod_morphism(src, tgt, pos2[F.mor_map[ker]], F.obj_map)


@dataclass(frozen=True)
class EquivWitness:
    """``iso_obj`` is the map on B / objects; ``iso_mor`` the map on A or on morphisms."""

    direction: str
    iso_obj: np.ndarray
    iso_mor: np.ndarray
    morphism: object


def roundtrip_xmod(xm: CrossedModule) -> EquivWitness:
    """``(a -> (a, 0), 1_B)`` as an isomorphism ``xm -> delta(eta(xm))``."""
    back = delta(eta(xm))
    nb = xm.B.order
    _, pos = kernel_d0_positions(eta(xm))
    f1 = pos[np.arange(xm.A.order) * nb]
    f2 = np.arange(nb)
    try:
        m = validate_xmod_morphism(xm, back, f1, f2)
    except XModKitError as exc:
        raise WitnessFails(f"canonical witness is not a morphism: {exc}") from exc
    if not m.is_iso:
        raise WitnessFails("canonical witness is not bijective")
    return EquivWitness("delta-eta", f2, f1, m)


def roundtrip_gg(G: GroupGroupoid) -> EquivWitness:
    """``(a, b) -> a + 1_b`` as an isomorphism ``eta(delta(G)) -> G``."""
    xm = delta(G)
    E = eta(xm)
    ker, _ = kernel_d0_positions(G)
    nb = G.n_obj
    idx = np.arange(E.n_mor)
    mor_map = G.mor_group.op[ker[idx // nb], G.base.ident[idx % nb]]
    obj_map = np.arange(nb)
    try:
        F = validate_gg_morphism(E, G, obj_map, mor_map)
    except XModKitError as exc:
        raise WitnessFails(f"canonical witness is not a morphism: {exc}") from exc
    if len(np.unique(mor_map)) != G.n_mor:
        raise WitnessFails("canonical witness is not bijective on morphisms")
    return EquivWitness("eta-delta", obj_map, mor_map, F)


@dataclass(frozen=True)
class TransitivityReport:
    xmod_flags: frozenset
    groupoid_flags: frozenset

    @property
    def agree(self) -> bool:
        return self.xmod_flags == self.groupoid_flags


def transitivity_correspondence(xm: CrossedModule, G: GroupGroupoid | None = None) -> TransitivityReport:
    G = G or eta(xm)
    return TransitivityReport(classify_xmod_transitivity(xm), classify_transitivity(G.base))


def gg_transitivity_correspondence(G: GroupGroupoid) -> TransitivityReport:
    """The same comparison starting from a group-groupoid."""
    return TransitivityReport(classify_xmod_transitivity(delta(G)), classify_transitivity(G.base))
