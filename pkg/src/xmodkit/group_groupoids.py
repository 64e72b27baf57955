"""Group-groupoids, their actions on groups and action group-groupoids."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import (
    ActionAxiomFails,
    AdditionNotFunctorial,
    InterchangeFails,
    InvalidAction,
    NotGroupHomAnchor,
    NotHomomorphism,
    WrongUnit,
)
from .groupoids import (
    Groupoid,
    GroupoidActionOnSet,
    GroupoidMorphism,
    action_groupoid,
    action_witness,
    discrete_groupoid,
    groupoid_from_json,
    groupoid_to_json,
    is_covering_morphism,
    morphism_witness,
)
from .groups import FiniteGroup, GroupHom, _from_op, as_table, validate_group, validate_hom


@dataclass(frozen=True, eq=False)
class GroupGroupoid:
    base: Groupoid
    obj_group: FiniteGroup
    mor_group: FiniteGroup

    @property
    def n_obj(self) -> int:
        return self.base.n_obj

    @property
    def n_mor(self) -> int:
        return self.base.n_mor

    @property
    def label(self) -> str:
        return self.base.label

    def __repr__(self) -> str:
        return f"GroupGroupoid({self.label or '?'}, objects={self.n_obj}, morphisms={self.n_mor})"

    def kernel_d0(self) -> np.ndarray:
        """Morphisms out of the identity object, ascending."""
        return np.nonzero(self.base.d0 == 0)[0]

    def vertex_group_at_identity(self) -> np.ndarray:
        """Morphisms from the identity object to itself, ascending."""
        return np.nonzero((self.base.d0 == 0) & (self.base.d1 == 0))[0]

    def same(self, other: "GroupGroupoid") -> bool:
        return (
            self.base.same(other.base)
            and self.obj_group.same_table(other.obj_group)
            and self.mor_group.same_table(other.mor_group)
        )


def group_groupoid_witness(base: Groupoid, obj_group: FiniteGroup, mor_group: FiniteGroup):
    """First failed axiom as ``(error class, message, witness)``, or ``None``."""
    if obj_group.order != base.n_obj or mor_group.order != base.n_mor:
        return (AdditionNotFunctorial, "group orders do not match the groupoid", None)
    if base.ident[0] != 0:
        return (WrongUnit, "identity of the morphism group is not the identity at the unit object", int(base.ident[0]))
    for name, src, tgt, table in (
        ("d0", mor_group, obj_group, base.d0),
        ("d1", mor_group, obj_group, base.d1),
        ("identity", obj_group, mor_group, base.ident),
    ):
        w = _kernels.hom_witness(src.op, tgt.op, table)
        if w is not None:
            return (AdditionNotFunctorial, f"addition does not commute with {name}", w)
    bad = np.nonzero(base.inv[mor_group.inv] != mor_group.inv[base.inv])[0]
    if len(bad):
        return (AdditionNotFunctorial, "negation does not commute with groupoid inverse", int(bad[0]))
    w = _kernels.interchange_witness(base.comp, mor_group.op)
    if w is not None:
        return (InterchangeFails, "(b o a) + (d o c) != (b + d) o (a + c)", w)
    return None


def validate_group_groupoid(base: Groupoid, obj_group, mor_group) -> GroupGroupoid:
    """Check that addition is a groupoid morphism and the interchange law holds.

    ``obj_group``/``mor_group`` may be FiniteGroups or raw tables; raw tables
    are validated without relabelling, so their identity must already be 0.
    """
    if not isinstance(obj_group, FiniteGroup):
        obj_group = validate_group(obj_group)
    if not isinstance(mor_group, FiniteGroup):
        table = np.asarray(mor_group)
        unit = [e for e in range(len(table)) if np.array_equal(table[e], np.arange(len(table)))]
        if unit and unit[0] != 0:
            raise WrongUnit("morphism group identity is not index 0", witness=unit[0])
        mor_group = validate_group(table)
    w = group_groupoid_witness(base, obj_group, mor_group)
    if w is not None:
        cls, msg, wit = w
        raise cls(msg, witness=wit)
    return GroupGroupoid(base, obj_group, mor_group)


def discrete_group_groupoid(B: FiniteGroup) -> GroupGroupoid:
    base = discrete_groupoid(B.order, label=f"disc({B.label})")
    return GroupGroupoid(base, B, B)


@dataclass(frozen=True, eq=False)
class GroupGroupoidMorphism:
    source: GroupGroupoid
    target: GroupGroupoid
    obj_map: np.ndarray
    mor_map: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "obj_map", as_table(self.obj_map))
        object.__setattr__(self, "mor_map", as_table(self.mor_map))

    @property
    def underlying(self) -> GroupoidMorphism:
        return GroupoidMorphism(self.source.base, self.target.base, self.obj_map, self.mor_map)


def validate_gg_morphism(src: GroupGroupoid, tgt: GroupGroupoid, obj_map, mor_map) -> GroupGroupoidMorphism:
    w = morphism_witness(src.base, tgt.base, obj_map, mor_map)
    if w is not None:
        raise NotHomomorphism(f"not a groupoid morphism ({w[0]})", witness=w[1])
    validate_hom(src.obj_group, tgt.obj_group, obj_map)
    validate_hom(src.mor_group, tgt.mor_group, mor_map)
    return GroupGroupoidMorphism(src, tgt, obj_map, mor_map)


def compose_gg_morphisms(f: GroupGroupoidMorphism, g: GroupGroupoidMorphism) -> GroupGroupoidMorphism:
    """``f o g``."""
    return GroupGroupoidMorphism(g.source, f.target, f.obj_map[g.obj_map], f.mor_map[g.mor_map])


# ---------------------------------------------------------------- actions on groups


@dataclass(frozen=True, eq=False)
class GGAction:
    groupoid: GroupGroupoid
    X: FiniteGroup
    anchor: GroupHom
    act: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "act", as_table(self.act))

    @property
    def set_action(self) -> GroupoidActionOnSet:
        return GroupoidActionOnSet(self.groupoid.base, self.anchor.map, self.act)

    def same(self, other: "GGAction") -> bool:
        return (
            self.X.same_table(other.X)
            and self.anchor.same(other.anchor)
            and np.array_equal(self.act, other.act)
        )


def validate_gg_action(G: GroupGroupoid, X: FiniteGroup, anchor, act) -> GGAction:
    """Groupoid-action axioms plus ``(g.x) + (g'.x') = (g + g').(x + x')``."""
    anchor_map = anchor.map if isinstance(anchor, GroupHom) else anchor
    try:
        omega = validate_hom(X, G.obj_group, anchor_map)
    except NotHomomorphism as exc:
        raise NotGroupHomAnchor("anchor is not a group homomorphism", witness=exc.witness) from exc
    act = np.asarray(act, dtype=np.int64)
    w = action_witness(G.base, omega.map, act)
    if w is not None:
        raise ActionAxiomFails(f"action axiom fails: {w[0]}", witness=w[1])
    w = _kernels.action_interchange_witness(act, G.mor_group.op, X.op)
    if w is not None:
        raise InterchangeFails("(g.x) + (g'.x') != (g + g').(x + x')", witness=w)
    return GGAction(G, X, omega, act)


def canonical_gg_action(G: GroupGroupoid) -> GGAction:
    """``G`` acting on its object group through ``g.x = d1(g)``."""
    base = G.base
    act = np.full((G.n_mor, G.n_obj), -1, dtype=np.int64)
    act[np.arange(G.n_mor), base.d0] = base.d1
    return validate_gg_action(G, G.obj_group, np.arange(G.n_obj), act)


def action_group_groupoid(action: GGAction) -> tuple[GroupGroupoid, GroupGroupoidMorphism]:
    """``G x| X`` with componentwise addition, and its covering projection onto ``G``."""
    G = action.groupoid
    H, _ = action_groupoid(action.set_action)
    gs, xs = np.nonzero(action.act >= 0)
    pair_index = np.full(action.act.shape, -1, dtype=np.int64)
    pair_index[gs, xs] = np.arange(len(gs))
    mor_op = pair_index[G.mor_group.op[gs[:, None], gs[None, :]], action.X.op[xs[:, None], xs[None, :]]]
    mor_group = _from_op(mor_op, f"{G.label}x|{action.X.label}")
    H = Groupoid(H.n_obj, H.d0, H.d1, H.ident, H.comp, H.inv, f"{G.label}x|{action.X.label}")
    total = validate_group_groupoid(H, action.X, mor_group)
    proj = validate_gg_morphism(total, G, action.anchor.map, gs)
    v = is_covering_morphism(proj.underlying)
    if not v:
        raise InvalidAction(f"projection is not a covering: {v.reason}", witness=v.witness)
    return total, proj


# ---------------------------------------------------------------- serialization


def gg_to_json(G: GroupGroupoid) -> dict:
    data = groupoid_to_json(G.base)
    data["obj_group"] = G.obj_group.op.tolist()
    data["mor_group"] = G.mor_group.op.tolist()
    return data


def gg_from_json(data: dict) -> GroupGroupoid:
    return validate_group_groupoid(groupoid_from_json(data), data["obj_group"], data["mor_group"])
