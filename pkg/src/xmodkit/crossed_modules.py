"""Crossed modules of finite groups: axioms, standard constructions, structure."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import (
    BadAction,
    CM1Fails,
    CM2Fails,
    EquivarianceFails,
    InternalContradiction,
    NotAbelian,
    NotNormal,
    SquareFails,
)
from .groupoids import ONE_TRANSITIVE, SIMPLY_TRANSITIVE, TOTALLY_INTRANSITIVE, TRANSITIVE
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    as_table,
    automorphism_group,
    center,
    compose,
    group_from_json,
    group_to_json,
    identity_hom,
    normality_witness,
    quotient,
    subgroup_as_group,
    validate_hom,
)


@dataclass(frozen=True, eq=False)
class GroupActionOnGroup:
    """``act[b, a]`` is ``b . a``."""

    actor: FiniteGroup
    target: FiniteGroup
    act: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "act", as_table(self.act))

    def __call__(self, b: int, a: int) -> int:
        return int(self.act[b, a])

    @property
    def is_trivial(self) -> bool:
        return bool(np.all(self.act == np.arange(self.target.order)[None, :]))


def validate_group_action(actor: FiniteGroup, target: FiniteGroup, act) -> GroupActionOnGroup:
    act = np.asarray(act, dtype=np.int64)
    if act.shape != (actor.order, target.order) or act.min() < 0 or act.max() >= target.order:
        raise BadAction("action table has the wrong shape or range")
    w = _kernels.action_witness(act, target.op, actor.op)
    if w is not None:
        kind, *rest = w
        law = {
            1: "identity acts nontrivially",
            2: "(b1 b2).a != b1.(b2.a)",
            3: "b acts by a non-homomorphism",
        }[kind]
        raise BadAction(law, witness=tuple(v for v in rest if v >= 0))
    return GroupActionOnGroup(actor, target, act)


def trivial_action(actor: FiniteGroup, target: FiniteGroup) -> GroupActionOnGroup:
    return GroupActionOnGroup(actor, target, np.tile(np.arange(target.order), (actor.order, 1)))


def conjugation_action(G: FiniteGroup) -> GroupActionOnGroup:
    g = np.arange(G.order)
    return GroupActionOnGroup(G, G, G.op[G.op[g[:, None], g[None, :]], G.inv[:, None]])


@dataclass(frozen=True, eq=False)
class CrossedModule:
    A: FiniteGroup
    B: FiniteGroup
    alpha: GroupHom
    action: GroupActionOnGroup
    label: str = ""

    def __repr__(self) -> str:
        name = self.label or f"{self.A.label}->{self.B.label}"
        return f"CrossedModule({name}, |A|={self.A.order}, |B|={self.B.order})"

    @property
    def size(self) -> int:
        return self.A.order * self.B.order

    def same(self, other: "CrossedModule") -> bool:
        return (
            self.A.same_table(other.A)
            and self.B.same_table(other.B)
            and self.alpha.same(other.alpha)
            and np.array_equal(self.action.act, other.action.act)
        )


def cm_witness(A: FiniteGroup, B: FiniteGroup, alpha: np.ndarray, act: np.ndarray):
    """``(1, b, a)`` for a CM1 failure, ``(2, a, a1)`` for CM2, else ``None``."""
    return _kernels.cm_witness(A.op, A.inv, B.op, B.inv, alpha, act)


def validate_xmod(A: FiniteGroup, B: FiniteGroup, alpha, action, label: str = "") -> CrossedModule:
    """Check CM1 ``alpha(b.a) = b alpha(a) b^-1`` and CM2 ``alpha(a).a1 = a a1 a^-1``."""
    alpha_map = alpha.map if isinstance(alpha, GroupHom) else alpha
    act = action.act if isinstance(action, GroupActionOnGroup) else action
    alpha = validate_hom(A, B, alpha_map)
    action = validate_group_action(B, A, act)
    w = cm_witness(A, B, alpha.map, action.act)
    if w is not None:
        if w[0] == 1:
            raise CM1Fails("alpha(b.a) != b alpha(a) b^-1", witness=w[1:])
        raise CM2Fails("alpha(a).a1 != a a1 a^-1", witness=w[1:])
    return CrossedModule(A, B, alpha, action, label)


# ---------------------------------------------------------------- constructions


def xmod_from_normal_subgroup(G: FiniteGroup, N: Subgroup, label: str = "") -> CrossedModule:
    """Inclusion of a normal subgroup with the conjugation action."""
    w = normality_witness(N)
    if w is not None:
        raise NotNormal(f"{N!r} is not normal", witness=w)
    A, inc = subgroup_as_group(N, f"{G.label}[{len(N)}]")
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[inc.map] = np.arange(A.order)
    g = np.arange(G.order)
    conj = G.op[G.op[g[:, None], inc.map[None, :]], G.inv[:, None]]
    return validate_xmod(A, G, inc.map, pos[conj], label or f"{A.label}<|{G.label}")


def xmod_zero_module(M: FiniteGroup, G: FiniteGroup, action=None, label: str = "") -> CrossedModule:
    """The zero map ``M -> G`` for an abelian ``G``-module ``M``."""
    if not M.is_abelian:
        raise NotAbelian(f"{M.label} is not abelian")
    if action is None:
        action = trivial_action(G, M)
    return validate_xmod(M, G, np.zeros(M.order, dtype=np.int64), action, label or f"0:{M.label}->{G.label}")


def inner_automorphism_map(G: FiniteGroup, evaluation: np.ndarray) -> np.ndarray:
    """Index in ``evaluation`` of conjugation by each ``g``."""
    g = np.arange(G.order)
    conj = G.op[G.op[g[:, None], g[None, :]], G.inv[:, None]]  # row g: x -> g x g^-1
    index = {tuple(row): i for i, row in enumerate(evaluation.tolist())}
    return np.array([index[tuple(row)] for row in conj.tolist()], dtype=np.int64)


def xmod_inner_automorphism(G: FiniteGroup, label: str = "") -> CrossedModule:
    """``G -> Aut(G)`` sending ``g`` to conjugation by ``g``; Aut(G) acts by evaluation."""
    aut, evaluation = automorphism_group(G)
    iota = inner_automorphism_map(G, evaluation)
    return validate_xmod(G, aut, iota, evaluation, label or f"inn:{G.label}")


def identity_xmod(G: FiniteGroup) -> CrossedModule:
    """``(G, G, 1)`` with conjugation."""
    return validate_xmod(G, G, np.arange(G.order), conjugation_action(G), f"id:{G.label}")


def image_xmod(xm: CrossedModule) -> tuple[CrossedModule, GroupHom]:
    """``(A, Im alpha, alpha)`` with the restricted action, and the inclusion of the image."""
    im, inc = subgroup_as_group(xm.alpha.image(), f"Im({xm.label})")
    pos = np.full(xm.B.order, -1, dtype=np.int64)
    pos[inc.map] = np.arange(im.order)
    sub = validate_xmod(xm.A, im, pos[xm.alpha.map], xm.action.act[inc.map], f"Im:{xm.label}")
    return sub, inc


# ---------------------------------------------------------------- structure


@dataclass(frozen=True)
class XModReport:
    image_normal: bool
    kernel: Subgroup
    center: Subgroup
    kernel_central: bool
    image_acts_trivially_on_center: bool
    cokernel: FiniteGroup
    cokernel_action_on_center: GroupActionOnGroup
    cokernel_action_on_kernel: GroupActionOnGroup


def _cokernel_action(xm: CrossedModule, proj: GroupHom, Q: FiniteGroup, S: Subgroup) -> GroupActionOnGroup:
    """Induced action of ``B / alpha(A)`` on an ``alpha(A)``-fixed subgroup ``S`` of A."""
    sub, inc = subgroup_as_group(S)
    pos = np.full(xm.A.order, -1, dtype=np.int64)
    pos[inc.map] = np.arange(sub.order)
    table = np.full((Q.order, sub.order), -1, dtype=np.int64)
    for b in range(xm.B.order):
        row = pos[xm.action.act[b, inc.map]]
        if np.any(row < 0):
            raise InternalContradiction("subgroup is not B-invariant", witness=b)
        c = proj.map[b]
        if table[c, 0] >= 0 and not np.array_equal(table[c], row):
            raise InternalContradiction("cokernel action depends on the coset representative", witness=b)
        table[c] = row
    return validate_group_action(Q, sub, table)


def xmod_properties(xm: CrossedModule) -> XModReport:
    """Exhibit the standard structure: image normal, kernel central, cokernel modules."""
    img = xm.alpha.image()
    ker = xm.alpha.kernel()
    Z = center(xm.A)
    image_normal = normality_witness(img) is None
    kernel_central = ker.issubset(Z)
    trivial_on_center = all(xm.action.act[b, z] == z for b in img for z in Z)
    if not (image_normal and kernel_central and trivial_on_center):
        raise InternalContradiction(
            "crossed module structure theorem fails",
            witness=dict(image_normal=image_normal, kernel_central=kernel_central, trivial_on_center=trivial_on_center),
        )
    Q, proj = quotient(xm.B, img, f"Cok({xm.label})")
    on_center = _cokernel_action(xm, proj, Q, Z)
    on_kernel = _cokernel_action(xm, proj, Q, ker)
    return XModReport(image_normal, ker, Z, kernel_central, trivial_on_center, Q, on_center, on_kernel)


def classify_xmod_transitivity(xm: CrossedModule) -> frozenset[str]:
    flags = set()
    if xm.alpha.is_surjective:
        flags.add(TRANSITIVE)
    if xm.alpha.is_injective:
        flags.add(SIMPLY_TRANSITIVE)
    if xm.alpha.is_iso:
        flags.add(ONE_TRANSITIVE)
    if xm.alpha.is_zero and xm.A.is_abelian:
        flags.add(TOTALLY_INTRANSITIVE)
    return frozenset(flags)


# ---------------------------------------------------------------- morphisms


@dataclass(frozen=True, eq=False)
class XModMorphism:
    """``f1`` on the A-parts, ``f2`` on the B-parts."""

    source: CrossedModule
    target: CrossedModule
    f1: GroupHom
    f2: GroupHom

    @property
    def is_iso(self) -> bool:
        return self.f1.is_iso and self.f2.is_iso


def validate_xmod_morphism(src: CrossedModule, tgt: CrossedModule, f1, f2) -> XModMorphism:
    f1 = validate_hom(src.A, tgt.A, f1.map if isinstance(f1, GroupHom) else f1)
    f2 = validate_hom(src.B, tgt.B, f2.map if isinstance(f2, GroupHom) else f2)
    bad = np.nonzero(f2.map[src.alpha.map] != tgt.alpha.map[f1.map])[0]
    if len(bad):
        raise SquareFails("f2 alpha != alpha' f1", witness=int(bad[0]))
    lhs = f1.map[src.action.act]  # [b, a] -> f1(b.a)
    rhs = tgt.action.act[f2.map[:, None], f1.map[None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        raise EquivarianceFails("f1(b.a) != f2(b).f1(a)", witness=tuple(int(v) for v in bad[0]))
    return XModMorphism(src, tgt, f1, f2)


def identity_xmod_morphism(xm: CrossedModule) -> XModMorphism:
    return XModMorphism(xm, xm, identity_hom(xm.A), identity_hom(xm.B))


def compose_xmod_morphisms(f: XModMorphism, g: XModMorphism) -> XModMorphism:
    """``f o g``."""
    return XModMorphism(g.source, f.target, compose(f.f1, g.f1), compose(f.f2, g.f2))


# ---------------------------------------------------------------- serialization


def xmod_to_json(xm: CrossedModule, inline: bool = True) -> dict:
    return {
        "label": xm.label,
        "A": group_to_json(xm.A) if inline else xm.A.label,
        "B": group_to_json(xm.B) if inline else xm.B.label,
        "alpha": xm.alpha.map.tolist(),
        "action": xm.action.act.tolist(),
    }


def xmod_from_json(data: dict, groups: dict | None = None) -> CrossedModule:
    """Inverse of :func:`xmod_to_json`; string group references resolve via ``groups``."""

    def resolve(ref):
        if isinstance(ref, str):
            if groups is None or ref not in groups:
                raise KeyError(f"unknown group {ref!r}")
            return groups[ref]
        return group_from_json(ref)

    return validate_xmod(resolve(data["A"]), resolve(data["B"]), data["alpha"], data["action"], data.get("label", ""))
