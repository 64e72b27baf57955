"""Theorem suites run over a catalog, grouped by scope.

Each suite checks one property on every applicable instance and records the
instance label, message and witness of each failure. Suites never stop at the
first failure.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .catalog import Catalog, threads
from .crossed_modules import (
    CrossedModule,
    classify_xmod_transitivity,
    identity_xmod,
    identity_xmod_morphism,
    trivial_action,
    validate_group_action,
    validate_xmod,
    validate_xmod_morphism,
    xmod_from_normal_subgroup,
    xmod_inner_automorphism,
    xmod_properties,
    xmod_zero_module,
)
from .equivalence import (
    delta,
    delta_morphism,
    eta,
    eta_morphism,
    roundtrip_gg,
    roundtrip_xmod,
    transitivity_correspondence,
)
from .errors import CapExceeded, XModKitError
from .group_groupoids import (
    action_group_groupoid,
    canonical_gg_action,
    discrete_group_groupoid,
    group_groupoid_witness,
)
from .groupoids import (
    ONE_TRANSITIVE,
    SIMPLY_TRANSITIVE,
    TOTALLY_INTRANSITIVE,
    TRANSITIVE,
    action_groupoid,
    classify_transitivity,
    components,
    covering_to_action,
    discrete_groupoid,
    group_as_groupoid,
    is_covering_morphism,
    object_group,
    regular_action,
    validate_groupoid,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    automorphism_group,
    closure,
    cyclic,
    enumerate_homs,
    enumerate_isos,
    identity_hom,
    klein_four,
    normal_subgroups,
    quotient,
    subgroup_as_group,
    subgroups,
    validate_group,
    validate_hom,
)
from .liftings import (
    Lifting,
    action_from_lifting,
    automorphism_lifting,
    check_lifting,
    covering_roundtrip,
    covering_to_lifting,
    enumerate_liftings,
    find_lifting_isomorphism,
    gg_action_on_kernel_quotient,
    identity_lifting,
    is_lifting_of_lifting,
    lifting_from_central_subgroup,
    lifting_to_covering,
    one_lifting_check,
    search_liftings,
    theta_psi_roundtrip,
    transport_lifting,
    universal_lifting,
)

SCOPES = ("algebra", "groupoids", "group-groupoids", "crossed-modules", "equivalence", "liftings")
FUZZ_CASES = 1000


class Failed(Exception):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def ensure(cond, message: str, witness=None) -> None:
    if not cond:
        raise Failed(message, witness)


@dataclass
class SuiteResult:
    name: str
    scope: str
    instances: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class VerifyReport:
    suites: list
    load_errors: list
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.load_errors and all(s.ok for s in self.suites)

    def format(self, max_failures: int = 5) -> str:
        lines = []
        for err in self.load_errors:
            lines.append(f"FAIL catalog-load: {err}")
        for s in self.suites:
            status = "PASS" if s.ok else "FAIL"
            lines.append(f"{status} [{s.scope}] {s.name}: {s.instances} instances, {len(s.failures)} failures")
            for label, msg, wit in s.failures[:max_failures]:
                lines.append(f"    {label}: {msg} (witness: {wit!r})")
            for note in s.notes:
                lines.append(f"    note: {note}")
        total = sum(len(s.failures) for s in self.suites) + len(self.load_errors)
        lines.append(f"{'OK' if self.ok else 'FAILED'}: {len(self.suites)} suites, {total} failures, {self.elapsed:.1f}s")
        return "\n".join(lines)


# ---------------------------------------------------------------- per-group suites


def s_group_axioms(G: FiniteGroup):
    H = validate_group(G.op, G.label)
    ensure(np.array_equal(H.op, G.op), "revalidated table differs")
    ensure(_kernels.assoc_witness(G.op) is None, "not associative")


def s_subgroups(G: FiniteGroup):
    for S in subgroups(G):
        ensure(G.order % len(S) == 0, "subgroup order does not divide |G|", S.elements)
        ensure(closure(G, S.elements) == list(S.elements), "subgroup not closed", S.elements)


def s_hom_count(G: FiniteGroup):
    # |Hom(Z_k, G)| counts elements whose order divides k
    for k in sorted({1, 2, G.order}):
        expected = int(np.sum(k % G.element_orders == 0))
        got = len(enumerate_homs(cyclic(k), G))
        ensure(got == expected, f"|Hom(Z{k}, G)| = {got}, expected {expected}")


def s_quotients(G: FiniteGroup):
    for N in normal_subgroups(G):
        Q, p = quotient(G, N)
        ensure(Q.order * len(N) == G.order, "|G/N| |N| != |G|", N.elements)
        validate_hom(G, Q, p.map)
        ensure(sorted(p.kernel().elements) == list(N.elements), "kernel of projection is not N", N.elements)


def s_automorphisms(G: FiniteGroup):
    try:
        aut, ev = automorphism_group(G)
    except CapExceeded:
        return "skipped"
    validate_group(aut.op)
    ensure(len(enumerate_isos(G, G)) == aut.order, "automorphism count mismatch")
    validate_group_action(aut, G, ev)


def s_groupoid_axioms(G: FiniteGroup):
    for gpd in (group_as_groupoid(G), discrete_groupoid(G.order)):
        validate_groupoid(gpd.n_obj, gpd.d0, gpd.d1, gpd.ident, gpd.comp)


def s_regular_covering(G: FiniteGroup):
    act = regular_action(G)
    H, q = action_groupoid(act)
    v = is_covering_morphism(q)
    ensure(v, f"projection is not a covering: {v.reason}", v.witness)
    back = covering_to_action(q)
    ensure(np.array_equal(back.act, act.act), "covering -> action does not recover the action")
    ensure(TRANSITIVE in classify_transitivity(H), "regular action groupoid is not transitive")
    ensure(SIMPLY_TRANSITIVE in classify_transitivity(H), "regular action groupoid is not simply transitive")


def s_discrete_gg(G: FiniteGroup):
    D = discrete_group_groupoid(G)
    ensure(group_groupoid_witness(D.base, D.obj_group, D.mor_group) is None, "discrete group-groupoid invalid")
    w = roundtrip_gg(D)
    ensure(w.morphism is not None, "no round-trip witness")
    ensure(TOTALLY_INTRANSITIVE in classify_transitivity(D.base), "discrete is not totally intransitive")


def s_constructors(G: FiniteGroup):
    """Normal-subgroup inclusions, inner automorphisms and zero modules over ``G``."""
    built = [xmod_from_normal_subgroup(G, N) for N in normal_subgroups(G)]
    built.append(identity_xmod(G))
    try:
        built.append(xmod_inner_automorphism(G))
    except CapExceeded:
        pass
    if G.is_abelian:
        built.append(xmod_zero_module(G, G))
        built.append(xmod_zero_module(G, cyclic(2)))
    for xm in built:
        validate_xmod(xm.A, xm.B, xm.alpha, xm.action)
        rep = xmod_properties(xm)
        ensure(rep.kernel_central and rep.image_normal, "structure theorem fails", xm.label)
    return len(built)


# ---------------------------------------------------------------- per-xmod suites


def s_xmod_axioms(xm: CrossedModule):
    validate_xmod(xm.A, xm.B, xm.alpha, xm.action)
    rep = xmod_properties(xm)
    ensure(rep.kernel_central, "Ker alpha not central")
    ensure(rep.image_normal, "Im alpha not normal")
    ensure(rep.image_acts_trivially_on_center, "Im alpha acts nontrivially on Z(A)")
    ensure(rep.cokernel.order * len(xm.alpha.image()) == xm.B.order, "cokernel order mismatch")


def s_xmod_flags(xm: CrossedModule):
    flags = classify_xmod_transitivity(xm)
    ensure((TRANSITIVE in flags) == xm.alpha.is_surjective, "transitive flag")
    ensure((SIMPLY_TRANSITIVE in flags) == xm.alpha.is_injective, "simply transitive flag")
    ensure((ONE_TRANSITIVE in flags) == xm.alpha.is_iso, "1-transitive flag")


def s_eta_groupoid(xm: CrossedModule):
    G = eta(xm)
    ensure(G.n_mor == xm.A.order * xm.B.order, "|morphisms| != |A||B|", G.n_mor)
    ensure(group_groupoid_witness(G.base, G.obj_group, G.mor_group) is None, "eta(xm) fails the axioms")
    comps = components(G.base)
    ensure(len(comps) * len(xm.alpha.image()) == xm.B.order, "components do not match the cokernel")
    vg, _ = object_group(G.base, 0)
    ensure(vg.order == len(xm.alpha.kernel()), "vertex group order != |Ker alpha|")


def s_canonical_gg_action(xm: CrossedModule):
    G = eta(xm)
    act = canonical_gg_action(G)
    total, proj = action_group_groupoid(act)
    v = is_covering_morphism(proj.underlying)
    ensure(v, "projection of the canonical action is not a covering", v.witness)


def s_delta_eta(xm: CrossedModule):
    G = eta(xm)
    ensure(G.n_mor == xm.A.order * xm.B.order, "|morphisms(eta)| != |A||B|")
    roundtrip_xmod(xm)
    ensure(delta(G).same(xm), "delta(eta(xm)) differs from xm table for table")


def s_eta_delta(xm: CrossedModule):
    G = eta(xm)
    w = roundtrip_gg(G)
    ensure(len(np.unique(w.iso_mor)) == G.n_mor, "witness not bijective")


def s_functor_morphisms(xm: CrossedModule):
    ident = identity_xmod_morphism(xm)
    F = eta_morphism(ident)
    ensure(np.array_equal(F.mor_map, np.arange(eta(xm).n_mor)), "eta(1) is not the identity")
    # (alpha, 1_B) : xm -> (B, B, 1)
    m = validate_xmod_morphism(xm, identity_xmod(xm.B), xm.alpha, identity_hom(xm.B))
    back = delta_morphism(eta_morphism(m))
    ensure(np.array_equal(back.f1.map, m.f1.map) and np.array_equal(back.f2.map, m.f2.map), "delta eta (m) != m")


def s_transitivity_correspondence(xm: CrossedModule):
    rep = transitivity_correspondence(xm)
    ensure(rep.agree, "flags differ", (sorted(rep.xmod_flags), sorted(rep.groupoid_flags)))


def _kernel_subgroups(xm: CrossedModule) -> list[Subgroup]:
    K, inc = subgroup_as_group(xm.alpha.kernel())
    cs = sorted(tuple(sorted(int(inc.map[e]) for e in S.elements)) for S in subgroups(K))
    return [Subgroup(xm.A, c) for c in cs]


def s_lifting_existence(xm: CrossedModule):
    nk = len(xm.alpha.kernel())
    for C in _kernel_subgroups(xm):
        L = lifting_from_central_subgroup(xm, C)
        ensure(L.kernel == C, "Ker phi != C", C.elements)
        ensure(len(L.omega.kernel()) * len(C) == nk, "|Ker omega| != |Ker alpha / C|", C.elements)
        ensure(L.kernel.issubset(xm.alpha.kernel()), "Ker phi not inside Ker alpha", C.elements)


def _all_liftings(xm: CrossedModule) -> list[Lifting]:
    return enumerate_liftings(xm, check=False) + [identity_lifting(xm)]


def s_dual_characterization(xm: CrossedModule):
    for L in _all_liftings(xm):
        chk = check_lifting(xm, L.X, L.omega.map, L.phi.map)
        ensure(chk.cm_route and chk.phibar_route, "constructed lifting rejected", (chk.cm, chk.phibar))


def s_classification(xm: CrossedModule):
    if not xm.alpha.is_surjective:
        return "skipped"
    ls = enumerate_liftings(xm, check=True)
    nk = len(xm.alpha.kernel())
    for L in ls:
        ensure(L.degree * len(L.kernel) == nk, "degree != |Ker alpha / Ker phi|", L.kernel.elements)
        auts = enumerate_isos(L.X, L.X)
        g = auts[-1]
        L2 = transport_lifting(L, identity_hom(xm.B), g)
        ensure(L2.kernel == L.kernel, "transport changed the kernel")
        ensure(find_lifting_isomorphism(L2, L) is not None, "equal kernels but no isomorphism", L.kernel.elements)
    if xm.alpha.is_injective:
        ensure(len(ls) == 1, "trivial kernel should give only the universal lifting", len(ls))


def s_universal(xm: CrossedModule):
    U, links = universal_lifting(xm)
    ensure(len(U.kernel) == 1, "universal lifting has nontrivial kernel")
    ensure(len(links) == len(_kernel_subgroups(xm)), "missing connecting morphisms")
    for L in enumerate_liftings(xm, check=False):
        ensure(is_lifting_of_lifting(L, U), "universal lifting does not lift to L", L.kernel.elements)


def s_charsub(xm: CrossedModule):
    ls = enumerate_liftings(xm, check=False)
    for L1 in ls:
        for L2 in ls:
            v = is_lifting_of_lifting(L1, L2)
            ensure(bool(v) == L2.kernel.issubset(L1.kernel), "verdict differs from kernel criterion")


def s_one_lifting(xm: CrossedModule):
    if not xm.alpha.is_surjective:
        return "skipped"
    L = lifting_from_central_subgroup(xm, xm.alpha.kernel())
    m = one_lifting_check(L)
    ensure(m.is_iso, "1-lifting is not isomorphic to the base")


def s_simply_transitive(xm: CrossedModule):
    if not xm.alpha.is_injective:
        return "skipped"
    for L in _all_liftings(xm):
        ensure(L.phi.is_injective, "lifting of a simply transitive base is not simply transitive")


def s_theta_psi(xm: CrossedModule):
    G = eta(xm)
    for L in _all_liftings(xm):
        theta_psi_roundtrip(L)
        theta_psi_roundtrip(action_from_lifting(L, groupoid=G))
    theta_psi_roundtrip(canonical_gg_action(G))
    theta_psi_roundtrip(gg_action_on_kernel_quotient(G))


def s_coverings(xm: CrossedModule):
    G = eta(xm)
    for L in _all_liftings(xm):
        c = lifting_to_covering(L)
        ensure(c.morphism.f1.is_iso, "A-part of the covering is not an isomorphism")
        ensure(covering_to_lifting(c).same(L), "covering -> lifting does not recover L")
        covering_roundtrip(c)
        act = action_from_lifting(L, groupoid=G)
        _, proj = action_group_groupoid(act)
        v = is_covering_morphism(proj.underlying)
        ensure(v, "action group-groupoid projection is not a covering", v.witness)


def s_automorphism_covering(xm: CrossedModule):
    try:
        L = automorphism_lifting(xm)
    except CapExceeded:
        return "skipped"
    c = lifting_to_covering(L)
    ensure(c.morphism.f1.is_iso, "covering of the automorphism crossed module has non-iso A-part")


def s_kernel_quotient(xm: CrossedModule):
    act = gg_action_on_kernel_quotient(eta(xm))
    ensure(act.X.order == len(xm.alpha.image()), "|Ker d0 / G(0)| != |Im alpha|", act.X.order)


GROUP_SUITES = [
    ("group-axioms", "algebra", s_group_axioms),
    ("subgroup-lattice", "algebra", s_subgroups),
    ("hom-count", "algebra", s_hom_count),
    ("quotients", "algebra", s_quotients),
    ("automorphism-group", "algebra", s_automorphisms),
    ("groupoid-axioms", "groupoids", s_groupoid_axioms),
    ("regular-action-covering", "groupoids", s_regular_covering),
    ("discrete-group-groupoid", "group-groupoids", s_discrete_gg),
    ("constructor-axioms", "crossed-modules", s_constructors),
]

XMOD_SUITES = [
    ("eta-groupoid-structure", "groupoids", s_eta_groupoid),
    ("canonical-action-covering", "group-groupoids", s_canonical_gg_action),
    ("xmod-axioms", "crossed-modules", s_xmod_axioms),
    ("transitivity-flags", "crossed-modules", s_xmod_flags),
    ("delta-eta-roundtrip", "equivalence", s_delta_eta),
    ("eta-delta-roundtrip", "equivalence", s_eta_delta),
    ("functors-on-morphisms", "equivalence", s_functor_morphisms),
    ("transitivity-correspondence", "equivalence", s_transitivity_correspondence),
    ("lifting-existence", "liftings", s_lifting_existence),
    ("dual-characterization", "liftings", s_dual_characterization),
    ("classification", "liftings", s_classification),
    ("universal-lifting", "liftings", s_universal),
    ("lifting-of-lifting", "liftings", s_charsub),
    ("one-lifting", "liftings", s_one_lifting),
    ("simply-transitive-inheritance", "liftings", s_simply_transitive),
    ("theta-psi-roundtrip", "liftings", s_theta_psi),
    ("covering-correspondence", "liftings", s_coverings),
    ("automorphism-covering", "liftings", s_automorphism_covering),
    ("kernel-quotient-action", "liftings", s_kernel_quotient),
]


# ---------------------------------------------------------------- catalog-wide suites


def fuzz_non_liftings(cat: Catalog, n: int = FUZZ_CASES, seed: int = 0) -> SuiteResult:
    """Mutate catalog liftings into non-liftings and check both characterisations reject them."""
    res = SuiteResult("fuzzed-non-liftings", "liftings")
    pool = [L for ls in cat.liftings.values() for L in ls if L.X.order > 1 or L.base.B.order > 1]
    if not pool:
        res.notes.append("no liftings to mutate")
        return res
    rng = np.random.default_rng(seed)
    homs_cache: dict = {}
    kinds = {"phi": 0, "omega": 0, "action": 0}
    attempts = 0
    while res.instances < n and attempts < 50 * n:
        attempts += 1
        L = pool[int(rng.integers(len(pool)))]
        xm = L.base
        kind = ("phi", "omega", "action")[int(rng.integers(3))]
        omega, phi, action = L.omega.map, L.phi.map, None
        if kind == "phi":
            key = (id(xm.A), id(L.X))
            if key not in homs_cache:
                homs_cache[key] = enumerate_homs(xm.A, L.X)
            bad = [h.map for h in homs_cache[key] if not np.array_equal(omega[h.map], xm.alpha.map)]
            if not bad:
                continue
            phi = bad[int(rng.integers(len(bad)))]
        elif kind == "omega":
            key = (id(L.X), id(xm.B))
            if key not in homs_cache:
                homs_cache[key] = enumerate_homs(L.X, xm.B)
            bad = [h.map for h in homs_cache[key] if not np.array_equal(h.map[phi], xm.alpha.map)]
            if not bad:
                continue
            omega = bad[int(rng.integers(len(bad)))]
        else:
            if L.X.order < 2 or xm.A.order < 3:
                continue
            action = xm.action.act[omega].copy()
            x = int(rng.integers(1, L.X.order))
            a1, a2 = rng.choice(np.arange(1, xm.A.order), size=2, replace=False)
            action[x, [a1, a2]] = action[x, [a2, a1]]
        chk = check_lifting(xm, L.X, omega, phi, action)
        res.instances += 1
        kinds[kind] += 1
        label = f"{xm.label}/{kind}"
        if chk.cm_route or chk.phibar_route:
            res.failures.append((label, "mutated lifting accepted", (chk.cm, chk.phibar)))
        elif chk.cm1_holds != (chk.phibar is None):
            res.failures.append((label, "CM1 and the semidirect-product verdict disagree", (chk.cm, chk.phibar)))
    res.notes.append("mutations: " + ", ".join(f"{k} {v}" for k, v in kinds.items()))
    if res.instances < n:
        res.failures.append(("fuzz", f"only {res.instances} of {n} cases could be generated", None))
    return res


def worked_instances(cat: Catalog | None = None) -> SuiteResult:
    """The pinned small examples against brute-force search."""
    res = SuiteResult("worked-instances", "liftings")
    Z1, Z2, Z4 = cyclic(1), cyclic(2), cyclic(4)
    pool = [Z1, Z2, Z4, klein_four()]
    mod2 = validate_xmod(Z4, Z2, [0, 1, 0, 1], trivial_action(Z2, Z4), "Z4->Z2 mod 2")
    zero = xmod_zero_module(Z2, Z2)
    for xm, count, degrees in ((mod2, 2, {1, 2}), (zero, 2, None)):
        res.instances += 1
        try:
            ls = enumerate_liftings(xm)
            brute = search_liftings(xm, pool, transitive_only=True)
            ensure(len(ls) == count, f"{len(ls)} liftings, expected {count}")
            ensure(len(brute) == count, f"brute force found {len(brute)} transitive liftings, expected {count}")
            if degrees is not None:
                ensure({L.degree for L in ls} == degrees, "degrees differ", [L.degree for L in ls])
            for L in ls:
                ensure(any(find_lifting_isomorphism(L, R) is not None for R in brute), "not found by brute force")
        except (Failed, XModKitError) as exc:
            res.failures.append((xm.label, str(exc), getattr(exc, "witness", None)))
    return res


def exploration(cat: Catalog, max_size: int = 16, max_x: int = 8) -> SuiteResult:
    """Checked conjectures, reported rather than asserted.

    For small bases, brute-force every lifting with ``X`` from the catalog and
    report (a) whether ``phi(A)`` is normal in ``X`` for inclusion crossed
    modules and (b) how many liftings are not of quotient type.
    """
    res = SuiteResult("exhaustive-search-findings", "liftings")
    xs = [G for G in cat.groups.values() if G.order <= max_x]
    normal_ok = normal_total = 0
    extra = 0
    bases = 0
    for xm in cat.xmods.values():
        if xm.A.order * xm.B.order > max_size:
            continue
        bases += 1
        found = search_liftings(xm, xs)
        quotient_type = [L for L in found if L.phi.is_surjective]
        extra += len(found) - len(quotient_type)
        if xm.alpha.is_surjective and len(quotient_type) != len(_kernel_subgroups(xm)):
            res.failures.append((xm.label, "transitive liftings differ from quotient-type count", len(quotient_type)))
        if xm.alpha.is_injective:
            for L in found:
                normal_total += 1
                normal_ok += L.phi.image().is_normal()
    res.instances = bases
    res.notes.append(f"phi(A) normal in X for inclusion crossed modules: {normal_ok}/{normal_total} liftings")
    res.notes.append(f"liftings with non-surjective phi (not quotient type): {extra}")
    return res


# ---------------------------------------------------------------- driver


def _run_suite(fn, label, obj, res: SuiteResult):
    try:
        out = fn(obj)
    except (Failed, XModKitError) as exc:
        res.instances += 1
        res.failures.append((label, str(exc), getattr(exc, "witness", None)))
        return
    except Exception as exc:  # a crash is a failure with its type as the message
        res.instances += 1
        res.failures.append((label, f"{type(exc).__name__}: {exc}", None))
        return
    if out != "skipped":
        res.instances += 1


def _chunk_task(args):
    kind, names, items = args
    table = dict((n, f) for n, _, f in (GROUP_SUITES if kind == "group" else XMOD_SUITES))
    results = {n: SuiteResult(n, "") for n in names}
    for label, obj in items:
        for n in names:
            _run_suite(table[n], label, obj, results[n])
    return results


def _run_kind(kind, suites, items, workers):
    names = [n for n, _, _ in suites]
    merged = {n: SuiteResult(n, scope) for n, scope, _ in suites}
    if not names or not items:
        return [merged[n] for n in names]
    if workers > 1:
        size = max(1, len(items) // (workers * 4))
        chunks = [(kind, names, items[i : i + size]) for i in range(0, len(items), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk_task, chunks))
    else:
        parts = [_chunk_task((kind, names, items))]
    for part in parts:
        for n, r in part.items():
            merged[n].instances += r.instances
            merged[n].failures.extend(r.failures)
    return [merged[n] for n in names]


def run_verify(cat: Catalog, scope: str = "all", workers: int | None = None, fuzz_cases: int = FUZZ_CASES) -> VerifyReport:
    if scope != "all" and scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected 'all' or one of {', '.join(SCOPES)}")
    start = time.perf_counter()
    workers = threads() if workers is None else workers

    def wanted(s):
        return scope == "all" or s == scope

    small = [(G.label, G) for G in cat.groups.values()]
    constructors = [(n, sc, f) for n, sc, f in GROUP_SUITES if wanted(sc)]
    suites = _run_kind("group", constructors, small, workers)
    xmods = [(xm.label, xm) for xm in cat.xmods.values()]
    suites += _run_kind("xmod", [s for s in XMOD_SUITES if wanted(s[1])], xmods, workers)
    if wanted("liftings"):
        suites.append(fuzz_non_liftings(cat, fuzz_cases))
        suites.append(worked_instances(cat))
        suites.append(exploration(cat))
    report = VerifyReport(suites, list(cat.errors))
    report.elapsed = time.perf_counter() - start
    return report
