import numpy as np
import pytest

from xmodkit.crossed_modules import trivial_action, validate_xmod, xmod_zero_module
from xmodkit.equivalence import eta
from xmodkit.errors import AnchorMismatch, InvalidAction, InvalidGroupoid, NotCovering, UnknownObject
from xmodkit.groupoids import (
    ONE_TRANSITIVE,
    SIMPLY_TRANSITIVE,
    TOTALLY_INTRANSITIVE,
    TRANSITIVE,
    GroupoidActionOnSet,
    act_morphism_check,
    action_groupoid,
    canonical_action,
    classify_transitivity,
    components,
    costar,
    covering_to_action,
    discrete_groupoid,
    find_groupoid_isomorphism,
    group_as_groupoid,
    groupoid_from_json,
    groupoid_to_json,
    identity_morphism,
    is_covering_morphism,
    is_universal_covering,
    lifting_function,
    object_group,
    regular_action,
    star,
    validate_action,
    validate_groupoid,
    validate_groupoid_morphism,
)
from xmodkit.groups import cyclic, klein_four, symmetric


def test_group_as_groupoid_star():
    G = group_as_groupoid(cyclic(2))
    assert star(G, 0) == [0, 1]
    assert classify_transitivity(G) == {TRANSITIVE, TOTALLY_INTRANSITIVE}
    with pytest.raises(UnknownObject):
        star(G, 1)


def test_discrete_star_and_flags():
    D = discrete_groupoid(3)
    assert all(star(D, x) == [x] == costar(D, x) for x in range(3))
    assert TOTALLY_INTRANSITIVE in classify_transitivity(D)
    assert SIMPLY_TRANSITIVE in classify_transitivity(D)


def test_eta_zero_star_and_flags(zero22):
    G = eta(zero22).base
    assert len(star(G, 0)) == 2
    assert classify_transitivity(G) == {TOTALLY_INTRANSITIVE}


def test_transitivity_diagonal_reading():
    # vertex groups count: a one-object groupoid of a nontrivial group is not simply transitive
    assert SIMPLY_TRANSITIVE not in classify_transitivity(group_as_groupoid(cyclic(3)))
    assert SIMPLY_TRANSITIVE in classify_transitivity(group_as_groupoid(cyclic(1)))


def test_regular_action_groupoid_z2():
    H, q = action_groupoid(regular_action(cyclic(2)))
    assert (H.n_obj, H.n_mor) == (2, 4)
    assert classify_transitivity(H) == {TRANSITIVE, SIMPLY_TRANSITIVE, ONE_TRANSITIVE}
    assert is_covering_morphism(q)
    assert is_universal_covering(q)
    # (g, s) is the lift of g at s
    for g in range(2):
        for s in range(2):
            h = lifting_function(q, g, s)
            assert H.d0[h] == s and q.mor_map[h] == g


def test_action_groupoid_z4_on_z2():
    Z4 = cyclic(4)
    act = np.array([[(g % 2 + s) % 2 for s in range(2)] for g in range(4)])
    H, q = action_groupoid(validate_action(group_as_groupoid(Z4), [0, 0], act))
    assert (H.n_obj, H.n_mor) == (2, 8)
    assert all(len(star(H, x)) == 4 for x in range(2))
    assert is_covering_morphism(q)
    for g in range(4):
        for s in range(2):
            lifts = [h for h in star(H, s) if q.mor_map[h] == g]
            assert lifts == [lifting_function(q, g, s)]


def test_composite_order_is_diagrammatic():
    """The action groupoid composes as (g' o g, s); the literal (g o g', s) is not a groupoid."""
    S3 = symmetric(3)
    act = regular_action(S3)
    H, q = action_groupoid(act)
    validate_groupoid_morphism(H, group_as_groupoid(S3), q.obj_map, q.mor_map)
    gs, ss = np.nonzero(act.act >= 0)
    index = {(int(g), int(s)): k for k, (g, s) in enumerate(zip(gs, ss))}
    n = len(gs)
    comp = np.full((n, n), -1, dtype=np.int64)
    for h in range(n):
        for k in range(n):
            if ss[h] == act.act[gs[k], ss[k]]:
                comp[h, k] = index[(int(S3.op[gs[k], gs[h]]), int(ss[k]))]
    with pytest.raises(InvalidGroupoid):
        validate_groupoid(H.n_obj, H.d0, H.d1, H.ident, comp)


def test_invalid_action_reports_axiom():
    G = group_as_groupoid(cyclic(2))
    with pytest.raises(InvalidAction) as exc:
        validate_action(G, [0, 0], [[0, 1], [0, 0]])
    assert "identities" in str(exc.value) or "(h o g)" in str(exc.value)


def test_collapse_of_eta_identity_is_covering(id22):
    E = eta(id22).base
    Z2 = group_as_groupoid(cyclic(2))
    nb = 2
    collapse = validate_groupoid_morphism(E, Z2, [0, 0], np.arange(E.n_mor) // nb)
    assert is_covering_morphism(collapse)


def test_non_covering_witness():
    E = eta(xmod_zero_module(cyclic(2), cyclic(2))).base
    Z1 = group_as_groupoid(cyclic(1))
    p = validate_groupoid_morphism(E, Z1, [0, 0], np.zeros(E.n_mor, dtype=np.int64))
    v = is_covering_morphism(p)
    assert not v and v.witness[0] == 0
    with pytest.raises(NotCovering):
        lifting_function(p, 0, 0)


def test_identity_covering_and_universal():
    G = group_as_groupoid(klein_four())
    p = identity_morphism(G)
    assert is_covering_morphism(p)
    assert not is_universal_covering(p)
    assert lifting_function(p, 3, 0) == 3
    with pytest.raises(AnchorMismatch):
        lifting_function(identity_morphism(discrete_groupoid(2)), 0, 1)


def test_covering_to_action_roundtrip():
    act = regular_action(cyclic(3))
    H, q = action_groupoid(act)
    assert np.array_equal(covering_to_action(q).act, act.act)


def test_act_morphism_check():
    Z3 = cyclic(3)
    act = regular_action(Z3)
    assert act_morphism_check(np.arange(3), act, act)
    # right translation commutes with left translation in an abelian group
    assert act_morphism_check(np.array([1, 2, 0]), act, act)
    other = GroupoidActionOnSet(act.groupoid, np.array([0, 0, 0]), act.act)
    v = act_morphism_check(np.array([0, 0, 0]), act, other)
    assert not v


def test_canonical_action_of_eta(mod2):
    G = eta(mod2).base
    act = canonical_action(G)
    H, q = action_groupoid(validate_action(G, act.anchor, act.act))
    assert is_covering_morphism(q)


def test_object_group_and_components(mod2):
    G = eta(mod2).base
    grp, elems = object_group(G, 0)
    assert grp.order == 2 and elems[0] == G.ident[0]
    assert components(G) == [[0, 1]]


def test_groupoid_isomorphism(mod2):
    G = eta(mod2).base
    F = find_groupoid_isomorphism(G, G)
    assert F is not None
    Z2 = cyclic(2)
    # connected, two objects, vertex group Z2 on both sides: isomorphic as plain groupoids
    other = eta(validate_xmod(klein_four(), Z2, [0, 1, 0, 1], trivial_action(Z2, klein_four()))).base
    F = find_groupoid_isomorphism(G, other)
    assert F is not None and is_covering_morphism(F)
    assert find_groupoid_isomorphism(G, eta(xmod_zero_module(cyclic(4), Z2)).base) is None
    assert find_groupoid_isomorphism(discrete_groupoid(2), group_as_groupoid(cyclic(2))) is None


def test_groupoid_json_roundtrip(mod2):
    G = eta(mod2).base
    assert groupoid_from_json(groupoid_to_json(G)).same(G)
