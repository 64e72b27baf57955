import itertools

import numpy as np
import pytest

from xmodkit.crossed_modules import (
    classify_xmod_transitivity,
    identity_xmod,
    identity_xmod_morphism,
    trivial_action,
    validate_group_action,
    validate_xmod,
    validate_xmod_morphism,
    xmod_from_normal_subgroup,
    xmod_zero_module,
)
from xmodkit.equivalence import eta
from xmodkit.errors import (
    BaseMismatch,
    DiagramFails,
    NotCovering,
    NotCrossedModule,
    NotIso,
    NotSubgroupOfKernel,
    NotTransitiveSource,
    PreconditionFails,
)
from xmodkit.group_groupoids import canonical_gg_action, discrete_group_groupoid, validate_gg_action
from xmodkit.groupoids import SIMPLY_TRANSITIVE
from xmodkit.groups import (
    GroupHom,
    automorphisms,
    cyclic,
    identity_hom,
    klein_four,
    subgroup,
    subgroups,
    symmetric,
)
from xmodkit.liftings import (
    CoveringXModMorphism,
    action_from_lifting,
    automorphism_lifting,
    check_lifting,
    compose_liftings,
    connecting_morphism,
    covering_roundtrip,
    covering_to_lifting,
    enumerate_liftings,
    find_lifting_isomorphism,
    gg_action_on_kernel_quotient,
    identity_lifting,
    is_lifting_of_lifting,
    lifting_from_action,
    lifting_from_central_subgroup,
    lifting_from_json,
    lifting_to_covering,
    lifting_to_json,
    natural_lifting,
    one_lifting_check,
    search_liftings,
    theta_psi_roundtrip,
    transport_lifting,
    universal_lifting,
    validate_lifting,
)


def brute_maps(G, H):
    """All homomorphisms G -> H by plain enumeration of maps."""
    out = []
    for m in itertools.product(range(H.order), repeat=G.order):
        if all(m[G.op[x, y]] == H.op[m[x], m[y]] for x in range(G.order) for y in range(G.order)):
            out.append(m)
    return out


def brute_is_lifting(xm, X, omega, phi):
    A, B = xm.A, xm.B
    if any(omega[phi[a]] != xm.alpha.map[a] for a in range(A.order)):
        return False
    act = [[xm.action.act[omega[x]][a] for a in range(A.order)] for x in range(X.order)]
    cm1 = all(phi[act[x][a]] == X.op[X.op[x, phi[a]], X.inv[x]] for x in range(X.order) for a in range(A.order))
    cm2 = all(act[phi[a]][c] == A.op[A.op[a, c], A.inv[a]] for a in range(A.order) for c in range(A.order))
    return cm1 and cm2


def test_validate_lifting_examples(mod2):
    L = identity_lifting(mod2)
    assert L.X.same_table(mod2.B)
    U = validate_lifting(mod2, mod2.A, [0, 1, 0, 1], np.arange(4))
    assert len(U.kernel) == 1
    with pytest.raises(DiagramFails) as exc:
        validate_lifting(mod2, mod2.A, [0, 1, 0, 1], [0, 2, 0, 2])
    assert exc.value.witness == 1


@pytest.mark.parametrize("debug", [False, True])
def test_validate_lifting_agrees_with_brute_force(debug):
    S3 = symmetric(3)
    bases = [
        validate_xmod(cyclic(4), cyclic(2), [0, 1, 0, 1], trivial_action(cyclic(2), cyclic(4)), "Z4->Z2"),
        xmod_zero_module(cyclic(2), cyclic(2)),
        xmod_from_normal_subgroup(S3, [h for h in subgroups(S3) if h.order == 3][0]),
    ]
    for xm in bases:
        for X in (cyclic(1), cyclic(2), cyclic(3), cyclic(4), klein_four()):
            omegas = brute_maps(X, xm.B)
            phis = brute_maps(xm.A, X)
            for om in omegas:
                for ph in phis:
                    expect = brute_is_lifting(xm, X, om, ph)
                    try:
                        validate_lifting(xm, X, list(om), list(ph), debug=debug)
                        got = True
                    except (DiagramFails, NotCrossedModule):
                        got = False
                    assert got == expect, (xm.label, X.label, om, ph)


def test_phibar_route_matches_cm1_on_random_actions(mod2):
    # with a non-pulled-back action CM2 can fail on its own; the semidirect check tracks CM1
    Z2 = cyclic(2)
    xm = xmod_zero_module(Z2, Z2)
    X = Z2
    act = validate_group_action(X, Z2, [[0, 1], [0, 1]]).act
    chk = check_lifting(xm, X, [0, 1], [0, 0], action=act)
    assert chk.cm1_holds == (chk.phibar is None)


def test_enumerate_liftings_examples(mod2, id22, zero22):
    Ls = enumerate_liftings(mod2)
    assert [L.degree for L in Ls] == [2, 1]
    assert [sorted(L.kernel) for L in Ls] == [[0], [0, 2]]
    assert len(enumerate_liftings(id22)) == 1
    assert len(enumerate_liftings(zero22)) == 2


def test_central_subgroup_lifting(mod2):
    Z4 = mod2.A
    U = lifting_from_central_subgroup(mod2, subgroup(Z4, [0]))
    assert len(U.omega.kernel()) == 2
    N = lifting_from_central_subgroup(mod2, subgroup(Z4, [0, 2]))
    assert N.omega.is_iso
    assert N.same(natural_lifting(mod2))
    with pytest.raises(NotSubgroupOfKernel):
        lifting_from_central_subgroup(mod2, subgroup(Z4, [0, 1, 2, 3]))


def test_natural_lifting_examples(mod2, zero22):
    L = natural_lifting(mod2)
    assert L.X.order == 2 and L.omega.is_iso
    inj = xmod_from_normal_subgroup(cyclic(4), subgroup(cyclic(4), [0, 2]))
    assert natural_lifting(inj).phi.is_iso
    Z = natural_lifting(zero22)
    assert Z.X.order == 1 and len(Z.omega.kernel()) == 1


def test_universal_lifting(mod2, zero22):
    U, links = universal_lifting(mod2)
    assert U.X.same_table(mod2.A) and np.array_equal(U.phi.map, np.arange(4))
    (L0, f0, _), (L1, f1, _) = links
    assert np.array_equal(f1.f.map, L1.phi.map)  # the projection Z4 -> Z4/{0,2}
    U, links = universal_lifting(zero22)
    assert len(links) == 2


def test_one_lifting_check(mod2, zero22):
    assert one_lifting_check(natural_lifting(mod2)).is_iso
    assert one_lifting_check(identity_lifting(mod2)).is_iso
    Z6, Z2 = cyclic(6), cyclic(2)
    xm = validate_xmod(Z6, Z2, [a % 2 for a in range(6)], trivial_action(Z2, Z6))
    L = lifting_from_central_subgroup(xm, subgroup(Z6, [0, 2, 4]))
    assert one_lifting_check(L).is_iso
    with pytest.raises(PreconditionFails):
        one_lifting_check(lifting_from_central_subgroup(mod2, subgroup(mod2.A, [0])))
    with pytest.raises(PreconditionFails):
        one_lifting_check(identity_lifting(zero22))


def test_connecting_morphism_examples(mod2, id22, zero22):
    res = connecting_morphism(identity_xmod_morphism(id22), identity_lifting(id22))
    assert res and np.array_equal(res.morphism.f2.map, [0, 1])
    U = lifting_from_central_subgroup(mod2, subgroup(mod2.A, [0]))
    res = connecting_morphism(identity_xmod_morphism(mod2), U)
    assert not res and res.witness == 2
    N = natural_lifting(mod2)
    res = connecting_morphism(identity_xmod_morphism(mod2), N)
    assert res and np.array_equal(N.omega.map[res.morphism.f2.map], [0, 1])
    with pytest.raises(NotTransitiveSource):
        connecting_morphism(identity_xmod_morphism(zero22), identity_lifting(zero22))
    with pytest.raises(BaseMismatch):
        connecting_morphism(identity_xmod_morphism(id22), N)


def test_lifting_of_lifting(mod2):
    U = lifting_from_central_subgroup(mod2, subgroup(mod2.A, [0]))
    N = natural_lifting(mod2)
    assert is_lifting_of_lifting(N, U)
    assert not is_lifting_of_lifting(U, N)
    assert is_lifting_of_lifting(N, N)
    assert is_lifting_of_lifting(U, U)


def test_compose_liftings(mod2):
    N = natural_lifting(mod2)
    assert compose_liftings(N, identity_lifting(N.as_xmod())).same(N)
    U = lifting_from_central_subgroup(mod2, subgroup(mod2.A, [0]))
    top = natural_lifting(U.as_xmod())
    C = compose_liftings(U, top)
    kernels = [sorted(L.kernel) for L in enumerate_liftings(mod2)]
    assert sorted(C.kernel) in kernels
    with pytest.raises(BaseMismatch):
        compose_liftings(U, identity_lifting(mod2))


def test_transport_lifting(mod2):
    U = lifting_from_central_subgroup(mod2, subgroup(mod2.A, [0]))
    same = transport_lifting(U, identity_hom(mod2.B), identity_hom(U.X))
    assert same.same(U)
    neg = GroupHom(U.X, U.X, np.array([0, 3, 2, 1]))
    moved = transport_lifting(U, identity_hom(mod2.B), neg)
    assert sorted(moved.kernel) == sorted(U.kernel)
    assert find_lifting_isomorphism(U, moved) is not None
    V4 = klein_four()
    base = xmod_zero_module(cyclic(2), V4)
    L = natural_lifting(base)
    f = GroupHom(V4, V4, np.array(automorphisms(V4)[1]))
    assert transport_lifting(L, f, identity_hom(L.X)).base.B.same_table(V4)
    with pytest.raises(NotIso):
        transport_lifting(L, GroupHom(V4, V4, np.zeros(4, dtype=np.int64)), identity_hom(L.X))


def test_actions_and_liftings(mod2, zero22):
    I = identity_lifting(mod2)
    act = action_from_lifting(I)
    assert act.same(canonical_gg_action(eta(mod2)))
    assert lifting_from_action(act).same(I)
    U = lifting_from_central_subgroup(mod2, subgroup(mod2.A, [0]))
    big = action_from_lifting(U)
    assert big.groupoid.n_mor == 8 and big.X.order == 4
    Z = natural_lifting(zero22)
    triv = action_from_lifting(Z)
    assert Z.X.order == 1 and np.all(triv.act[triv.act >= 0] == 0)
    for L in enumerate_liftings(mod2):
        assert theta_psi_roundtrip(L)
        assert theta_psi_roundtrip(action_from_lifting(L))
    with pytest.raises(BaseMismatch):
        lifting_from_action(act, base=zero22)


def test_trivial_x_action_over_zero_base(zero22):
    G = eta(zero22)
    Z1 = cyclic(1)
    act = np.where(G.base.d0[:, None] == 0, 0, -1)
    L = lifting_from_action(validate_gg_action(G, Z1, [0], act))
    assert L.phi.is_zero


def test_coverings(mod2, id22):
    c = lifting_to_covering(identity_lifting(id22))
    assert c.morphism.f1.is_iso and c.morphism.f2.is_iso
    U = lifting_from_central_subgroup(mod2, subgroup(mod2.A, [0]))
    c = lifting_to_covering(U)
    assert np.array_equal(c.morphism.f2.map, [0, 1, 0, 1])
    assert covering_to_lifting(c).same(U)
    assert covering_roundtrip(c).is_iso
    Z2 = cyclic(2)
    bad = validate_xmod_morphism(mod2, identity_xmod(Z2), [0, 1, 0, 1], [0, 1])
    with pytest.raises(NotCovering):
        covering_to_lifting(CoveringXModMorphism(bad))


def test_automorphism_covering():
    Z2, Z3 = cyclic(2), cyclic(3)
    inv = validate_group_action(Z2, Z3, [[0, 1, 2], [0, 2, 1]])
    xm = xmod_zero_module(Z3, Z2, inv)
    L = automorphism_lifting(xm)
    assert L.base.B.order == 2 and L.omega.is_iso
    assert lifting_to_covering(L).morphism.f1.is_iso


def test_kernel_quotient_action(zero22, mod2):
    a = gg_action_on_kernel_quotient(eta(zero22))
    assert a.X.order == 1
    a = gg_action_on_kernel_quotient(eta(mod2))
    assert a.X.order == 2
    a = gg_action_on_kernel_quotient(discrete_group_groupoid(cyclic(3)))
    assert a.X.order == 1


def test_simply_transitive_inherited():
    S3 = symmetric(3)
    for N in subgroups(S3):
        if N.is_normal():
            xm = xmod_from_normal_subgroup(S3, N)
            for L in enumerate_liftings(xm):
                assert SIMPLY_TRANSITIVE in classify_xmod_transitivity(L.as_xmod())


def test_search_finds_quotient_liftings(mod2):
    groups = [cyclic(1), cyclic(2), cyclic(4), klein_four()]
    found = search_liftings(mod2, groups, transitive_only=True)
    assert sorted(sorted(L.kernel) for L in found) == [[0], [0, 2]]


def test_json_roundtrip(mod2):
    for L in enumerate_liftings(mod2):
        assert lifting_from_json(lifting_to_json(L), mod2).same(L)
    data = lifting_to_json(natural_lifting(mod2))
    data["degree"] = 5
    with pytest.raises(ValueError):
        lifting_from_json(data, mod2)
