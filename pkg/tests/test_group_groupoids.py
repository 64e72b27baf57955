import numpy as np
import pytest

from xmodkit import _kernels
from xmodkit.crossed_modules import xmod_zero_module
from xmodkit.equivalence import eta
from xmodkit.errors import (
    ActionAxiomFails,
    AdditionNotFunctorial,
    InterchangeFails,
    NotGroupHomAnchor,
    WrongUnit,
    XModKitError,
)
from xmodkit.group_groupoids import (
    GroupGroupoid,
    action_group_groupoid,
    canonical_gg_action,
    discrete_group_groupoid,
    gg_from_json,
    gg_to_json,
    validate_gg_action,
    validate_group_groupoid,
)
from xmodkit.groupoids import (
    ONE_TRANSITIVE,
    TRANSITIVE,
    Groupoid,
    classify_transitivity,
    group_as_groupoid,
    is_covering_morphism,
)
from xmodkit.groups import _from_op, cyclic, symmetric


def relabel(G, p):
    p = np.asarray(p)
    inv = np.argsort(p)
    return _from_op(p[G.op[inv][:, inv]], "relabelled")


def test_discrete_group_groupoid_is_valid():
    for B in (cyclic(3), symmetric(3)):
        D = discrete_group_groupoid(B)
        assert validate_group_groupoid(D.base, D.obj_group, D.mor_group).same(D)


def test_eta_zero_has_four_morphisms(zero22):
    E = eta(zero22)
    assert (E.n_obj, E.n_mor) == (2, 4)
    assert validate_group_groupoid(E.base, E.obj_group, E.mor_group).same(E)


def test_addition_not_functorial_witness(zero22):
    E = eta(zero22)
    with pytest.raises(AdditionNotFunctorial) as exc:
        validate_group_groupoid(E.base, E.obj_group, cyclic(4))
    assert exc.value.witness == (1, 1)


def test_wrong_unit():
    E = eta(xmod_zero_module(cyclic(2), cyclic(2)))
    # Klein table with the neutral element stored at index 1
    table = [[1, 0, 3, 2], [0, 1, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1]]
    with pytest.raises(WrongUnit) as exc:
        validate_group_groupoid(E.base, E.obj_group, table)
    assert exc.value.witness == 1


def test_interchange_fails_on_relabelled_vertex_group():
    Z5 = cyclic(5)
    base = group_as_groupoid(relabel(Z5, [0, 2, 1, 3, 4]))
    with pytest.raises(InterchangeFails) as exc:
        validate_group_groupoid(base, cyclic(1), Z5)
    b, a, d, c = exc.value.witness
    lhs = Z5.op[base.comp[b, a], base.comp[d, c]]
    rhs = base.comp[Z5.op[b, d], Z5.op[a, c]]
    assert lhs != rhs


@pytest.mark.parametrize("seed", range(25))
def test_single_entry_mutation_detected(mod2, seed):
    rng = np.random.default_rng(seed)
    E = eta(mod2)
    comp = E.base.comp.copy()
    h, g = np.argwhere(comp >= 0)[rng.integers(np.count_nonzero(comp >= 0))]
    choices = [m for m in np.nonzero(E.base.d0 == E.base.d0[g])[0] if m != comp[h, g]]
    comp[h, g] = rng.choice(choices)
    b = E.base
    broken = Groupoid(b.n_obj, b.d0, b.d1, b.ident, comp, b.inv, "mutated")
    assert _kernels.interchange_witness(comp, E.mor_group.op) is not None or \
        _kernels.groupoid_witness(b.d0, b.d1, b.ident, comp) is not None
    with pytest.raises(XModKitError):
        validate_group_groupoid(broken, E.obj_group, E.mor_group)


def test_canonical_gg_action_and_covering(mod2):
    E = eta(mod2)
    act = canonical_gg_action(E)
    total, proj = action_group_groupoid(act)
    assert total.n_mor == E.n_mor
    assert is_covering_morphism(proj.underlying)


def test_action_group_groupoid_over_one_object():
    # eta(Z2 -> Z1) is Z2 as a one-object group-groupoid; it acts on Z2 by translation
    Z1, Z2 = cyclic(1), cyclic(2)
    E = eta(xmod_zero_module(Z2, Z1))
    assert E.n_obj == 1 and E.n_mor == 2
    total, proj = action_group_groupoid(validate_gg_action(E, Z2, [0, 0], Z2.op))
    assert isinstance(total, GroupGroupoid)
    assert (total.n_obj, total.n_mor) == (2, 4)
    assert classify_transitivity(total.base) >= {TRANSITIVE, ONE_TRANSITIVE}
    assert is_covering_morphism(proj.underlying)


def test_action_errors():
    Z1, Z2 = cyclic(1), cyclic(2)
    E = eta(xmod_zero_module(Z2, Z2))
    with pytest.raises(NotGroupHomAnchor):
        validate_gg_action(E, cyclic(3), [0, 1, 1], np.full((4, 2), -1))
    # g.x must land over d1(g); swapping the images breaks it
    with pytest.raises(ActionAxiomFails) as exc:
        validate_gg_action(E, Z2, [0, 1], [[0, -1], [-1, 1], [1, -1], [-1, 0]])
    assert exc.value.witness is not None
    E1 = eta(xmod_zero_module(Z2, Z1))
    with pytest.raises(InterchangeFails):
        # an involution of Z3 that is not a translation
        validate_gg_action(E1, cyclic(3), [0, 0, 0], [[0, 1, 2], [0, 2, 1]])


def test_gg_json_roundtrip(mod2):
    E = eta(mod2)
    assert gg_from_json(gg_to_json(E)).same(E)
