import itertools
import json

import numpy as np
import pytest

from xmodkit.catalog import (
    HARD_CAP,
    catalog_from_json,
    catalog_groups,
    catalog_to_json,
    dumps,
    generate_catalog,
    load_catalog,
    save_catalog,
    xmods_over_pair,
)
from xmodkit.crossed_modules import xmod_inner_automorphism
from xmodkit.errors import CapExceeded
from xmodkit.groups import cyclic, klein_four, find_isomorphism


def brute_homs(G, H):
    return [
        m
        for m in itertools.product(range(H.order), repeat=G.order)
        if all(m[G.op[x, y]] == H.op[m[x], m[y]] for x in range(G.order) for y in range(G.order))
    ]


def brute_xmod_classes(A, B):
    """Count crossed modules A -> B up to (Aut A) x (Aut B), all by plain enumeration."""
    autA = [m for m in brute_homs(A, A) if len(set(m)) == A.order]
    autB = [m for m in brute_homs(B, B) if len(set(m)) == B.order]
    alphas = brute_homs(A, B)
    found = set()
    for rows in itertools.product(autA, repeat=B.order):
        act = [list(r) for r in rows]
        if act[0] != list(range(A.order)):
            continue
        if any(
            act[B.op[b, c]][a] != act[b][act[c][a]]
            for b in range(B.order) for c in range(B.order) for a in range(A.order)
        ):
            continue
        for alpha in alphas:
            cm1 = all(
                alpha[act[b][a]] == B.op[B.op[b, alpha[a]], B.inv[b]]
                for b in range(B.order) for a in range(A.order)
            )
            cm2 = all(
                act[alpha[a]][c] == A.op[A.op[a, c], A.inv[a]] for a in range(A.order) for c in range(A.order)
            )
            if not (cm1 and cm2):
                continue
            orbit = []
            for s in autA:
                s_inv = [0] * A.order
                for i, v in enumerate(s):
                    s_inv[v] = i
                for t in autB:
                    t_inv = [0] * B.order
                    for i, v in enumerate(t):
                        t_inv[v] = i
                    a2 = tuple(t[alpha[s_inv[a]]] for a in range(A.order))
                    act2 = tuple(tuple(s[act[t_inv[b]][s_inv[a]]] for a in range(A.order)) for b in range(B.order))
                    orbit.append((a2, act2))
            found.add(min(orbit))
    return len(found)


def order_profile(G):
    orders = []
    for g in range(G.order):
        k, x = 1, g
        while x != 0:
            x = G.op[x, g]
            k += 1
        orders.append(k)
    return G.order, G.is_abelian, tuple(sorted(orders))


PAIRS = [(cyclic(1), cyclic(3)), (cyclic(2), cyclic(2)), (cyclic(3), cyclic(2)), (cyclic(2), cyclic(4)),
         (cyclic(4), cyclic(2)), (klein_four(), cyclic(2)), (cyclic(2), klein_four()), (cyclic(3), cyclic(3)),
         (klein_four(), cyclic(3)), (cyclic(4), cyclic(4))]


@pytest.mark.parametrize("A,B", PAIRS, ids=[f"{A.label}-{B.label}" for A, B in PAIRS])
def test_xmod_counts_match_brute_force(A, B):
    assert len(xmods_over_pair(A, B)) == brute_xmod_classes(A, B)


def test_groups_up_to_four():
    assert [G.label for G in catalog_groups(4)] == ["Z1", "Z2", "Z3", "Z4", "V4"]


def test_groups_up_to_eight_are_all_classes():
    groups = catalog_groups(8)
    # 1, 1, 1, 2, 1, 2, 1, 5 isomorphism classes of orders 1..8
    assert len(groups) == 14
    assert len({order_profile(G) for G in groups}) == 14


def test_trivial_catalog():
    cat = generate_catalog(1)
    assert list(cat.groups) == ["Z1"] and len(cat.xmods) == 1


def test_order_six_has_inner_automorphism_of_s3():
    cat = generate_catalog(6)
    assert "S3" in cat.groups
    inner = xmod_inner_automorphism(cat.groups["S3"])
    hits = []
    for label, xm in cat.xmods.items():
        if xm.A.label == "S3" and xm.B.label == "S3" and xm.alpha.is_iso:
            f = find_isomorphism(inner.B, xm.B)
            if f is not None:
                hits.append(label)
    assert hits


def test_roundtrip_is_bit_exact(small_catalog, tmp_path):
    path = tmp_path / "cat.json"
    save_catalog(small_catalog, path)
    first = path.read_bytes()
    again = load_catalog(path)
    assert again.errors == []
    assert dumps(again).encode() == first
    assert set(again.liftings) == set(small_catalog.liftings)


def test_corrupted_entries_are_reported(small_catalog):
    data = catalog_to_json(small_catalog)
    data["groups"][3]["table"][1][1] = data["groups"][3]["table"][1][2]
    bad_xmod = next(x for x in data["xmods"] if x["A"] == "Z3" and x["alpha"] == [0, 0, 0])
    bad_xmod["alpha"] = [0, 1, 2]
    cat = catalog_from_json(json.loads(json.dumps(data)))
    assert any(e.startswith("group Z4") for e in cat.errors)
    assert any(bad_xmod["label"] in e for e in cat.errors)
    assert "Z4" not in cat.groups


def test_cap():
    with pytest.raises(CapExceeded):
        catalog_groups(HARD_CAP + 1)


def test_parallel_matches_serial():
    a = generate_catalog(4, workers=1)
    b = generate_catalog(4, workers=2)
    assert dumps(a) == dumps(b)
