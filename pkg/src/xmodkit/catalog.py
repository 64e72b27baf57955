"""Catalog of small groups, crossed modules and their liftings, with JSON persistence.

Groups come from constructor families (cyclic, Klein, symmetric, dihedral,
dicyclic, direct products) with isomorph rejection, so the catalog is complete
only up to order 8 or so. Crossed modules over a pair ``(A, B)`` are listed up
to isomorphism fixing ``A`` and ``B``: all pairs ``(action, alpha)`` passing
CM1/CM2 are split into orbits of ``Aut(A) x Aut(B)`` and the least pair of each
orbit is kept.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .crossed_modules import CrossedModule, validate_xmod
from .errors import CapExceeded, XModKitError
from .groups import (
    FiniteGroup,
    _invariant,
    automorphisms,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    enumerate_homs,
    find_isomorphism,
    klein_four,
    symmetric,
    validate_group,
)
from .liftings import Lifting, enumerate_liftings, lifting_from_json, lifting_to_json

DEFAULT_MAX_ORDER = 8
HARD_CAP = 24
DEFAULT_MAX_PAIR = 64


def threads() -> int:
    try:
        return max(1, int(os.environ.get("XMODKIT_THREADS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------- groups


def _family(max_order: int):
    """Candidate groups in preference order; earlier names win isomorph rejection."""
    for n in range(1, max_order + 1):
        yield cyclic(n)
    if max_order >= 4:
        yield klein_four()
    for n in (3, 4):
        if _factorial(n) <= max_order:
            yield symmetric(n)
    for n in range(3, max_order // 2 + 1):
        yield dihedral(n)
    for n in range(2, max_order // 4 + 1):
        yield dicyclic(n)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def catalog_groups(max_order: int) -> list[FiniteGroup]:
    """Pairwise non-isomorphic groups up to ``max_order``, sorted by order then generation."""
    if max_order < 1:
        raise ValueError("max_order must be positive")
    if max_order > HARD_CAP:
        raise CapExceeded(f"max_order {max_order} exceeds the hard cap {HARD_CAP}")
    kept: list[FiniteGroup] = []
    invariants: list = []

    def offer(G: FiniteGroup) -> bool:
        inv = _invariant(G)
        for H, h_inv in zip(kept, invariants):
            if h_inv == inv and find_isomorphism(G, H) is not None:
                return False
        kept.append(G)
        invariants.append(inv)
        return True

    for G in _family(max_order):
        offer(G)
    # direct products of nontrivial groups until nothing new appears
    grew = True
    while grew:
        grew = False
        for G in list(kept):
            for H in list(kept):
                if G.order < 2 or H.order < 2 or G.order * H.order > max_order:
                    continue
                if offer(direct_product(G, H)):
                    grew = True
    order_of = {id(G): i for i, G in enumerate(kept)}
    return sorted(kept, key=lambda G: (G.order, order_of[id(G)]))


# ---------------------------------------------------------------- actions as permutations


def _perm_orders(perms: np.ndarray) -> np.ndarray:
    k, n = perms.shape
    ident = np.arange(n)
    orders = np.zeros(k, dtype=np.int64)
    cur = perms.copy()
    rows = np.arange(k)[:, None]
    for p in range(1, n + 2):
        done = (orders == 0) & np.all(cur == ident, axis=1)
        orders[done] = p
        if np.all(orders > 0):
            break
        cur = perms[rows, cur]  # perm o cur
    return orders


def _perm_homs(B: FiniteGroup, perms: np.ndarray, index: dict) -> list[tuple[int, ...]]:
    """Homomorphisms ``B -> <perms>`` as tuples of perm indices, ``rho(b b') = rho(b) o rho(b')``."""
    gens = B.generators
    if not gens:
        return [(0,)]
    orders = _perm_orders(perms)
    bord = B.element_orders
    cands = [np.nonzero(int(bord[g]) % orders == 0)[0] for g in gens]
    rows = B.rows
    ident = np.arange(perms.shape[1])
    out = []

    def extend(k):
        m: list = [None] * B.order
        m[0] = ident
        queue = [0]
        for b in queue:
            for s, t in zip(gens[:k], imgs[:k]):
                x = rows[b][s]
                y = m[b][perms[t]]
                if m[x] is None:
                    m[x] = y
                    queue.append(x)
                elif not np.array_equal(m[x], y):
                    return None
        return m

    imgs: list[int] = [0] * len(gens)

    def rec(k):
        if k == len(gens):
            m = extend(k)
            if m is not None:
                out.append(tuple(index[p.tobytes()] for p in m))
            return
        for t in cands[k]:
            imgs[k] = int(t)
            if k + 1 < len(gens) and extend(k + 1) is None:
                continue
            rec(k + 1)

    rec(0)
    return sorted(out)


def _perm_generators(perms: np.ndarray, index: dict) -> list[int]:
    """A small generating set of the permutation group listed in ``perms``."""
    gens: list[int] = []
    seen = {perms[0].tobytes()}
    for i in range(len(perms)):
        if perms[i].tobytes() in seen:
            continue
        gens.append(i)
        frontier = [perms[j] for j in range(len(perms)) if perms[j].tobytes() in seen]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = p[perms[g]]
                    key = q.tobytes()
                    if key not in seen:
                        seen.add(key)
                        nxt.append(q)
            frontier = nxt
        if len(seen) == len(perms):
            break
    return gens


@dataclass
class _PairData:
    A: FiniteGroup
    B: FiniteGroup
    auts_a: np.ndarray
    index_a: dict
    auts_b: np.ndarray
    inner: np.ndarray


def _pair_data(A: FiniteGroup, B: FiniteGroup, aut_cache: dict) -> _PairData:
    def auts(G):
        key = G.op.tobytes()
        if key not in aut_cache:
            arr = np.array(automorphisms(G), dtype=np.int64).reshape(-1, G.order)
            aut_cache[key] = (arr, {p.tobytes(): i for i, p in enumerate(arr)})
        return aut_cache[key]

    auts_a, index_a = auts(A)
    auts_b, _ = auts(B)
    g = np.arange(A.order)
    conj = A.op[A.op[g[:, None], g[None, :]], A.inv[:, None]]
    inner = np.array([index_a[row.tobytes()] for row in conj], dtype=np.int64)
    return _PairData(A, B, auts_a, index_a, auts_b, inner)


def xmods_over_pair(A: FiniteGroup, B: FiniteGroup, aut_cache: dict | None = None) -> list[CrossedModule]:
    """Crossed modules ``A -> B`` up to isomorphism of the form ``(sigma, tau)``."""
    d = _pair_data(A, B, {} if aut_cache is None else aut_cache)
    homs = enumerate_homs(A, B)
    H = np.array([h.map for h in homs], dtype=np.int64).reshape(len(homs), A.order)
    b = np.arange(B.order)
    valid = []
    for rho in _perm_homs(B, d.auts_a, d.index_a):
        rho = np.array(rho, dtype=np.int64)
        ok = np.all(rho[H] == d.inner[None, :], axis=1)  # CM2
        act = d.auts_a[rho]  # [b, a] = rho(b)(a)
        for h in np.nonzero(ok)[0]:
            alpha = H[h]
            lhs = alpha[act]
            rhs = B.op[B.op[b[:, None], alpha[None, :]], B.inv[:, None]]
            if np.array_equal(lhs, rhs):  # CM1
                valid.append((tuple(rho.tolist()), tuple(alpha.tolist())))
    reps = _orbit_representatives(valid, d)
    out = []
    for k, (rho, alpha) in enumerate(reps):
        label = f"{A.label}->{B.label}#{k + 1}"
        out.append(validate_xmod(A, B, np.array(alpha), d.auts_a[np.array(rho)], label))
    return out


def _orbit_representatives(valid: list, d: _PairData) -> list:
    if not valid:
        return []
    A, B = d.A, d.B
    gens_a = [d.auts_a[i] for i in _perm_generators(d.auts_a, d.index_a)]
    index_b = {p.tobytes(): i for i, p in enumerate(d.auts_b)}
    gens_b = [d.auts_b[i] for i in _perm_generators(d.auts_b, index_b)]
    moves = []
    for s in gens_a:
        sinv = np.argsort(s)
        conj = np.array([d.index_a[s[p[sinv]].tobytes()] for p in d.auts_a], dtype=np.int64)
        moves.append(("a", conj, sinv))
    for t in gens_b:
        moves.append(("b", t, np.argsort(t)))
    pool = set(valid)
    seen: set = set()
    reps = []
    for start in sorted(valid):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for rho, alpha in frontier:
                r, al = np.array(rho), np.array(alpha)
                for kind, m, minv in moves:
                    if kind == "a":  # rho'(b) = s rho(b) s^-1, alpha' = alpha s^-1
                        key = (tuple(m[r].tolist()), tuple(al[minv].tolist()))
                    else:  # rho'(b) = rho(t^-1 b), alpha' = t alpha
                        key = (tuple(r[minv].tolist()), tuple(m[al].tolist()))
                    if key not in orbit:
                        if key not in pool:
                            raise XModKitError("isomorphism moved a crossed module out of the valid set", witness=key)
                        orbit.add(key)
                        nxt.append(key)
            frontier = nxt
        seen |= orbit
        reps.append(min(orbit))
    return sorted(reps)


# ---------------------------------------------------------------- the catalog


@dataclass
class Catalog:
    groups: dict[str, FiniteGroup]
    xmods: dict[str, CrossedModule]
    liftings: dict[str, list[Lifting]]
    provenance: dict
    errors: list[str] = field(default_factory=list)

    def group(self, label: str) -> FiniteGroup:
        return self.groups[label]


def _pair_task(args):
    A, B = args
    return xmods_over_pair(A, B)


def generate_catalog(
    max_order: int = DEFAULT_MAX_ORDER, max_pair: int = DEFAULT_MAX_PAIR, workers: int | None = None
) -> Catalog:
    groups = catalog_groups(max_order)
    pairs = [(A, B) for A in groups for B in groups if A.order * B.order <= max_pair]
    workers = threads() if workers is None else workers
    if workers > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_pair_task, pairs, chunksize=4))
    else:
        cache: dict = {}
        results = [xmods_over_pair(A, B, cache) for A, B in pairs]
    xmods = {xm.label: xm for batch in results for xm in batch}
    liftings = {label: enumerate_liftings(xm, check=False) for label, xm in xmods.items()}
    provenance = {"generator": "xmodkit", "version": __version__, "max_order": max_order, "max_pair": max_pair}
    return Catalog({G.label: G for G in groups}, xmods, liftings, provenance)


def catalog_to_json(cat: Catalog) -> dict:
    return {
        "provenance": cat.provenance,
        "groups": [{"label": G.label, "table": G.op.tolist()} for G in cat.groups.values()],
        "xmods": [
            {
                "label": xm.label,
                "A": xm.A.label,
                "B": xm.B.label,
                "alpha": xm.alpha.map.tolist(),
                "action": xm.action.act.tolist(),
            }
            for xm in cat.xmods.values()
        ],
        "liftings": {
            label: [lifting_to_json(L, base_ref=label) for L in ls] for label, ls in cat.liftings.items()
        },
    }


def dumps(cat: Catalog) -> str:
    return json.dumps(catalog_to_json(cat), sort_keys=True, separators=(",", ":")) + "\n"


def save_catalog(cat: Catalog, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(cat))


def catalog_from_json(data: dict) -> Catalog:
    """Rebuild and revalidate; entries that fail are dropped and reported in ``errors``."""
    errors: list[str] = []
    groups: dict[str, FiniteGroup] = {}
    for entry in data.get("groups", []):
        label = entry.get("label", "?")
        try:
            G = validate_group(entry["table"], label)
            if not np.array_equal(G.op, np.asarray(entry["table"])):
                raise XModKitError("identity is not element 0")
        except (XModKitError, KeyError, ValueError) as exc:
            errors.append(f"group {label}: {exc}")
            continue
        if label in groups:
            errors.append(f"group {label}: duplicate label")
            continue
        groups[label] = G
    xmods: dict[str, CrossedModule] = {}
    for entry in data.get("xmods", []):
        label = entry.get("label", "?")
        try:
            A, B = groups[entry["A"]], groups[entry["B"]]
            xm = validate_xmod(A, B, entry["alpha"], entry["action"], label)
        except KeyError as exc:
            errors.append(f"xmod {label}: unknown group {exc}")
            continue
        except (XModKitError, ValueError, IndexError) as exc:
            errors.append(f"xmod {label}: {exc}")
            continue
        if label in xmods:
            errors.append(f"xmod {label}: duplicate label")
            continue
        xmods[label] = xm
    liftings: dict[str, list[Lifting]] = {}
    for label, entries in data.get("liftings", {}).items():
        if label not in xmods:
            errors.append(f"liftings of {label}: unknown crossed module")
            continue
        try:
            liftings[label] = [lifting_from_json(e, xmods[label]) for e in entries]
        except (XModKitError, ValueError, KeyError) as exc:
            errors.append(f"liftings of {label}: {exc}")
    return Catalog(groups, xmods, liftings, dict(data.get("provenance", {})), errors)


def load_catalog(path) -> Catalog:
    with open(path, encoding="utf-8") as fh:
        return catalog_from_json(json.load(fh))
