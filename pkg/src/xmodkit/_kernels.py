"""Exhaustive table-scanning kernels.

Every check is written twice: a numba ``@njit`` loop nest and a vectorized
numpy version. Both return the *first* failing tuple in lexicographic order
(or ``None``), so the two backends are interchangeable and can be compared
against each other.

The backend is chosen at import time from ``XMODKIT_NUMBA`` (``0`` selects
numpy) and can be switched at runtime with :func:`set_backend`.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


def _default_backend() -> str:
    flag = os.environ.get("XMODKIT_NUMBA", "1").strip().lower()
    if flag in ("0", "false", "no", "off") or not HAVE_NUMBA:
        return "numpy"
    return "numba"


_BACKEND = _default_backend()


def get_backend() -> str:
    return _BACKEND


def set_backend(name: str) -> None:
    global _BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _BACKEND = name


@contextmanager
def backend(name: str):
    old = _BACKEND
    set_backend(name)
    try:
        yield
    finally:
        set_backend(old)


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def _unpack(res):
    return None if res[0] < 0 else tuple(int(v) for v in res)


# ---------------------------------------------------------------- associativity


@njit(cache=True)
def _assoc_nb(op):
    n = op.shape[0]
    for a in range(n):
        for b in range(n):
            ab = op[a, b]
            for c in range(n):
                if op[ab, c] != op[a, op[b, c]]:
                    return a, b, c
    return -1, -1, -1


def _assoc_np(op):
    return _first(op[op] != op[:, op])


def assoc_witness(op: np.ndarray):
    """First triple ``(a, b, c)`` with ``(ab)c != a(bc)``."""
    if _BACKEND == "numba":
        return _unpack(_assoc_nb(op))
    return _assoc_np(op)


# ---------------------------------------------------------------- homomorphisms


@njit(cache=True)
def _hom_nb(src_op, tgt_op, m):
    n = src_op.shape[0]
    for x in range(n):
        for y in range(n):
            if m[src_op[x, y]] != tgt_op[m[x], m[y]]:
                return x, y
    return -1, -1


def _hom_np(src_op, tgt_op, m):
    return _first(m[src_op] != tgt_op[m[:, None], m[None, :]])


def hom_witness(src_op: np.ndarray, tgt_op: np.ndarray, m: np.ndarray):
    """First pair ``(x, y)`` with ``m(xy) != m(x) m(y)``."""
    if _BACKEND == "numba":
        return _unpack(_hom_nb(src_op, tgt_op, m))
    return _hom_np(src_op, tgt_op, m)


# ---------------------------------------------------------------- group actions

# kinds: 1 identity acts nontrivially (a), 2 not compatible with the actor
# product (b1, b2, a), 3 some act(b, -) is not a homomorphism (b, a, a1)


@njit(cache=True)
def _action_nb(act, a_op, b_op):
    nb, na = act.shape
    for a in range(na):
        if act[0, a] != a:
            return 1, a, -1, -1
    for b1 in range(nb):
        for b2 in range(nb):
            b12 = b_op[b1, b2]
            for a in range(na):
                if act[b12, a] != act[b1, act[b2, a]]:
                    return 2, b1, b2, a
    for b in range(nb):
        for a in range(na):
            for a1 in range(na):
                if act[b, a_op[a, a1]] != a_op[act[b, a], act[b, a1]]:
                    return 3, b, a, a1
    return -1, -1, -1, -1


def _action_np(act, a_op, b_op):
    w = _first(act[0] != np.arange(act.shape[1]))
    if w is not None:
        return (1, w[0], -1, -1)
    w = _first(act[b_op] != act[np.arange(act.shape[0])[:, None, None], act[None, :, :]])
    if w is not None:
        return (2,) + w
    lhs = act[:, a_op]
    rhs = a_op[act[:, :, None], act[:, None, :]]
    w = _first(lhs != rhs)
    if w is not None:
        return (3,) + w
    return None


def action_witness(act: np.ndarray, a_op: np.ndarray, b_op: np.ndarray):
    """Check ``act[b, a]`` is an action of B on A by automorphisms."""
    if _BACKEND == "numba":
        return _unpack(_action_nb(act, a_op, b_op))
    return _action_np(act, a_op, b_op)


# ---------------------------------------------------------------- crossed modules

# kinds: 1 CM1 fails at (b, a), 2 CM2 fails at (a, a1)


@njit(cache=True)
def _cm_nb(a_op, a_inv, b_op, b_inv, alpha, act):
    nb, na = act.shape
    for b in range(nb):
        for a in range(na):
            if alpha[act[b, a]] != b_op[b_op[b, alpha[a]], b_inv[b]]:
                return 1, b, a
    for a in range(na):
        for a1 in range(na):
            if act[alpha[a], a1] != a_op[a_op[a, a1], a_inv[a]]:
                return 2, a, a1
    return -1, -1, -1


def _cm_np(a_op, a_inv, b_op, b_inv, alpha, act):
    nb = act.shape[0]
    b = np.arange(nb)
    rhs = b_op[b_op[b[:, None], alpha[None, :]], b_inv[:, None]]
    w = _first(alpha[act] != rhs)
    if w is not None:
        return (1,) + w
    a = np.arange(act.shape[1])
    rhs2 = a_op[a_op[a[:, None], a[None, :]], a_inv[:, None]]
    w = _first(act[alpha] != rhs2)
    if w is not None:
        return (2,) + w
    return None


def cm_witness(a_op, a_inv, b_op, b_inv, alpha, act):
    """First failure of the two crossed-module identities."""
    if _BACKEND == "numba":
        return _unpack(_cm_nb(a_op, a_inv, b_op, b_inv, alpha, act))
    return _cm_np(a_op, a_inv, b_op, b_inv, alpha, act)


# ---------------------------------------------------------------- groupoids


@njit(cache=True)
def _comp_assoc_nb(comp):
    n = comp.shape[0]
    for h in range(n):
        for g in range(n):
            hg = comp[h, g]
            if hg < 0:
                continue
            for f in range(n):
                gf = comp[g, f]
                if gf < 0:
                    continue
                if comp[hg, f] != comp[h, gf]:
                    return h, g, f
    return -1, -1, -1


def _comp_assoc_np(comp):
    hg = comp
    safe = np.where(comp >= 0, comp, 0)
    lhs = comp[safe]  # [h, g, f] -> comp[hg, f]
    rhs = comp[:, safe]  # [h, g, f] -> comp[h, gf]
    mask = (hg >= 0)[:, :, None] & (comp >= 0)[None, :, :]
    return _first(mask & (lhs != rhs))


def comp_assoc_witness(comp: np.ndarray):
    """First composable triple where partial composition is not associative."""
    if _BACKEND == "numba":
        return _unpack(_comp_assoc_nb(comp))
    return _comp_assoc_np(comp)


# kinds: 1 definedness differs from d0(g) == anchor(s) at (g, s),
# 2 anchor(g.s) != d1(g) at (g, s), 3 identity acts nontrivially at s,
# 4 (h o g).s != h.(g.s) at (h, g, s)


@njit(cache=True)
def _gpd_action_nb(comp, ident, d0, d1, anchor, act):
    nm, ns = act.shape
    for g in range(nm):
        for s in range(ns):
            if (act[g, s] >= 0) != (d0[g] == anchor[s]):
                return 1, g, s, -1
    for g in range(nm):
        for s in range(ns):
            if act[g, s] >= 0 and anchor[act[g, s]] != d1[g]:
                return 2, g, s, -1
    for s in range(ns):
        if act[ident[anchor[s]], s] != s:
            return 3, s, -1, -1
    for h in range(nm):
        for g in range(nm):
            hg = comp[h, g]
            if hg < 0:
                continue
            for s in range(ns):
                gs = act[g, s]
                if gs < 0:
                    continue
                if act[hg, s] != act[h, gs]:
                    return 4, h, g, s
    return -1, -1, -1, -1


def _gpd_action_np(comp, ident, d0, d1, anchor, act):
    defined = act >= 0
    w = _first(defined != (d0[:, None] == anchor[None, :]))
    if w is not None:
        return (1,) + w + (-1,)
    safe = np.where(defined, act, 0)
    w = _first(defined & (anchor[safe] != d1[:, None]))
    if w is not None:
        return (2,) + w + (-1,)
    s = np.arange(act.shape[1])
    w = _first(act[ident[anchor], s] != s)
    if w is not None:
        return (3, w[0], -1, -1)
    csafe = np.where(comp >= 0, comp, 0)
    lhs = act[csafe]  # [h, g, s] -> act[h o g, s]
    rhs = act[:, safe]  # [h, g, s] -> act[h, g.s]
    mask = (comp >= 0)[:, :, None] & defined[None, :, :]
    w = _first(mask & (lhs != rhs))
    if w is not None:
        return (4,) + w
    return None


def groupoid_action_witness(comp, ident, d0, d1, anchor, act):
    if _BACKEND == "numba":
        return _unpack(_gpd_action_nb(comp, ident, d0, d1, anchor, act))
    return _gpd_action_np(comp, ident, d0, d1, anchor, act)


# ---------------------------------------------------------------- interchange laws


@njit(cache=True)
def _interchange_nb(comp, mor_op):
    n = comp.shape[0]
    for b in range(n):
        for a in range(n):
            ba = comp[b, a]
            if ba < 0:
                continue
            for d in range(n):
                bd = mor_op[b, d]
                for c in range(n):
                    dc = comp[d, c]
                    if dc < 0:
                        continue
                    rhs = comp[bd, mor_op[a, c]]
                    if rhs < 0 or rhs != mor_op[ba, dc]:
                        return b, a, d, c
    return -1, -1, -1, -1


def _interchange_np(comp, mor_op):
    pb, pa = np.nonzero(comp >= 0)
    pc = comp[pb, pa]
    for i in range(len(pb)):
        lhs = mor_op[pc[i], pc]
        rhs = comp[mor_op[pb[i], pb], mor_op[pa[i], pa]]
        bad = np.nonzero((rhs < 0) | (rhs != lhs))[0]
        if len(bad):
            j = bad[0]
            return int(pb[i]), int(pa[i]), int(pb[j]), int(pa[j])
    return None


def interchange_witness(comp: np.ndarray, mor_op: np.ndarray):
    """First ``(b, a, d, c)`` with ``(b o a) + (d o c) != (b + d) o (a + c)``."""
    if _BACKEND == "numba":
        return _unpack(_interchange_nb(comp, mor_op))
    return _interchange_np(comp, mor_op)


@njit(cache=True)
def _act_interchange_nb(act, mor_op, x_op):
    nm, nx = act.shape
    for g in range(nm):
        for x in range(nx):
            gx = act[g, x]
            if gx < 0:
                continue
            for g1 in range(nm):
                gg = mor_op[g, g1]
                for x1 in range(nx):
                    gx1 = act[g1, x1]
                    if gx1 < 0:
                        continue
                    rhs = act[gg, x_op[x, x1]]
                    if rhs < 0 or rhs != x_op[gx, gx1]:
                        return g, x, g1, x1
    return -1, -1, -1, -1


def _act_interchange_np(act, mor_op, x_op):
    pg, px = np.nonzero(act >= 0)
    pv = act[pg, px]
    for i in range(len(pg)):
        lhs = x_op[pv[i], pv]
        rhs = act[mor_op[pg[i], pg], x_op[px[i], px]]
        bad = np.nonzero((rhs < 0) | (rhs != lhs))[0]
        if len(bad):
            j = bad[0]
            return int(pg[i]), int(px[i]), int(pg[j]), int(px[j])
    return None


def action_interchange_witness(act: np.ndarray, mor_op: np.ndarray, x_op: np.ndarray):
    """First ``(g, x, g1, x1)`` with ``g.x + g1.x1 != (g + g1).(x + x1)``."""
    if _BACKEND == "numba":
        return _unpack(_act_interchange_nb(act, mor_op, x_op))
    return _act_interchange_np(act, mor_op, x_op)
