"""Time every checking kernel under the numba and numpy backends.

Inputs are valid structures, so each kernel scans its whole domain.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--order 24]
"""

import argparse
import timeit

import numpy as np

from xmodkit import _kernels
from xmodkit.crossed_modules import identity_xmod
from xmodkit.equivalence import eta
from xmodkit.groups import cyclic, direct_product, symmetric
from xmodkit.liftings import action_from_lifting, identity_lifting


def workloads(order: int):
    G = symmetric(4) if order >= 24 else symmetric(3)
    GG = direct_product(G, cyclic(2))
    xm = identity_xmod(symmetric(3))
    E = eta(xm)
    act = action_from_lifting(identity_lifting(xm))
    b = E.base
    ident = np.arange(GG.order)
    big = identity_xmod(G)
    return {
        f"assoc |G|={GG.order}": lambda: _kernels.assoc_witness(GG.op),
        f"hom |G|={GG.order}": lambda: _kernels.hom_witness(GG.op, GG.op, ident),
        f"action+cm |A|=|B|={G.order}": lambda: (
            _kernels.action_witness(big.action.act, G.op, G.op),
            _kernels.cm_witness(G.op, G.inv, G.op, G.inv, big.alpha.map, big.action.act),
        ),
        f"groupoid assoc {b.n_mor} mor": lambda: _kernels.comp_assoc_witness(b.comp),
        f"interchange {b.n_mor} mor": lambda: _kernels.interchange_witness(b.comp, E.mor_group.op),
        f"action interchange {b.n_mor} mor": lambda: _kernels.action_interchange_witness(
            act.act, E.mor_group.op, act.X.op
        ),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--order", type=int, default=24, help="24 uses S4 x Z2, smaller uses S3 x Z2")
    args = ap.parse_args()
    jobs = workloads(args.order)
    print(f"{'kernel':<32} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name, fn in jobs.items():
        times = {}
        for which in ("numba", "numpy"):
            with _kernels.backend(which):
                fn()  # compile / warm caches
                times[which] = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<32} {times['numba']:>10.3f} {times['numpy']:>10.3f} {times['numpy'] / times['numba']:>7.1f}x")


if __name__ == "__main__":
    main()
