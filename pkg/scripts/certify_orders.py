"""Run every closure certification and print one JSON line per case.

    python scripts/certify_orders.py            # small cases only
    python scripts/certify_orders.py --heavy    # adds SL_3(8) and SU_3(49)
"""

import argparse
import json
import logging

from hecke_braid import classify as C
from hecke_braid import engine as E
from hecke_braid.gf import find_element_of_order, make_field
from hecke_braid.hecke import HeckeRep

CASES = [
    # (p, k, alpha order, shape, descend first, heavy)
    (2, 3, 7, (2, 1), False, False),
    (2, 3, 7, (2, 2), False, False),
    (3, 2, 8, (2, 2), False, False),
    (7, 2, 8, (2, 1), False, False),
    (7, 2, 8, (2, 2), True, False),
    (3, 2, 8, (2, 1), False, False),
    (2, 3, 7, (3, 1), False, True),
    (7, 2, 8, (3, 1), False, True),
]


def run(p, k, order, shape, descend, cap):
    ctx = make_field(p, k)
    alpha = find_element_of_order(ctx, order)
    gens = C.commutator_images(HeckeRep(ctx, shape, alpha))
    if descend:
        gens = C.hilbert90_descent(ctx, gens).gens
    pg = C.predicted_group(ctx, shape, alpha)
    res = E.bfs_closure(ctx, gens, cap=cap)
    return {
        "field": f"F_{ctx.q}",
        "lambda": ",".join(map(str, shape)),
        "predicted": pg.label,
        "order": pg.order,
        "closure": res.order,
        "status": res.status,
        "verdict": E.certify_order(res, pg).value,
        "seconds": round(res.stats.seconds, 2),
        "max_frontier": res.stats.max_frontier,
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--heavy", action="store_true")
    ap.add_argument("--cap", type=int, default=E.DEFAULT_CAP)
    ap.add_argument("-v", action="store_true", help="per-level progress")
    args = ap.parse_args()
    if args.v:
        logging.basicConfig(level=logging.INFO, format="%(message)s")
    for p, k, order, shape, descend, heavy in CASES:
        if heavy and not args.heavy:
            continue
        print(json.dumps(run(p, k, order, shape, descend, args.cap)), flush=True)


if __name__ == "__main__":
    main()
