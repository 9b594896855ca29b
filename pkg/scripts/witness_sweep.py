"""Evaluate the normal-closure witness words in every R_lambda and report where
they disagree.

With four strands the rewriting needs s_1 and s_2 to commute, so the identity
breaks on every shape of dimension > 1; from five strands on it holds.
"""

import numpy as np

from hecke_braid.braid import literal_witness_words
from hecke_braid.gf import find_element_of_order, make_field
from hecke_braid.hecke import HeckeRep
from hecke_braid.young import format_partition, partitions_of

for p, k, order in [(2, 3, 7), (7, 2, 8), (3, 2, 8)]:
    ctx = make_field(p, k)
    alpha = find_element_of_order(ctx, order)
    for n in range(4, 8):
        if order <= n:
            continue
        lhs, rhs = literal_witness_words(n)
        bad = [format_partition(lam) for lam in partitions_of(n)
               if not np.array_equal(HeckeRep(ctx, lam, alpha)(lhs), HeckeRep(ctx, lam, alpha)(rhs))]
        print(f"F_{ctx.q:<3} n={n}  {'holds' if not bad else 'fails on ' + ' '.join(bad)}")
