"""Reducing points of the upper half-plane to the standard domain.

The standard domain is {-1/2 <= Re z <= 1/2, |z| >= 1}.  reduce_point also
returns the word in A, B that does the job, so the move can be undone.
"""

from modular_braid import HPoint, eval_word, in_standard_domain, mobius_apply, reduce_point

for z in (HPoint(5.0, 1.0), HPoint(0.1, 0.01), HPoint(-37.25, 0.003)):
    zr, w = reduce_point(z)
    back = mobius_apply(eval_word(w).inverse(), zr)
    print(f"{z.z:>22}  ->  {zr.z:.6f}  by {w}")
    print(f"{'':22}      in domain: {in_standard_domain(zr)}, "
          f"round trip error {abs(back.z - z.z):.1e}")
