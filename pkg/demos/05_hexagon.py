"""The hexagon B_0..B_5 and its side pairings, drawn as SVG.

f_n carries the arc side of the tile B_n onto the arc side of B_{n+3}.  The
six tiles with these gluings make a once-punctured torus.  The script checks
the pairings, the cusp and writes hexagon.svg next to itself.
"""

from pathlib import Path

from modular_braid import (
    A, X, HPoint, cusp_commutator, emit_tiling_svg, f_matrix, mobius_apply, verify_pairing,
)

print("pairings hold for n in -10..10:", all(verify_pairing(n) for n in range(-10, 11)))

shift = A ** -6 * X ** 2
print("A^-6 X^2 =", shift, " sends 0.3+0.7i to", mobius_apply(shift, HPoint(0.3, 0.7)).z)

g1, g2 = f_matrix(-2), f_matrix(-1)
x, y, z = g1.trace, g2.trace, (g1 * g2).trace
print(f"traces {x}, {y}, {z}: x^2 + y^2 + z^2 = {x*x + y*y + z*z} = xyz = {x*y*z}")
c = cusp_commutator()
print(f"commutator around the puncture {c}, trace {c.trace}")

out = Path(__file__).with_name("hexagon.svg")
count = emit_tiling_svg((0, 5), 1, out)
print(f"\nwrote {count} tiles to {out}")
