"""Weierstrass p for the Gaussian lattice Z + iZ.

p is even and doubly periodic, so it identifies the torus modulo -1 with the
Riemann sphere.  The half periods go to e_m > 0, e_n = -e_m and 0.  Each
one-parameter subgroup of the torus lands on a half-axis of the sphere.
"""

from modular_braid import M_POINT, N_POINT, P_POINT, appendix_report, wp
from modular_braid.weierstrass import AXIS_IMAGES, check_axis_images, check_half_turns

for name, p in (("1/2", M_POINT), ("i/2", N_POINT), ("(1+i)/2", P_POINT)):
    print(f"p({name}) = {wp(p).value:.8f}")

axes = check_axis_images()
print("\nsubgroup -> half-axis:", AXIS_IMAGES)
print("largest distance from the claimed half-axis:", f"{axes.max_error:.1e}")

turns = check_half_turns()
for name, perm in turns.observed.items():
    print(f"{name} moves the half-axes as", perm)

report = appendix_report()
print("\nall checks pass:", report.passed(1e-3))
