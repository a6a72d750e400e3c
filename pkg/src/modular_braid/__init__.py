"""
Exact computation with SL(2,Z), the braid group B3 and the modular torus.

Submodules:

- :mod:`.sl2`         matrices, words in A and B, abelianization, f_n
- :mod:`.derived`     the free derived subgroup <g1, g2> and factorization
- :mod:`.braid3`      B3, the map sigma onto SL(2,Z), the word problem
- :mod:`.halfplane`   Moebius action, domain reduction, hexagon side pairings
- :mod:`.tiling`      SVG drawings of the tiles
- :mod:`.weierstrass` p-function of the Gaussian lattice and the half-turn checks
"""

from .braid3 import FULL_TWIST, HALF_TWIST, braid_equal, braid_of_matrix, exp_sum, is_central_power, sigma
from .derived import G1, G2, derived_member, eval_free, f_in_free_gens, factor_derived
from .errors import DeterminantError, DomainError, MembershipError, ParseError, ReductionError
from .halfplane import (
    HPoint, cusp_commutator, domain_B, hexagon, in_standard_domain, mobius_apply,
    reduce_point, side_pairing, verify_pairing,
)
from .sl2 import (
    IDENTITY, MINUS_I, A, B, X, AbClass, Mat2Z, ProjMat, abelianize, commutator, eval_word,
    f_matrix, mat_inv, mat_mul, word_of_matrix,
)
from .tiling import emit_tiling_svg
from .weierstrass import M_POINT, N_POINT, P_POINT, TorusPoint, appendix_report, wp
from .words import BraidWord, FreeWord, GenWord

__version__ = "0.1.0"
