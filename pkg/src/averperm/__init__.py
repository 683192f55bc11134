"""averperm: exact verification of averaging/perm algebra structures,
Yang-Baxter tensors and their operator correspondences.

Everything is computed over exact fields (Q or a small prime field) from
structure constants; equality is exact and rank decides bijectivity."""

from .bundles import AlgebraBundle, Construction, IdentitySuite, bundle, \
    build_suite, check_suite, direct_sum, mult_from_entries, perm_from_averaging, \
    presapp_from_zinbiel, sapp_from_admissible, subadjacent_comm, subadjacent_sapp
from .coalgebras import Comultiplication, check_averaging_bialgebra, \
    check_coassoc_cocomm, check_inf_bialgebra, check_sapp_bialgebra, \
    check_sapp_coalgebra, comult_from_entries, dual_multiplication, dualize_mult, \
    duality_bridge
from .fields import FIELDS, GF2, GF3, GF5, QQ
from .reports import CheckReport, Counterexample
from .tensors import BilinearForm, LinearMap, Tensor2, Tensor3, adjoint_wrt_form, \
    apply_map_tensor, dual_map, natural, phi_from_form, sharp, t2_from_entries, tau, xi
from .ybe import RClassification, TransferMismatch, aaybe_check, aybe_tensor, \
    classify_r, comm_invariance_check, delta_r, sa_tensor, sapp_comults_from_r, \
    sapp_invariance_check, sharp_homomorphism_check, transfer_quasitriangular

__version__ = "0.1.0"
