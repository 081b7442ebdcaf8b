"""Exact computer algebra for partial group and Hopf actions.

Constructs partial actions of finite groups (and their group-algebra lifts)
on finite-dimensional structure-constant algebras over exact fields, builds
the twisted group ring and its smash product with the dual group algebra,
and machine-verifies the matrix duality layer: kernel and image formulas,
the corner splitting, separability of the smash over the twisted ring, and
the partial-Hopf analogue.
"""

from .actions import (PartialAction, dot_identities_report, global_action,
                      make_partial_action, restrict_global, trivial_from_split)
from .algebras import (AlgebraElement, AlgebraMap, StructureAlgebra,
                       center_basis, direct_product, dual_group_algebra,
                       field_algebra, group_algebra, ideal_basis,
                       is_central_idempotent, make_algebra, matrix_algebra,
                       product_of_fields, tensor_algebra)
from .duality import (DualityData, build_duality, corner_report,
                      decomposition_report, kernel_report, separability_report,
                      skew_injectivity_report)
from .fields import GF, QQ, parse_field
from .groups import FiniteGroup, cyclic, make_group, symmetric
from .hopf import (HopfData, PartialHopfAction, build_corner_maps,
                   build_partial_smash, build_representations, dual_hopf,
                   group_hopf, hit, hit_left, hit_right, lift_group_action,
                   make_hopf, make_partial_hopf_action)
from .linalg import Mat, Subspace, image_basis, kernel_basis, solve
from .report import CheckResult, Report, emit_report, parse_structured
from .scenarios import run_scenario
from .skew import SkewGroupRing, build_skew, grading_report, strong_grading_test
from .smash import SmashAlgebra, build_smash

__version__ = "0.1.0"
