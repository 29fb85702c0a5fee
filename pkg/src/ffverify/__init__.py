"""Exact verification of finite-field point counts, fixed point
formulas, exact character arithmetic and theta correspondence tables."""

from .fields import (ArtinSchreierExtension, FieldElement, FieldError,
                     TowerContext, build_tower)
from .cyclotomic import (AdditiveCharacter, CentralCharacter, CycError,
                         CycNumber, conductor, gauss_sum, nu_character,
                         nu_sign)
from .varieties import (BudgetExceededError, VarietySpec, count_points,
                        count_points_naive, counts_to_csv,
                        dickson_sl2_quotient_count, dickson_u_quotient_count)
from .fixed_points import (EndoSpec, FixedPointReport,
                           blind_fixed_point_count, closed_form_fixed_count,
                           differential_vanishes, fixed_points_surface)
from .traces import (averaged_unipotent_trace,
                     character_difference_at_unipotent,
                     expected_character_difference, sheaf_trace_A2)
from .characters import (CharacterError, CharacterTable, DihedralClass,
                         DihedralIrrep, IsotypicLabel, brauer_decompose,
                         brauer_irreps, conjugacy_classes,
                         dim_mod_ell_unitary, dim_v_isotypic,
                         dim_w_isotypic, ell_parts, ell_regular_classes,
                         o_minus_table, ordinary_irreps)
from .howe import (HoweEntry, HoweTable, compare_semisimplifications,
                   report_to_markdown, theta_mod_ell, theta_ordinary,
                   verify_all)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
