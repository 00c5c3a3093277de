"""Numerical laboratory for operator-valued Fourier norm inequalities on
finite abelian groups: exact group models, Schatten-norm calculus, the
operator transform with its Parseval identity, an inequality catalog, and
extremal-ratio search."""

from .extremal import SearchConfig, SearchResult, classify_extremal, maximize_ratio, ratio_objective
from .groups import (
    Character,
    FiniteAbelianGroup,
    GridModel,
    GroupElement,
    PAdicModel,
    char_eval,
    frac_part,
    inversion_defect,
    make_grid,
    make_group,
    make_padic,
    padic_fractional_part,
    parse_group_spec,
)
from .inequalities import (
    CLARKSON_VARIANTS,
    InequalityReport,
    check_bhatia_kittaneh,
    check_clarkson,
    check_hausdorff_young,
    check_main,
    check_main_sup,
    check_weighted,
    conjugate_exponent,
)
from .sampling import random_field, random_spd, random_unitary, trial_rng
from .schatten import (
    WeightPair,
    check_positive,
    gamma_path,
    matrix_power,
    schatten_norm,
    singular_values,
    weighted_norm,
)
from .transform import (
    DualOperatorField,
    OperatorField,
    bochner_linearity_defect,
    fourier_transform,
    fourier_transform_fast,
    parseval_defect,
)

__version__ = "0.1.0"
