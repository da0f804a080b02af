"""Exact structure-constant computations for finite-dimensional bialgebras and Hopf algebras."""

from .axioms import (
    AxiomReport,
    verify_all,
    verify_antipode,
    verify_associativity,
    verify_coassociativity,
    verify_counit,
    verify_counit_compat,
    verify_green_compat,
    verify_unit,
    verify_unit_compat,
)
from .base_change import (
    NotRepresentable,
    TransitionData,
    congruence_diagonalize,
    gram_factorize,
    normalize_to_FeqG,
    transform_F,
    transform_G,
    transform_presentation,
    transport_witness,
)
from .catalog import (
    AbelianGroupSpec,
    group_algebra,
    group_selfdual_witness,
    taft,
    taft2_witness,
    tensor_with_dual,
)
from .duality import (
    DualityWitness,
    dualize,
    selfduality_reports,
    verify_selfdual_algebra,
    verify_selfdual_coalgebra,
)
from .errors import (
    ConstructionError,
    FieldMismatchError,
    HopfError,
    HypothesisError,
    ParseError,
    SingularMatrixError,
)
from .fileformat import PresentationFile, dumps, load, loads, save
from .ihopf import (
    IAlgebra,
    i_construct_general,
    i_construct_scaled,
    i_construct_simple,
    is_commutative,
    verify_cyclic_witness,
)
from .presentation import BialgebraPresentation, StructureTensor, element_power, multiply
from .render import render_table
from .scalars import (
    QQ,
    CyclotomicField,
    PrimeField,
    RationalField,
    Scalar,
    field_from_text,
    root_of_unity,
    scalar_sqrt,
)

__version__ = "0.1.0"
