"""fluctuverse: units-aware verification engine for a fluctuational-cosmology model.

Every quantitative relation of the model is encoded as an executable,
dimensionally-checked assertion over a CGS-Gaussian constants registry;
the particle-creation law is integrated over cosmic time; and the
Compton-scale (quark) and Planck-scale (Big Bang) limits are reproduced
as order-of-magnitude checks.
"""

from .errors import (
    DimensionMismatchError,
    DivisionByZeroError,
    DomainError,
    DuplicateIdError,
    EmptySeriesError,
    FluctuverseError,
    InsufficientSamplesError,
    InvalidStepsError,
    LexError,
    NegativeTimeError,
    ParseError,
    QuantityOverflowError,
    SealedRegistryError,
    UnknownIdentifierError,
    UnsupportedDimensionError,
)
from .evolution import (
    CosmoParams,
    EpochState,
    Variant,
    check_expansion,
    evolve,
    present_epoch,
    sqrtN_closed,
    states_to_csv,
    states_to_records,
)
from .planck_law import (
    SpectrumForm,
    WienVerdict,
    classify_law,
    mean_mode_energy,
    wien_scaling_residual,
)
from .quantity import (
    DIMENSIONLESS,
    LENGTH,
    MASS,
    TEMPERATURE,
    TIME,
    Dimension,
    Quantity,
    agree_within,
    decades_deviation,
    parse_unit_text,
)
from .registry import ConstantsRegistry, load_constants
from .relations import (
    BinOp,
    Comparator,
    Func,
    Ident,
    Number,
    Pow,
    Relation,
    RelationResult,
    check_relation,
    eval_expr,
    infer_dimension,
    load_default_corpus,
    parse,
    parse_expr,
    parse_relation_expr,
    parse_relation_file,
    pretty,
    tokenize,
)
from .scales import (
    ClosureVerdict,
    PlanckBookkeeping,
    PlanckScales,
    PotentialTerms,
    characteristic_energy_scale,
    compton_length,
    compton_time,
    fractional_charge,
    pion_gravitational_closure,
    planck_bookkeeping,
    planck_scales,
    qcd_potential,
    quark_coupling,
    quark_mass_estimate,
    schwarzschild_radius,
    self_gravity_energy,
    self_gravity_length,
)

__version__ = "0.1.0"
