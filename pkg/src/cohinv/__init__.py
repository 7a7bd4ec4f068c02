"""Exact mod-2 cohomological invariants of even-genus hyperelliptic curves
over Q: symbol arithmetic with a complete zero decision, trace forms of etale
algebras, Stiefel-Whitney classes, and the curve-level invariants."""

from .errors import (
    BaseMismatch,
    CohinvError,
    DegenerateForm,
    EmptyCorpus,
    FactorizationFailure,
    GenerationFailure,
    IndexOutOfRange,
    NotEtale,
    NotSquarefree,
    OddGenusUnsupported,
    OutsideU0,
    PointOnWeierstrassDivisor,
    SingularMatrix,
    SpecializationAtPole,
    UnknownSuite,
    ZeroElement,
)
from .kcohomology import (
    BASE_Q,
    BASE_QT,
    GradedClass,
    LinearFactorElement,
    Place,
    REAL,
    SquareClass,
    Symbol,
    class_add,
    class_mul,
    classes_equal,
    hilbert_symbol,
    is_zero,
    is_zero_fn,
    lfe,
    lift,
    render,
    residue_at,
    specialize,
    square_class,
    symbol,
    t_minus,
)
from .quadform import DiagonalForm, SymmetricForm, diagonalize, sw_class, sw_total
from .etale import EtaleAlgebra, algebra_product, alpha, is_etale, trace_gram
from .hyperell import (
    BinaryForm,
    Matrix2,
    ProjectivePoint,
    beta,
    curve_alpha,
    default_beta_point,
    eval_at_point,
    gl2_act,
    m_overlap,
    smooth_check,
    tau,
    weierstrass_algebra,
)
from .localsolve import hilbert_symbol_oracle
from .harness import (
    Config,
    CurveRecord,
    SUITE_NAMES,
    SuiteReport,
    ingest_corpus,
    ingest_corpus_report,
    random_form,
    run_suite,
)

__version__ = "0.1.0"
