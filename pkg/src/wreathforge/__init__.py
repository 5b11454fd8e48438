"""Exact verification of crossed-product structure on a pair of objects B, F:
string-diagram identities evaluated as exact matrix equations over the
rationals or a prime field, construction of the composite bialgebra on FB,
and signature-based classification."""

from .catalog import (
    ALPHA_PARTNERS,
    CATALOG_VERSION,
    TRIVIALITY_COLLAPSE,
    Axiom,
    CheckResult,
    SuiteReport,
    axiom_by_id,
    check_axiom,
    run_all,
    run_suite,
    suites,
)
from .catalog import catalog as axiom_catalog
from .classify import ClassificationReport, Signature, classify, signature_of
from .diagram import (
    EvalContext,
    Generator,
    Horizontal,
    Identity,
    Vertical,
    evaluate,
    from_sexpr,
    gen,
    horiz,
    ident,
    mirror,
    to_sexpr,
    vert,
)
from .exact import (
    BoundaryMismatch,
    DimensionCapExceeded,
    FieldSpec,
    LinearMap,
    ObjectSpace,
    SchemaError,
    UnknownGenerator,
    compose,
    equal,
    first_difference,
    identity_map,
    juxtapose,
)
from .library import (
    BadCharacteristic,
    GroupPresentation,
    NotAGroup,
    ZeroCocycleValue,
    bicrossproduct_s3,
    cyclic_group,
    example,
    klein_four_group,
    quaternion_cocycle,
    radford_h4,
    smash_product_s3,
    trivial,
    trivial_c2xc2,
    twisted_group_algebra,
)
from .model import (
    DerivedGenerators,
    HopfDatumModel,
    IndexOutOfRange,
    extract_actions,
)
from .product import ProductStructure, build_product

__all__ = [name for name in dir() if not name.startswith("_")]
