"""quandlekit: finite quandles from finite groups.

Construct conjugation, core, dihedral, Alexander, and verbal quandles from
group multiplication tables; enumerate automorphisms and antiautomorphisms
of both structures; and mechanically verify the structure theorems that
relate them, over a catalog of small groups.
"""

from . import config
from .errors import (
    BadShape,
    CapExceeded,
    CarrierMismatch,
    CompatibilityFail,
    ConstructionSpecError,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotAutomorphism,
    NotBijective,
    NotClosed,
    NotNormal,
    NotSubgroup,
    ParseError,
    Q1Fail,
    Q2Fail,
    Q3Fail,
    QuandleAxiomError,
    QuandleKitError,
    TooLarge,
    WrongMapKind,
)
from .groups import (
    FiniteGroup,
    Subset,
    cyclic,
    dihedral,
    direct_product,
    group_from_table,
    group_from_text,
    group_to_text,
    heisenberg,
    named_group,
    opposite,
    quaternion8,
    quotient_by_normal,
    symmetric,
)
from .groupmaps import (
    AUTOMORPHISM,
    ANTIAUTOMORPHISM,
    PLAIN,
    ClassifiedMap,
    PointMap,
    aut_oracle,
    build_F,
    build_F_prime,
    build_H,
    centralizer_in_aaut,
    centralizer_in_aut,
    classify,
    closure_of_point_maps,
    enumerate_aaut,
    enumerate_aut,
    f_ab,
    fix_set,
    inner_auts,
    inversion_map,
    is_central_automorphism,
    left_translation,
    out_coset_reps,
    verify_F_iso,
)
from .quandles import (
    Quandle,
    are_isomorphic,
    dual,
    inn_group,
    is_cocommutative,
    is_commutative,
    is_involutory,
    quandle_from_table,
    quandle_from_text,
    quandle_to_text,
    right_translation,
    trivial,
)
from .constructions import (
    ConstructionSpec,
    alex,
    build,
    conj_m,
    core,
    dihedral_quandle,
    p1,
    p2,
    p3,
    p4,
    q1,
    q2,
    q3,
    q4,
    spec_from_string,
)
from .quandlemaps import (
    QuandleMap,
    SemidirectReport,
    closure_group,
    enumerate_quandle_antis,
    enumerate_quandle_auts,
    find_table_iso,
    induced,
    inn_out_report,
    is_quandle_anti,
    is_quandle_auto,
    quandle_anti_oracle,
    quandle_aut_oracle,
    semidirect_verify,
)
from .verdicts import (
    REPORT_SCHEMA,
    REPORT_VERSION,
    Verdict,
    report_json,
    summarize,
)
from .harness import (
    CATALOG_SPECS,
    CHECK_IDS,
    default_catalog,
    run_census,
    run_check,
)

__version__ = "1.0.0"
