"""NFS polynomial selection: methods, scoring, and norm estimation."""

from .alpha import alpha
from .estimator import (
    NormEstimate,
    estimate_norms,
    table_mnt3_rows,
    table_mnt4_rows,
)
from .fdb import DEFAULT_BOUNDS, FCandidate, FCandidateDb, build_f_db
from .methods import (
    DEFAULT_FAMILY,
    GaloisFamily,
    PairScores,
    PolyPair,
    canonical_orbit,
    canonical_pair,
    conjugation_f,
    conjugation_select,
    count_jp_candidates,
    galois_orbit_map,
    gjl_select,
    hybrid_jp_f,
    hybrid_jp_select,
    jlsv1_select,
    jlsv2_select,
    make_pair,
    quadratic_roots_mod,
)
from .murphy import MurphyRegion, murphy_e, murphy_e_at_skew

__all__ = [
    "alpha",
    "murphy_e",
    "murphy_e_at_skew",
    "MurphyRegion",
    "NormEstimate",
    "estimate_norms",
    "table_mnt3_rows",
    "table_mnt4_rows",
    "FCandidateDb",
    "FCandidate",
    "build_f_db",
    "DEFAULT_BOUNDS",
    "PolyPair",
    "PairScores",
    "GaloisFamily",
    "DEFAULT_FAMILY",
    "make_pair",
    "conjugation_f",
    "conjugation_select",
    "hybrid_jp_f",
    "hybrid_jp_select",
    "count_jp_candidates",
    "gjl_select",
    "jlsv1_select",
    "jlsv2_select",
    "galois_orbit_map",
    "canonical_pair",
    "canonical_orbit",
    "quadratic_roots_mod",
]
