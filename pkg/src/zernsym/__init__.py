"""Symbolic and numeric tools for Zernike circular polynomials.

Index conversion (Noll / Born-Wolf / ANSI), exact radial coefficients,
expression emitters for LaTeX and plain text, numerical evaluation and
LaTeX longtable generation.
"""

from .coefficients import (
    AngularFactor,
    Normalization,
    RadialPoly,
    ZernikeSpec,
    binom_exact,
    binom_real,
    normalization_radicand,
    radial_coefficients,
    radial_coefficients_oracle,
    zernike_spec,
)
from .evaluation import QuadratureConfig, eval_radial, eval_zernike, gram_matrix, inner_product
from .indexing import (
    BoundError,
    BwIndex,
    NegativeDegreeError,
    NollRangeError,
    ParityError,
    ZernikeIndexError,
    ansi_to_nm,
    j_to_nm,
    legacy_j_to_nm,
    nm_to_ansi,
    nm_to_j,
    nm_to_k,
    validate_nm,
)
from .symbolic import CODE, LATEX, PLAIN, SyntaxProfile, emit_zernike, render
from .tablegen import TableSpec, gen_document, gen_long_table, gen_table_line

__version__ = "0.1.0"
