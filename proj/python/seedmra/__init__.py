"""Seed-driven multiresolution analysis on the critical lattice.

Thin re-export of the compiled core. Everything lives in ``seedmra._core``;
this package exists so ``import seedmra`` works from both an installed wheel
and the build tree staging directory.
"""

from ._core import (  # noqa: F401
    CELL_WIDTH,
    CascadeResult,
    CheckOutcome,
    Diverged,
    Domain,
    FCoefficients,
    FilterSequence,
    KernelModel,
    KernelVariant,
    LatticeParams,
    MoncResult,
    NonSummable,
    OncResult,
    OverlapEntry,
    OverlapLattice,
    QuadSpec,
    QuadratureDivergence,
    SampledFunction,
    SeedFunction,
    SingularSymbol,
    SymbolGrid,
    TranslateCheck,
    UnsupportedOperation,
    cascade_scaling,
    check_monc,
    check_onc,
    check_r1,
    check_r2,
    check_r3,
    check_r4,
    check_translate_orthonormality,
    extract_filter,
    f_coefficients,
    inner_translate,
    kernel,
    mother_wavelet,
    ont_filter,
    ont_seed,
    overlap2d,
    overlap_lattice,
    overlap_table,
    preset_names,
    preset_note,
    reflect,
    sampled_integral,
    sampled_l2_norm_sq,
    symbol,
    wavefunction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
