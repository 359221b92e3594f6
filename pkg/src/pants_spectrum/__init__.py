"""Geodesic length spectra of cyclic words on the hyperbolic pair of pants.

The pipeline is

    boundary lengths (A, B, C)
        -> half traces (x, y, z)
        -> reflection-line endpoints (alpha, beta, gamma)
        -> generator matrices
        -> geodesic length of every cyclically reduced word

plus the counting, enumeration and sampling of words of a fixed word length
and the statistics used to look at how the lengths are distributed.
"""

__version__ = "0.1.0"

from .errors import PantsSpectrumError
from .words import (
    Letter,
    CyclicWord,
    WordPopulation,
    validate,
    parse_word,
    canonical_form,
    count_strings,
    count_classes,
    enumerate_classes,
    enumerate_class_codes,
    sample_word,
    sample_codes,
)
from .moduli import (
    BoundaryLengths,
    HalfTraces,
    FenchelParams,
    GeneratorRep,
    half_traces,
    fenchel_params,
    generator_matrices,
    representation,
)
from .geometry import (
    LogMatrix,
    GeodesicLength,
    log_product,
    geodesic_length,
    length_direct,
    batch_lengths,
)
from .stats import (
    LengthSample,
    SummaryStats,
    ScalingEstimate,
    Histogram,
    summarize,
    estimate_scaling,
    histogram,
    comb_score,
    freedman_diaconis_width,
)
from .experiment import ExperimentConfig, ExperimentResult, run, sweep, block_seed, derive_seed
from .report import emit_svg, render_svg, histogram_csv, read_histogram_csv
