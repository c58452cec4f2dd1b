"""redspectra: reduced Beurling / Carleman / Laplace / weak-Laplace spectra
of sampled vector-valued signals, detectors for asymptotic function
classes, and an executable verification suite for the spectral-inclusion
and tauberian statements they satisfy."""

from .config import Config, DEFAULT
from .signals import (Domain, ExtendedSignal, Mean, SampledSignal, convolve,
                      difference, extend_by_zero, indefinite_integral,
                      modulate, mollify, reflect, translate)
from .kernels import (BoxKernel, ExpKernel, TestKernel, annihilator_kernel,
                      approximate_identity, bandpass_kernel, box_kernel,
                      bump_kernel, d_bump, exp_kernel, wiener_divide)
from .classes import (BohrCoefficient, ClassReport, FunctionClass, Tri,
                      ap_decompose, bohr_coefficient, detect, ergodic_mean,
                      is_c0, is_slowly_oscillating, tail_sup, uc_modulus)
from .transforms import (HalfPlaneGrid, carleman_transform, half_plane_scan,
                         laplace_transform)
from .spectra import (FrequencyGrid, RegStatus, RegularityCertificate,
                      SpectrumEstimate, beurling_spectrum, carleman_spectrum,
                      laplace_spectrum, reduced_spectrum, test_regular,
                      weak_laplace_spectrum)
from .theorems import (CheckResult, CheckStatus, EvolutionProblem,
                       check_evolution_spectrum, check_inclusion_chain,
                       check_tauberian, evolution_residual, run_all,
                       solve_evolution)
from .corpus import CorpusSignal, build_corpus

__version__ = "0.1.0"
