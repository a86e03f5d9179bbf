"""Wave-packet dynamics of interacting cold atoms in driven tilted
optical lattices: mean-field DNLSE integration, closed-form oracles,
ensembles, and figure-reproduction presets."""

__version__ = "0.1.0"

from . import (bessel, engine, ensemble, errors, experiments, model, oracle,
               seriesio)
from .bessel import bessel_j, bessel_j_all
from .engine import IntegratorConfig, Trajectory, energy, evolve, step
from .ensemble import (EnsembleConfig, FitResult, ObservableSeries,
                       fit_subdiffusion, moments, run_ensemble,
                       series_from_trajectory, suppression_coefficient)
from .experiments import (PRESETS, ScanConfig, amplitude_scan, frequency_scan,
                          run_preset, write_scan)
from .seriesio import (read_density, read_series, read_sidecar, write_density,
                       write_series, write_sidecar)
from .errors import (BadTruncation, ConfigError, EdgeContamination,
                     GridMismatch, NotNormalized, NumericalGuard, OutOfRange,
                     StepUnstable, TiltlatError, UnknownPreset,
                     WindowTooNarrow, WindowTooShort, ZeroTilt)
from .model import (LatticeParams, LatticeState, WavePacketSpec, auto_window,
                    make_coherent, make_incoherent_realization, make_packet)
from .oracle import (ChiValue, EffectiveModel, ballistic_width, bo_center,
                     breathing_width, chi, converged_n_max, driven_center,
                     driven_width, effective_model, wannier_stark_state,
                     ws_dipole_element)
