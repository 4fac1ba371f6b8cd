"""Random quantified xor formulas: generation, decision, threshold curves.

The package generates random closed formulas of the shape
``forall X exists Y (conjunction of xor clauses)``, decides them with
three independent engines (staged Gaussian elimination, a parity-labelled
union-find over the clause graph when each clause has two existential
variables, and an exhaustive oracle at toy sizes), evaluates the limiting
truth-probability curves, and runs reproducible Monte Carlo sweeps along
the clause-density axis.
"""

from ._kernels import backend_name
from .errors import CapabilityError, InputError, ParseError, QxorError
from .exp import (
    CurvePoint,
    MMode,
    SweepConfig,
    compare,
    render_svg,
    resolve_engine,
    run_sweep,
    run_sweep_matched,
    wilson_ci,
)
from .gen import GenConfig, clause_space_size, derive_seed, generate
from .gf2 import BitMatrix, consistent, image_contains, is_full_row_rank, rank
from .graph2 import (
    CycleStats,
    EdgeLabel,
    ParityForest,
    cycle_stats,
    decide_qxor_graph,
    is_acyclic,
)
from .model import Clause, QxorInstance, parse, serialize, to_matrices
from .solver import (
    Verdicts,
    analyze,
    brute_force_decide,
    decide_maxrank,
    decide_qxor,
    decide_xorsat,
)
from .theory import (
    DensityGrid,
    TheoryCurve,
    h_0,
    h_1,
    h_inf,
    h_m,
    lambda_11,
    lambda_inf,
    lambda_m1,
    tabulate,
)

__version__ = "0.1.0"
