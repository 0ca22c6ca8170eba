"""hanoihash: a quantum-walk hash function on the degree-4 Hanoi network.

A message steers a discrete-time coined quantum walk — each bit (or bit
pair) selects which coin and shift operator to apply — and the final vertex
probability distribution, quantized vertex by vertex, is the digest.  The
package bundles the walk engine, the digest pipeline, a statistical
evaluation lab (diffusion, uniformity, collision, scaling, sensitivity) and
a CLI front end.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .bits import as_bit_array, bits_from_text, bits_to_text, message_to_bits
from .hashing import Digest, digest, format_hex, quantize
from .params import (
    ControlMode,
    CoinSpec,
    HashParams,
)
from .statlab import (
    CampaignConfig,
    CollisionReport,
    DiffusionReport,
    PerturbKind,
    ScalingReport,
    SensitivityReport,
    UniformityReport,
    birthday_bound,
    collision_test,
    diffusion_test,
    flip_random_bit,
    hamming,
    perturb,
    random_message,
    scaling_experiment,
    sensitivity_suite,
    theoretical_collision,
    theoretical_pair_collision_rate,
    uniform_distribution_test,
)
from .topology import Topology, build_topology
from .walk import (
    WalkEngine,
    cycle_walk_baseline,
    evolve,
    get_engine,
    grover_coin,
    initial_state,
    step,
    vertex_probabilities,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    "as_bit_array",
    "bits_from_text",
    "bits_to_text",
    "message_to_bits",
    "Digest",
    "digest",
    "format_hex",
    "quantize",
    "ControlMode",
    "CoinSpec",
    "HashParams",
    "CampaignConfig",
    "CollisionReport",
    "DiffusionReport",
    "PerturbKind",
    "ScalingReport",
    "SensitivityReport",
    "UniformityReport",
    "birthday_bound",
    "collision_test",
    "diffusion_test",
    "flip_random_bit",
    "hamming",
    "perturb",
    "random_message",
    "scaling_experiment",
    "sensitivity_suite",
    "theoretical_collision",
    "theoretical_pair_collision_rate",
    "uniform_distribution_test",
    "Topology",
    "build_topology",
    "WalkEngine",
    "cycle_walk_baseline",
    "evolve",
    "get_engine",
    "grover_coin",
    "initial_state",
    "step",
    "vertex_probabilities",
]
