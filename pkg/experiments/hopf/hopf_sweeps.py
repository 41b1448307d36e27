# Standard library
from argparse import ArgumentParser
import math

# Third party
from linkforge.cli.sweep import SweepSpec, run_sweep


parser = ArgumentParser()
parser.add_argument("out_dir")
parser.add_argument("--vertices", type=int, default=360)
parser.add_argument("--steps", type=int, default=60)
args = parser.parse_args()

# Separation of two unit circles, then radius ratio at the optimal separation
delta_sweep = SweepSpec(
    "hopf-circles",
    "mobius",
    "delta",
    0.3,
    1.95,
    args.steps,
    n_vertices=args.vertices,
)
run_sweep(delta_sweep, f"{args.out_dir}/hopf_delta.csv")

alpha_sweep = delta_sweep.create_copy(
    {"param": "alpha", "lo": 0.5, "hi": 2.0, "fixed": {"delta": math.sqrt(2.0)}}
)
run_sweep(alpha_sweep, f"{args.out_dir}/hopf_alpha.csv")

# Two squares under the MD energy
square_sweep = delta_sweep.create_copy(
    {
        "family": "hopf-polygons",
        "energy": "md",
        "options": {"n_sides": 4},
        "n_vertices": None,
    }
)
run_sweep(square_sweep, f"{args.out_dir}/square_hopf_delta.csv")
