# Standard library
from argparse import ArgumentParser

# Third party
import linkforge as lf
from linkforge.analysis import chain_width, layer_scaling


parser = ArgumentParser()
parser.add_argument("max_layers", type=int, choices=[1, 2, 3, 4])
parser.add_argument("--max-evals", type=int, default=20000)
args = parser.parse_args()

config = lf.OptimizerConfig(xtol=1e-6, max_evals=args.max_evals)
for layers in range(1, args.max_layers + 1):
    spec = lf.load_family("chain-layered", layers=layers)
    result = lf.minimize_family(spec, "md", spec.defaults, config)
    link = spec.build(result.params_opt)
    scaling = layer_scaling(result)
    print(
        f"{2 * layers + 1} components: energy {result.energy_opt:.2f}, "
        f"width {chain_width(link):.3f}, "
        f"linear ratios {[round(r, 3) for r in scaling.linear_ratios]}"
    )
