# Standard library
from argparse import ArgumentParser
import json

# Third party
import linkforge as lf
from linkforge.energy import borromean_ratio_to_20pi2


parser = ArgumentParser()
parser.add_argument("energy", choices=["mobius", "md"])
parser.add_argument("--out", help="JSON file for the minimized parameters.")
args = parser.parse_args()

if args.energy == "mobius":
    shapes = ["ellipse", "stadium", "squircle", "rounded-rectangle"]
else:
    shapes = ["rectangle", "ngon", "decagon"]

results = {}
for shape in shapes:
    spec = lf.load_family(f"borromean-{shape}")
    result = lf.minimize_family(spec, args.energy, spec.defaults)
    link = spec.build(result.params_opt, validate=False)
    report = lf.load_energy(args.energy)(link)
    results[shape] = result.to_dict()
    results[shape]["cross_over_20pi2"] = borromean_ratio_to_20pi2(report)
    print(f"{shape:20s}{result.energy_opt:12.4f}  {result.params_dict()}")

if args.out:
    with open(args.out, "w") as f:
        json.dump(results, f, indent=2)
