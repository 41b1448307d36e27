# Standard library
from argparse import ArgumentParser

# Third party
import linkforge as lf
from linkforge.analysis import efficiency


parser = ArgumentParser()
parser.add_argument("--sizes", type=int, nargs="+", default=[2, 3, 4])
parser.add_argument("--minimize", action="store_true")
args = parser.parse_args()

for style in ("european", "japanese"):
    for size in args.sizes:
        spec = lf.load_family(f"chainmail-{style}", size=size)
        params = spec.defaults
        if args.minimize:
            params = lf.minimize_family(spec, "mobius", params).params_opt
        report = efficiency(spec.build(params))
        print(
            f"{style:10s}{size:3d}  linkages {report.n_linkages:3d}  "
            f"ratio {report.ratio:.4f}  total ratio {report.total_ratio:.4f}"
        )
