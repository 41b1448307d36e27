# Standard library
from argparse import ArgumentParser, Namespace
import inspect
import json
import logging
import math
import sys
from typing import Any, Dict, List, Optional, Sequence

# Local application
from ..energy import ENERGY_REGISTRY, energy_both
from ..exceptions import DivergenceError, TopologyError
from ..families import FAMILY_REGISTRY, FamilySpec
from ..geometry import load_link, raw_linking_matrix, save_link
from ..optimize import OptimizerConfig, minimize_family, topology_fingerprint
from ..utils import configure_threads, load_experiment, load_family
from .experiments import EXPERIMENT_REGISTRY
from .sweep import SweepSpec, run_sweep

# Third party
import numpy as np

logger = logging.getLogger("linkforge")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DIVERGENCE = 3
EXIT_TOPOLOGY = 4

# Linking sums further than this from an integer are reported as suspicious
NEAR_RESOLUTION = 0.01

# CLI flag -> family option
FAMILY_OPTION_FLAGS = {
    "size": "size",
    "sides": "n_sides",
    "components": "components",
    "shape": "shape",
    "tilt": "tilt",
    "layers": "layers",
    "p": "p",
    "q": "q",
}


class UsageError(RuntimeError):
    pass


def _floats(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"Expected comma-separated numbers. Got {text!r}.") from None


def _fixed(items: Optional[Sequence[str]]) -> Dict[str, float]:
    fixed = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--fix takes name=value. Got {item!r}.")
        fixed[name.strip()] = _floats(value)[0]
    return fixed


def _family(args: Namespace) -> FamilySpec:
    """Loads ``args.family`` with the option flags it accepts. Passing an
    option the family does not take is a usage error."""
    if args.family not in FAMILY_REGISTRY:
        raise UsageError(
            f"{args.family} is not an implemented link family. "
            f"Choose from {', '.join(sorted(FAMILY_REGISTRY))}."
        )
    accepted = inspect.signature(FAMILY_REGISTRY[args.family]).parameters
    options: Dict[str, Any] = {}
    for flag, option in FAMILY_OPTION_FLAGS.items():
        value = getattr(args, flag, None)
        if value is None:
            continue
        if option not in accepted:
            raise UsageError(f"{args.family} does not take --{flag}.")
        options[option] = value
    return load_family(args.family, **options)


def _to_radians(spec: FamilySpec, names: Sequence[str], values: Sequence[float]):
    return [
        math.radians(v) if name in spec.angle_params else v
        for name, v in zip(names, values)
    ]


def _to_degrees(spec: FamilySpec, params: Dict[str, float]) -> Dict[str, float]:
    return {
        name: math.degrees(v) if name in spec.angle_params else v
        for name, v in params.items()
    }


def _emit(data: Any) -> None:
    print(json.dumps(data, indent=2))


def cmd_energy(args: Namespace) -> int:
    link = load_link(args.input)
    if args.energy == "both":
        reports = energy_both(link)
    else:
        reports = {args.energy: ENERGY_REGISTRY[args.energy](link)}
    for kind, report in reports.items():
        logger.info("%s energy: %.6f", kind, report.total)
    _emit({kind: report.to_dict() for kind, report in reports.items()})
    return EXIT_OK


def cmd_minimize(args: Namespace) -> int:
    spec = _family(args)
    fixed = _fixed(args.fix)
    x0 = _to_radians(spec, spec.param_names, _floats(args.x0))
    fixed = dict(zip(fixed, _to_radians(spec, list(fixed), list(fixed.values()))))
    config = OptimizerConfig(
        method=args.method,
        xtol=args.xtol,
        max_evals=args.max_evals,
        bracket=tuple(_floats(args.bracket)) if args.bracket else None,
    )
    result = minimize_family(spec, args.energy, x0, config, args.vertices, fixed)
    logger.info(
        "%s: energy %.6f after %d evaluations",
        spec.name,
        result.energy_opt,
        result.n_evals,
    )
    out = result.to_dict()
    out["params"] = _to_degrees(spec, out["params"])
    out["family"] = spec.name
    _emit(out)
    return EXIT_OK


def cmd_sweep(args: Namespace) -> int:
    spec = _family(args)
    lo, hi = _to_radians(spec, [args.param] * 2, [args.lo, args.hi])
    fixed = _fixed(args.fix)
    fixed = dict(zip(fixed, _to_radians(spec, list(fixed), list(fixed.values()))))
    sweep = SweepSpec(
        args.family,
        args.energy,
        args.param,
        lo,
        hi,
        args.steps,
        fixed,
        dict(spec.options),
        args.vertices,
    )
    rows = run_sweep(sweep, args.out or sys.stdout, progress=args.verbose)
    rejected = sum(1 for row in rows if math.isinf(row["energy"]))
    if rejected:
        logger.warning("%d of %d points were rejected.", rejected, len(rows))
    return EXIT_OK


def cmd_validate(args: Namespace) -> int:
    link = load_link(args.input, validate=False)
    raw = raw_linking_matrix(link)
    rounded = np.rint(raw)
    off = np.abs(raw - rounded)
    flagged = [
        {"pair": [link.label(i), link.label(j)], "sum": float(raw[i, j])}
        for i, j in link.pairs()
        if off[i, j] > NEAR_RESOLUTION
    ]
    for entry in flagged:
        logger.warning(
            "Linking sum %.4f for %s is not near an integer.",
            entry["sum"],
            entry["pair"],
        )
    _emit(
        {
            "labels": [link.label(i) for i in range(link.n_components)],
            "linking": rounded.astype(int).tolist(),
            "valences": np.count_nonzero(rounded, axis=1).tolist(),
            "near_resolution": flagged,
        }
    )
    return EXIT_OK


def cmd_reproduce(args: Namespace) -> int:
    if args.list:
        for name, experiment in EXPERIMENT_REGISTRY.items():
            print(f"{name:24s}{experiment.description}")
        return EXIT_OK
    if args.all:
        names = list(EXPERIMENT_REGISTRY)
    elif args.name:
        names = [args.name]
    else:
        raise UsageError("Give an experiment name, --all or --list.")
    experiments = []
    for name in names:
        try:
            experiments.append(load_experiment(name))
        except NotImplementedError as err:
            raise UsageError(str(err)) from None

    all_passed = True
    table = []
    print(
        f"{'experiment':24s}{'quantity':22s}{'expected':>14s}"
        f"{'obtained':>14s}{'tolerance':>12s}  status"
    )
    for experiment in experiments:
        logger.info("Running %s", experiment.name)
        _, rows = experiment.evaluate()
        for exp, obtained, passed in rows:
            all_passed &= passed
            status = "PASS" if passed else "FAIL"
            print(
                f"{experiment.name:24s}{exp.key:22s}{exp.expected:14.6g}"
                f"{obtained:14.6g}{exp.tolerance:12.3g}  {status}"
            )
            table.append(
                {
                    "experiment": experiment.name,
                    "key": exp.key,
                    "expected": exp.expected,
                    "obtained": obtained,
                    "tolerance": exp.tolerance,
                    "provenance": exp.provenance,
                    "passed": passed,
                }
            )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            json.dump(table, f, indent=2)
    return EXIT_OK if all_passed else EXIT_FAILED


def cmd_families(args: Namespace) -> int:
    schemas = []
    for name, factory in FAMILY_REGISTRY.items():
        spec = factory()
        schema = spec.schema()
        for param in schema["params"]:
            if param["unit"] == "deg":
                param["default"] = math.degrees(param["default"])
                param["bounds"] = [
                    None if b is None else math.degrees(b) for b in param["bounds"]
                ]
        schemas.append(schema)
    _emit(schemas)
    return EXIT_OK


def cmd_build(args: Namespace) -> int:
    spec = _family(args)
    params = list(spec.defaults)
    if args.params:
        given = _to_radians(spec, spec.param_names, _floats(args.params))
        params[: len(given)] = given
    link = spec.build(params, args.vertices)
    save_link(link, args.out)
    logger.info(
        "Wrote %s with %d components, linking %s",
        args.out,
        link.n_components,
        topology_fingerprint(link).tolist(),
    )
    return EXIT_OK


def _add_family_flags(parser: ArgumentParser) -> None:
    parser.add_argument("--family", required=True, help="Registered family name.")
    parser.add_argument("--size", type=int, help="Chainmail lattice side length.")
    parser.add_argument("--sides", type=int, help="Polygon side count.")
    parser.add_argument("--components", type=int, help="Number of components.")
    parser.add_argument("--shape", help="Component shape, e.g. circle or square.")
    parser.add_argument("--tilt", help="European chainmail tilt pattern.")
    parser.add_argument("--layers", type=int, help="Layers of a layered chain.")
    parser.add_argument("--p", type=int, help="Torus longitudinal winding.")
    parser.add_argument("--q", type=int, help="Torus meridional winding.")
    parser.add_argument("--vertices", type=int, help="Vertices per component.")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="linkforge",
        description="Möbius and minimum-distance energies of parameterized links.",
    )
    parser.add_argument("--verbose", "-v", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    energy = sub.add_parser("energy", help="Energy of a link file.")
    energy.add_argument("input")
    energy.add_argument("--energy", choices=["mobius", "md", "both"], default="both")
    energy.set_defaults(func=cmd_energy)

    minimize = sub.add_parser("minimize", help="Minimize a family's energy.")
    _add_family_flags(minimize)
    minimize.add_argument("--energy", choices=["mobius", "md"], default="mobius")
    minimize.add_argument(
        "--x0",
        required=True,
        help="Starting values of the leading parameters, comma-separated. "
        "Angles in degrees.",
    )
    minimize.add_argument(
        "--fix",
        action="append",
        help="name=value for a later parameter. Angles in degrees.",
    )
    minimize.add_argument(
        "--method", choices=["nelder_mead", "golden_section"], default="nelder_mead"
    )
    minimize.add_argument("--bracket", help="lo,hi for golden-section search.")
    minimize.add_argument("--xtol", type=float, default=1e-6)
    minimize.add_argument("--max-evals", type=int, default=2000)
    minimize.set_defaults(func=cmd_minimize)

    sweep = sub.add_parser("sweep", help="Energy along one parameter, as CSV.")
    _add_family_flags(sweep)
    sweep.add_argument("--energy", choices=["mobius", "md"], default="mobius")
    sweep.add_argument("--param", required=True)
    sweep.add_argument("--lo", type=float, required=True, help="Angles in degrees.")
    sweep.add_argument("--hi", type=float, required=True, help="Angles in degrees.")
    sweep.add_argument("--steps", type=int, default=100)
    sweep.add_argument("--fix", action="append")
    sweep.add_argument("--out", help="CSV file, stdout when omitted.")
    sweep.set_defaults(func=cmd_sweep)

    validate = sub.add_parser("validate", help="Linking matrix of a link file.")
    validate.add_argument("input")
    validate.set_defaults(func=cmd_validate)

    reproduce = sub.add_parser("reproduce", help="Run reference experiments.")
    reproduce.add_argument("name", nargs="?")
    reproduce.add_argument("--all", action="store_true")
    reproduce.add_argument("--list", action="store_true")
    reproduce.add_argument("--out", help="Write the table as JSON.")
    reproduce.set_defaults(func=cmd_reproduce)

    families = sub.add_parser("families", help="List link families as JSON.")
    families.set_defaults(func=cmd_families)

    build = sub.add_parser("build", help="Write a family member to a link file.")
    _add_family_flags(build)
    build.add_argument(
        "--params", help="Parameter values, comma-separated. Angles in degrees."
    )
    build.add_argument("--out", required=True)
    build.set_defaults(func=cmd_build)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code == 0 else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    logging.captureWarnings(True)
    try:
        configure_threads()
        return args.func(args)
    except DivergenceError as err:
        logger.error("Energy diverges: %s", err)
        return EXIT_DIVERGENCE
    except TopologyError as err:
        logger.error("Topology changed: %s", err)
        return EXIT_TOPOLOGY
    except (RuntimeError, NotImplementedError, TypeError, OSError) as err:
        logger.error("%s", err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
