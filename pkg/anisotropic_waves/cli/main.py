import argparse
from dataclasses import replace
import logging
import sys

from .commands import cmd_classify, cmd_modes, cmd_propagate, cmd_sweep, cmd_verify
from .config import OutputFormat, RunConfig, SweepConfig
from .output import write_table
from ..oracle import OracleTolerances
from ..misc import AnisotropicWavesError, ConfigError
from ..version import __version__

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_NUMERIC_ERROR = 3
EXIT_VERIFICATION_FAILED = 4


def create_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Path to the JSON run configuration")
    common.add_argument("--out", help="Output file (default: standard output)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], help="Output format (default: csv)")
    common.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")

    parser = argparse.ArgumentParser(
        prog="anisotropic-waves",
        description="Plane-wave propagation in anisotropic media with loss or gain",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  anisotropic-waves classify --config example/configs/example1_quasi.json
  anisotropic-waves propagate --config example/configs/example3.json --t-max 20 --dt 0.1 --out fields.csv
  anisotropic-waves sweep --config example/configs/example1_pseudo.json --param beta --range=-1:1:0.25
  anisotropic-waves verify --seed 0 --instances 10
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command")

    subparsers.add_parser("classify", parents=[common], help="Classify the wave operator of a medium")
    subparsers.add_parser("modes", parents=[common], help="List the time-harmonic plane-wave modes")

    propagate = subparsers.add_parser("propagate", parents=[common], help="Evolve the fields over a time grid")
    propagate.add_argument("--t-max", type=float, help="Last sampled time")
    propagate.add_argument("--dt", type=float, help="Sampling step")

    verify = subparsers.add_parser("verify", parents=[common], help="Cross-check the closed forms with the oracles")
    verify.add_argument("--seed", type=int, help="Seed of the random media (default: 0)")
    verify.add_argument("--instances", type=int, help="Number of random media (default: 10)")
    verify.add_argument("--tolerance-scale", type=float, default=1.0, help=argparse.SUPPRESS)

    sweep = subparsers.add_parser("sweep", parents=[common], help="Classify the medium over a parameter range")
    sweep.add_argument("--param", help="Parameter to sweep, with an optional .re or .im suffix")
    sweep.add_argument("--range", help="LO:HI:STEP, both ends included")

    return parser


def _load_config(args: argparse.Namespace) -> RunConfig:
    if args.config is None:
        raise ConfigError(f"The {args.command} command needs --config")
    config = RunConfig.load(args.config)
    overrides = {}
    if args.out is not None:
        overrides["out"] = args.out
    if args.format is not None:
        overrides["format"] = OutputFormat(args.format)
    for name in ("t_max", "dt", "seed", "instances"):
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    return replace(config, **overrides)


def _run(args: argparse.Namespace) -> int:
    if args.command == "verify":
        if args.config is not None:
            config = _load_config(args)
            seed, instances, out, output_format = config.seed, config.instances, config.out, config.format
        else:
            seed = 0 if args.seed is None else args.seed
            instances = 10 if args.instances is None else args.instances
            out, output_format = args.out, OutputFormat(args.format or "csv")
        base = OracleTolerances()
        tolerances = OracleTolerances(
            series=base.series * args.tolerance_scale,
            rk4=base.rk4 * args.tolerance_scale,
            quadrature=base.quadrature * args.tolerance_scale,
        )
        table, passed = cmd_verify(seed, instances, tolerances)
        write_table(table, output_format, out)
        if not passed:
            _logger.error(f"Verification failed: {table.metadata}")
            return EXIT_VERIFICATION_FAILED
        return EXIT_OK

    config = _load_config(args)
    if args.command == "sweep":
        if args.param is not None or args.range is not None:
            if args.param is None or args.range is None:
                raise ConfigError("--param and --range go together")
            linked = config.sweep.linked if config.sweep is not None else {}
            sweep = SweepConfig.from_range(args.param, args.range, linked)
        elif config.sweep is not None:
            sweep = config.sweep
        else:
            raise ConfigError("The sweep command needs --param and --range, or a sweep section")
        table = cmd_sweep(config, sweep)
    else:
        command_map = {"classify": cmd_classify, "propagate": cmd_propagate, "modes": cmd_modes}
        table = command_map[args.command](config)
    write_table(table, config.format, config.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_CONFIG_ERROR

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    )

    try:
        return _run(args)
    except ConfigError as e:
        _logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG_ERROR
    except (AnisotropicWavesError, ArithmeticError) as e:
        if isinstance(e, ValueError):
            _logger.error(f"Invalid input: {e}")
            return EXIT_CONFIG_ERROR
        _logger.error(f"Numerical failure: {e}")
        return EXIT_NUMERIC_ERROR
    except ValueError as e:
        _logger.error(f"Invalid input: {e}")
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
