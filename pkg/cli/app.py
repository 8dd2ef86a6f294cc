"""
Command-line application.
This module follows the Single Responsibility Principle by focusing
on argument handling, output and exit codes; the work is in ``commands``.
"""
import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config import ConfigManager
from exceptions import ConfigError, NetworkSyntaxError, RheoLabError
from models import SimRecord
from . import commands
from .csv_writer import write_csv
from .scenario import Scenario, load_scenario

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
SWEEP_COMMANDS = ("simulate3d", "simulate1d", "moduli")


class UsageErrorParser(argparse.ArgumentParser):
    """ArgumentParser reporting usage errors with exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_scenario_flags(parser: argparse.ArgumentParser, network: bool = False) -> None:
    parser.add_argument("--scenario", help="scenario file (key = value lines, or YAML)")
    parser.add_argument("--model", type=int, choices=(1, 2, 3, 4), help="3D model id")
    if network:
        parser.add_argument("--network", help="network text used instead of a model map")
    parser.add_argument("--params", help="parameter file or inline 'mu3=1,mu_p=1,...'")
    parser.add_argument("--protocol", help="rest | shear:rate=R | osc:gamma0=G,omega=W | "
                                           "step:gamma=G[,ramp=T] | uniaxial:rate=R")
    parser.add_argument("--t-end", dest="t_end", type=float)
    parser.add_argument("--dt", type=float)
    parser.add_argument("--record-every", dest="record_every", type=int)
    parser.add_argument("--ramp-time", dest="ramp_time", type=float)
    parser.add_argument("--out", help="output file (stdout when omitted)")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    parser = UsageErrorParser(prog="rheolab", description="Burgers-class viscoelastic model laboratory")
    parser.add_argument("--log-level", dest="log_level", default=None,
                        help="logging level on stderr (default from configuration)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=UsageErrorParser)

    p = sub.add_parser("simulate3d", help="integrate a 3D model, CSV of stress and energetics")
    _add_scenario_flags(p)
    p.add_argument("--stress-normalization", dest="stress_normalization", choices=("extra", "traceless"))

    p = sub.add_parser("simulate1d", help="integrate the 1D Burgers law, CSV t,eps,sigma")
    _add_scenario_flags(p, network=True)

    p = sub.add_parser("compile", help="reduce a network text to its transfer function")
    p.add_argument("text", nargs="?", help="network text; the model's canonical network when omitted")
    p.add_argument("--model", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--params")

    p = sub.add_parser("compare", help="3D model against its mapped Burgers law")
    _add_scenario_flags(p)
    p.add_argument("--amplitude", type=float, help="factor applied to the protocol's strain")
    p.add_argument("--compare-mode", dest="compare_mode", choices=("shear", "uniaxial"))

    p = sub.add_parser("moduli", help="storage and loss moduli, CSV omega,Gp,Gpp")
    _add_scenario_flags(p, network=True)
    p.add_argument("--omega", help="comma-separated angular frequencies")
    p.add_argument("--verify", action="store_true", default=None,
                   help="append moduli extracted from 3D oscillatory simulations")

    p = sub.add_parser("sweep", help="run scenario files concurrently")
    p.add_argument("scenarios", nargs="+", help="scenario files; 'command' selects "
                                                 + "/".join(SWEEP_COMMANDS))
    p.add_argument("--workers", type=int, default=None)
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    skip = {"command", "scenario", "log_level", "text", "scenarios", "workers"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def execute(command: str, scenario: Scenario, config_manager: Optional[ConfigManager] = None) -> str:
    """
    Run a CSV-producing command and write its output.

    Returns:
        str: The CSV text
    """
    if command == "simulate3d":
        records = commands.cmd_simulate3d(scenario, config_manager)
        return write_csv(scenario.out, SimRecord.csv_header(), commands.simulate3d_rows(records))
    if command == "simulate1d":
        return write_csv(scenario.out, ("t", "eps", "sigma"), commands.cmd_simulate1d(scenario))
    if command == "moduli":
        header, rows = commands.cmd_moduli(scenario, config_manager)
        return write_csv(scenario.out, header, rows)
    raise ConfigError(f"command must be one of {', '.join(SWEEP_COMMANDS)} (got {command!r})")


def run_scenario_file(path: str) -> Tuple[str, int, str]:
    """
    Run one sweep entry.

    The command comes from the file's ``command`` key (simulate3d by
    default); without ``out`` the CSV goes next to the file as ``<stem>.csv``.

    Returns:
        Tuple[str, int, str]: (path, exit code, message)
    """
    try:
        scenario = load_scenario(path)
        if scenario.out is None:
            scenario = scenario.model_copy(update={"out": str(Path(path).with_suffix(".csv"))})
        execute(scenario.command or "simulate3d", scenario)
        return path, EXIT_OK, f"wrote {scenario.out}"
    except RheoLabError as e:
        return path, e.exit_code, str(e)


class RheoLabApp:
    """
    Command-line application.

    Dependencies are injected so tests can substitute the configuration.
    """

    def __init__(self, config_manager: Optional[ConfigManager] = None):
        self.config_manager = config_manager or ConfigManager()

    def configure_logging(self, level: Optional[str]) -> None:
        if level is None:
            level = self.config_manager.get_config(ConfigManager.DEFAULT_CONFIG, "output.log_level")
        logging.basicConfig(stream=sys.stderr, level=getattr(logging, str(level).upper(), logging.WARNING),
                            format="%(levelname)s %(name)s: %(message)s")

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Parse ``argv`` and run the selected command.

        Returns:
            int: 0 on success, 1 usage/parse error, 2 domain rejection,
            3 numerical failure
        """
        args = build_parser().parse_args(argv)
        self.configure_logging(args.log_level)
        try:
            return self._dispatch(args)
        except NetworkSyntaxError as e:
            print(e.caret_report(), file=sys.stderr)
            return e.exit_code
        except RheoLabError as e:
            print(f"rheolab: {e}", file=sys.stderr)
            return e.exit_code

    def _dispatch(self, args: argparse.Namespace) -> int:
        if args.command == "compile":
            return self._compile(args)
        if args.command == "sweep":
            return self._sweep(args.scenarios, args.workers)
        scenario = load_scenario(args.scenario, _overrides(args), self.config_manager)
        if args.command == "compare":
            for line in commands.cmd_compare(scenario).lines():
                print(line)
            return EXIT_OK
        execute(args.command, scenario, self.config_manager)
        return EXIT_OK

    def _compile(self, args: argparse.Namespace) -> int:
        text = args.text
        if text is None:
            if args.model is None:
                raise ConfigError("compile needs network text or --model with --params")
            scenario = load_scenario(None, {"model": args.model, "params": args.params}, self.config_manager)
            text = commands.canonical_text(args.model, scenario)
        report = commands.cmd_compile(text)
        for line in report.lines():
            print(line)
        if report.rejection is not None:
            raise report.rejection
        return EXIT_OK

    def _sweep(self, paths: List[str], workers: Optional[int]) -> int:
        worst = EXIT_OK
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for path, code, message in pool.map(run_scenario_file, paths):
                stream = sys.stdout if code == EXIT_OK else sys.stderr
                print(f"{path}: {message}", file=stream)
                worst = max(worst, code)
        return worst


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``rheolab`` command."""
    return RheoLabApp().run(argv)
