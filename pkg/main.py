"""
Signed Balance - structural balance analysis of signed graphs
Entry point for the application.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from core.config import EIGEN_METHODS, Settings, load_settings, setup_logging
from core.exceptions import (
    BalanceError,
    ConfigurationError,
    InfeasibleSpecError,
    MeasureRefusedError,
    ParsingError,
    SolverError,
)
from core.orchestrator import (
    EXIT_FAILURE,
    EXIT_INFEASIBLE,
    EXIT_INTERRUPTED,
    EXIT_PARSE,
    FORMATS,
    BalanceOrchestrator,
    Command,
    CommandOutcome,
)
from generators import FamilyFactory
from solver.milp import CUT_BLOCKS, FormulationFactory


def _int_list(value: str) -> List[int]:
    return [int(part) for part in value.split(",") if part.strip()]


def _name_list(value: str) -> List[str]:
    return [part.strip() for part in value.split(",") if part.strip()]


class CLI:
    """Command-line interface for the application."""

    def __init__(self, settings: Settings, logger: logging.Logger):
        self._settings = settings
        self._logger = logger
        self._parser = self._build_parser()

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Main entry point. Returns exit code."""
        try:
            args = self._parser.parse_args(argv)
            settings = self._effective_settings(args)
            command = self._command(args)
            outcome = BalanceOrchestrator(command, settings).execute()
            self._write(outcome, command.output)
            return outcome.exit_code

        except KeyboardInterrupt:
            self._logger.info("Interrupted by user")
            return EXIT_INTERRUPTED
        except ParsingError as e:
            self._logger.error(f"Input error: {e}")
            return EXIT_PARSE
        except (ConfigurationError, InfeasibleSpecError, SolverError, MeasureRefusedError, ValidationError) as e:
            self._logger.error(f"Infeasible request: {e}")
            return EXIT_INFEASIBLE
        except BalanceError as e:
            self._logger.error(f"Execution failed: {e}")
            return EXIT_FAILURE
        except Exception as e:
            self._logger.exception(f"Internal failure: {e}")
            return EXIT_FAILURE

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="signed-balance",
            description="Frustration index, partial balance measures and significance tests for signed graphs.",
        )
        verbs = parser.add_subparsers(dest="verb", required=True)

        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--seed", type=int, help="master seed of every random draw")
        common.add_argument("--workers", type=int, help="parallel workers for the solver and replicas")
        common.add_argument("--gap", type=float, help="absolute optimality gap tolerance")
        common.add_argument("--time-limit", type=float, help="solver time limit in seconds")
        common.add_argument("--node-budget", type=int, help="maximum branch-and-bound nodes")
        common.add_argument("--cycle-cap", type=int, help="longest cycle length counted")
        common.add_argument("--cycle-limit", type=int, help="abort the cycle census after this many cycles")
        common.add_argument("--eigen-method", choices=EIGEN_METHODS)
        common.add_argument("--giant-component", action="store_true", help="restrict to the largest component")
        common.add_argument("--format", choices=FORMATS, default="text")
        common.add_argument("--output", help="write the report here instead of stdout")

        analyze = verbs.add_parser("analyze", parents=[common], help="all partial balance measures")
        analyze.add_argument("input")
        analyze.add_argument("--ks", type=_int_list, default=[3], help="cycle lengths for D_k, e.g. 3,4,5")

        frustration = verbs.add_parser("frustration", parents=[common], help="exact frustration index")
        frustration.add_argument("input")
        frustration.add_argument("--weighted", action="store_true", help="minimise the weighted frustration")

        kbalance = verbs.add_parser("kbalance", parents=[common], help="minimum frustration with k colours")
        kbalance.add_argument("input")
        kbalance.add_argument("--k", type=int, required=True)

        generate = verbs.add_parser("generate", parents=[common], help="draw a graph from a family")
        generate.add_argument("--family", required=True, choices=FamilyFactory.names())
        generate.add_argument("--n", type=int)
        generate.add_argument("--m", type=int)
        generate.add_argument("--p", type=float)
        generate.add_argument("--attachment", type=int)
        generate.add_argument("--degree", type=int)
        generate.add_argument("--dimensions", type=_int_list, default=[])
        generate.add_argument("--dimension", type=int)
        signs = generate.add_mutually_exclusive_group()
        signs.add_argument("--negative-fraction", type=float)
        signs.add_argument("--negative-probability", type=float)

        ztest = verbs.add_parser("ztest", parents=[common], help="reshuffle Z-score of a statistic")
        ztest.add_argument("input")
        ztest.add_argument("--stat", dest="statistic", default="L")
        ztest.add_argument("--trials", type=int, default=500)
        ztest.add_argument("--lower-bound-stand-in", action="store_true",
                           help="use the proven lower bound of each replica in place of L")

        export = verbs.add_parser("export-model", parents=[common], help="write a binary programming model")
        export.add_argument("input")
        export.add_argument("--form", dest="formulation", default="xor", choices=FormulationFactory.names())
        export.add_argument("--cuts", type=_name_list, default=[], help=f"any of {','.join(CUT_BLOCKS)}")
        export.add_argument("--k", type=int, help="colour count of the kcolour model")
        export.add_argument("--linear-only", action="store_true", help="refuse quadratic objectives")

        oracle = verbs.add_parser("oracle", parents=[common], help="closed-form values for K_n^a / K_n^c")
        oracle.add_argument("--family", required=True, choices=["a", "c"])
        oracle.add_argument("--n", type=int, required=True)

        return parser

    def _effective_settings(self, args: argparse.Namespace) -> Settings:
        return self._settings.override(
            seed=args.seed,
            workers=args.workers,
            gap=args.gap,
            time_limit=args.time_limit,
            node_budget=args.node_budget,
            cycle_limit=args.cycle_limit,
            eigen_method=args.eigen_method,
        )

    def _command(self, args: argparse.Namespace) -> Command:
        fields = {key: value for key, value in vars(args).items() if key in Command.model_fields and value is not None}
        return Command(**fields)

    def _write(self, outcome: CommandOutcome, output: Optional[str]) -> None:
        if output:
            Path(output).write_text(outcome.document, encoding="utf-8")
            self._logger.info(f"Report saved to: {output}")
        else:
            sys.stdout.write(outcome.document)


def main(argv: Optional[List[str]] = None) -> int:
    """Application entry point."""
    try:
        settings = load_settings()
        logger = setup_logging(settings.log_level)

        cli = CLI(settings, logger)
        return cli.run(argv)

    except ConfigurationError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
