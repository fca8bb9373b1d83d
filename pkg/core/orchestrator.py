"""
Command orchestrator.
Coordinates parsing, solving, measuring and report rendering for one CLI verb.
"""
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from pydantic import BaseModel, Field

from generators import FamilySpec, generate
from measures import EigenOptions, MeasureContext, MeasureCalculator, Provenance, family_oracle
from measures.report import GraphFingerprint
from solver import FrustrationSolver, SolverConfig, export_milp, render_lp, solve_kcolour, upper_bounds
from solver.bounds import triangle_packing_lower_bound
from solver.models import BUDGET_TERMINATED, OPTIMAL
from stats import reshuffle_experiment

from . import __version__
from .config import Settings
from .entities import SignedGraph
from .exceptions import ConfigurationError, ParsingError
from .parsers import dump_graph, load_graph

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_BUDGET = 4
EXIT_INTERRUPTED = 130

VERBS = ("analyze", "frustration", "kbalance", "generate", "ztest", "export-model", "oracle")
FORMATS = ("text", "structured")


class Command(BaseModel):
    """One CLI invocation: a verb, its input and every option."""
    verb: str
    input: Optional[str] = None
    format: str = "text"
    output: Optional[str] = None

    giant_component: bool = False
    weighted: bool = False
    cycle_cap: Optional[int] = None
    ks: List[int] = Field(default_factory=lambda: [3])

    k: Optional[int] = None
    statistic: str = "L"
    trials: int = 500
    lower_bound_stand_in: bool = False

    formulation: str = "xor"
    cuts: List[str] = Field(default_factory=list)
    linear_only: bool = False

    family: Optional[str] = None
    n: Optional[int] = None
    m: Optional[int] = None
    p: Optional[float] = None
    attachment: Optional[int] = None
    degree: Optional[int] = None
    dimensions: List[int] = Field(default_factory=list)
    dimension: Optional[int] = None
    negative_fraction: Optional[float] = None
    negative_probability: Optional[float] = None

    def validate_options(self) -> None:
        if self.verb not in VERBS:
            raise ConfigurationError(f"unknown verb {self.verb!r}")
        if self.format not in FORMATS:
            raise ConfigurationError(f"format must be one of {FORMATS}")
        if self.verb in ("analyze", "frustration", "kbalance", "ztest", "export-model") and not self.input:
            raise ConfigurationError(f"{self.verb} needs an input graph file")
        if self.verb == "kbalance" and (self.k is None or self.k < 1):
            raise ConfigurationError("kbalance needs --k >= 1")
        if self.verb == "ztest" and self.trials < 2:
            raise ConfigurationError("ztest needs at least 2 trials")
        if self.verb in ("generate", "oracle") and not self.family:
            raise ConfigurationError(f"{self.verb} needs --family")
        if self.verb == "oracle" and self.n is None:
            raise ConfigurationError("oracle needs --n")
        if self.cycle_cap is not None and self.cycle_cap < 3:
            raise ConfigurationError("cycle cap must be at least 3")


@dataclass(frozen=True)
class CommandOutcome:
    """Rendered document plus the exit status it implies."""
    document: str
    exit_code: int = EXIT_OK


class GraphLoader:
    """Reads edge-list files and applies the giant-component restriction."""

    def load(self, path: str, giant_component: bool = False) -> SignedGraph:
        source = Path(path)
        if not source.exists():
            raise ParsingError(f"input file not found: {path}")
        graph = load_graph(source.read_text(encoding="utf-8"), name=source.stem)
        logger.info(f"Read {path}: n={graph.n} m={graph.m} m_neg={graph.m_neg}")
        if giant_component:
            graph = graph.giant_component()
            logger.info(f"Giant component: n={graph.n} m={graph.m}")
        return graph


class BalanceOrchestrator:
    """
    Runs one command against the effective settings and renders its report.
    Every structured document carries the provenance of the run.
    """

    def __init__(self, command: Command, settings: Settings):
        self._command = command
        self._settings = settings
        self._loader = GraphLoader()
        self._handlers: Dict[str, Callable[[], CommandOutcome]] = {
            "analyze": self._analyze,
            "frustration": self._frustration,
            "kbalance": self._kbalance,
            "generate": self._generate,
            "ztest": self._ztest,
            "export-model": self._export_model,
            "oracle": self._oracle,
        }

    def execute(self) -> CommandOutcome:
        self._command.validate_options()
        logger.info(f"Running {self._command.verb} (seed={self._settings.seed})")
        return self._handlers[self._command.verb]()

    # Helpers

    @property
    def _solver_config(self) -> SolverConfig:
        return SolverConfig.from_settings(self._settings)

    @property
    def _eigen(self) -> EigenOptions:
        return EigenOptions(
            tolerance=self._settings.eigen_tolerance,
            max_sweeps=self._settings.eigen_sweeps,
            method=self._settings.eigen_method,
        )

    def _graph(self) -> SignedGraph:
        return self._loader.load(self._command.input, self._command.giant_component)

    def _provenance(self) -> Provenance:
        options: Dict[str, Any] = self._command.model_dump(exclude={"verb", "format", "output"})
        options.update({
            "workers": self._settings.workers,
            "time_limit": self._settings.time_limit,
            "node_budget": self._settings.node_budget,
            "gap": self._settings.gap,
            "cycle_limit": self._settings.cycle_limit,
            "eigen_tolerance": self._settings.eigen_tolerance,
            "eigen_sweeps": self._settings.eigen_sweeps,
            "eigen_method": self._settings.eigen_method,
        })
        return Provenance(
            version=__version__,
            command=self._command.verb,
            seed=self._settings.seed,
            options=options,
        )

    def _render(self, sections: Dict[str, Any], text_lines: List[str], exit_code: int = EXIT_OK) -> CommandOutcome:
        if self._command.format == "structured":
            document = {"provenance": self._provenance().model_dump(mode="json")}
            document.update(sections)
            return CommandOutcome(json.dumps(document, indent=2) + "\n", exit_code)

        provenance = self._provenance()
        header = [
            f"# {provenance.tool} {provenance.version} {provenance.command}",
            f"# seed = {provenance.seed}",
        ]
        return CommandOutcome("\n".join(header + text_lines) + "\n", exit_code)

    @staticmethod
    def _exit_for(status: str) -> int:
        return EXIT_BUDGET if status == BUDGET_TERMINATED else EXIT_OK

    # Verbs

    def _analyze(self) -> CommandOutcome:
        graph = self._graph()
        result = FrustrationSolver(self._solver_config).solve(graph)
        context = MeasureContext(
            graph=graph,
            frustration_index=result.L if result.status == OPTIMAL else None,
            frustration_reason=f"solver {result.status}; L in [{result.lower_bound}, {result.L}]",
            cycle_cap=self._command.cycle_cap,
            cycle_limit=self._settings.cycle_limit,
            ks=self._command.ks,
            eigen=self._eigen,
        )
        report = MeasureCalculator(ks=self._command.ks).report(context)
        if result.status != OPTIMAL:
            report.notes.append(f"frustration index unproven: {result.status}")

        solver_section = {"status": result.status, "L": result.L, "lower_bound": result.lower_bound, "nodes": result.nodes}
        lines = report.text_lines() + [f"solver_status = {result.status}"] + [f"note = {note}" for note in report.notes]
        return self._render(
            {"report": report.model_dump(mode="json"), "solver": solver_section},
            lines,
            self._exit_for(result.status),
        )

    def _frustration(self) -> CommandOutcome:
        graph = self._graph()
        solver = FrustrationSolver(self._solver_config)
        result = solver.solve_weighted(graph) if self._command.weighted else solver.solve(graph)
        bounds = upper_bounds(graph)
        triangle_bound = triangle_packing_lower_bound(graph)

        lines = [f"n = {graph.n}", f"m = {graph.m}", f"m_neg = {graph.m_neg}"]
        lines += result.text_lines()
        lines.append(f"triangle_lower_bound = {triangle_bound}")
        lines += [f"upper_bound[{name}] = {value}" for name, value in bounds.items()]
        return self._render(
            {
                "graph": GraphFingerprint.of(graph).model_dump(mode="json"),
                "result": result.model_dump(mode="json"),
                "triangle_lower_bound": triangle_bound,
                "upper_bounds": bounds,
            },
            lines,
            self._exit_for(result.status),
        )

    def _kbalance(self) -> CommandOutcome:
        graph = self._graph()
        result = solve_kcolour(graph, self._command.k, self._solver_config)
        lines = [f"n = {graph.n}", f"m = {graph.m}", f"m_neg = {graph.m_neg}", f"k = {self._command.k}"]
        lines += result.text_lines()
        return self._render(
            {
                "graph": GraphFingerprint.of(graph).model_dump(mode="json"),
                "result": result.model_dump(mode="json"),
            },
            lines,
            self._exit_for(result.status),
        )

    def _family_spec(self) -> FamilySpec:
        command = self._command
        return FamilySpec(
            family=command.family,
            n=command.n,
            m=command.m,
            p=command.p,
            attachment=command.attachment,
            degree=command.degree,
            dimensions=command.dimensions,
            dimension=command.dimension,
            negative_fraction=command.negative_fraction,
            negative_probability=command.negative_probability,
            seed=self._settings.seed,
        )

    def _generate(self) -> CommandOutcome:
        graph = generate(self._family_spec())
        return CommandOutcome(dump_graph(graph))

    def _ztest(self) -> CommandOutcome:
        graph = self._graph()
        summary = reshuffle_experiment(
            graph,
            self._command.statistic,
            self._command.trials,
            seed=self._settings.seed,
            solver_config=self._solver_config.model_copy(update={"workers": 1}),
            lower_bound_stand_in=self._command.lower_bound_stand_in,
            workers=self._settings.workers,
            cycle_cap=self._command.cycle_cap,
            cycle_limit=self._settings.cycle_limit,
            eigen=self._eigen,
        )
        budget_hit = summary.status_counts.get(BUDGET_TERMINATED, 0) > 0 or summary.observed_status == BUDGET_TERMINATED
        exit_code = EXIT_BUDGET if budget_hit and not self._command.lower_bound_stand_in else EXIT_OK
        lines = [f"n = {graph.n}", f"m = {graph.m}", f"m_neg = {graph.m_neg}"] + summary.text_lines()
        return self._render(
            {
                "graph": GraphFingerprint.of(graph).model_dump(mode="json"),
                "summary": summary.model_dump(mode="json"),
            },
            lines,
            exit_code,
        )

    def _export_model(self) -> CommandOutcome:
        graph = self._graph()
        model = export_milp(graph, self._command.formulation, self._command.cuts, colours=self._command.k)
        return CommandOutcome(render_lp(model, linear_only=self._command.linear_only))

    def _oracle(self) -> CommandOutcome:
        try:
            table = family_oracle(self._command.n, self._command.family)
        except ValueError as e:
            raise ConfigurationError(str(e))
        lines = [f"{key} = {value:.12g}" if isinstance(value, float) else f"{key} = {value}" for key, value in table.items()]
        return self._render({"family": self._command.family, "values": table}, lines)
