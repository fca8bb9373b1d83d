"""
Binary programming models of the frustration index and an LP-format writer.
Following Strategy + Factory patterns - one class per formulation, selected by name.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from core.entities import Edge, SignedGraph
from core.exceptions import SolverError

from .bounds import triangles, unbalanced_triangles

logger = logging.getLogger(__name__)

CUT_BLOCKS = ("triangle", "degree", "four", "fix")
SENSES = ("<=", ">=", "=")

Terms = Dict[str, float]


@dataclass(frozen=True)
class Constraint:
    name: str
    terms: Tuple[Tuple[str, float], ...]
    sense: str
    rhs: float
    block: str = "model"

    def holds(self, values: Mapping[str, int]) -> bool:
        lhs = sum(coef * values[var] for var, coef in self.terms)
        if self.sense == "<=":
            return lhs <= self.rhs + 1e-9
        if self.sense == ">=":
            return lhs >= self.rhs - 1e-9
        return abs(lhs - self.rhs) <= 1e-9


@dataclass
class MilpModel:
    """A minimisation model over binary variables."""
    formulation: str
    variables: List[str] = field(default_factory=list)
    objective: Terms = field(default_factory=dict)
    constant: float = 0.0
    quadratic: Dict[Tuple[str, str], float] = field(default_factory=dict)
    constraints: List[Constraint] = field(default_factory=list)
    graph_name: Optional[str] = None
    fingerprint: Tuple[int, int, int] = (0, 0, 0)

    @property
    def variable_count(self) -> int:
        return len(self.variables)

    @property
    def constraint_count(self) -> int:
        return len(self.constraints)

    @property
    def is_quadratic(self) -> bool:
        return bool(self.quadratic)

    def block_sizes(self) -> Dict[str, int]:
        sizes: Dict[str, int] = {}
        for constraint in self.constraints:
            sizes[constraint.block] = sizes.get(constraint.block, 0) + 1
        return sizes

    def feasible(self, values: Mapping[str, int]) -> bool:
        return all(constraint.holds(values) for constraint in self.constraints)

    def objective_value(self, values: Mapping[str, int]) -> float:
        value = self.constant + sum(coef * values[var] for var, coef in self.objective.items())
        value += sum(coef * values[a] * values[b] for (a, b), coef in self.quadratic.items())
        return value


def _add(terms: Terms, variable: str, coefficient: float) -> None:
    total = terms.get(variable, 0.0) + coefficient
    if total == 0:
        terms.pop(variable, None)
    else:
        terms[variable] = total


def node(i: int) -> str:
    return f"x_{i}"


class BaseFormulation(ABC):
    """Template Method: the build loop is shared, edge pieces are per formulation."""

    name: str = ""
    supported_cuts: Tuple[str, ...] = ()

    def build(self, graph: SignedGraph, cuts: Sequence[str] = ()) -> MilpModel:
        unknown = [cut for cut in cuts if cut not in CUT_BLOCKS]
        if unknown:
            raise SolverError(f"unknown valid-inequality block(s): {', '.join(unknown)}")
        refused = [cut for cut in cuts if cut not in self.supported_cuts]
        if refused:
            raise SolverError(
                f"{self.name} model does not support the {', '.join(refused)} block(s)"
            )

        model = MilpModel(formulation=self.name, graph_name=graph.name, fingerprint=graph.fingerprint)
        model.variables = self.node_variables(graph)
        rows: List[Tuple[Terms, str, float, str]] = []

        for e in graph.edges:
            model.variables.extend(self.edge_variables(e))
            terms, constant = self.edge_objective(e)
            for var, coef in terms.items():
                _add(model.objective, var, coef)
            model.constant += constant
            rows.extend((terms, sense, rhs, "model") for terms, sense, rhs in self.edge_constraints(e))

        rows.extend((terms, sense, rhs, "model") for terms, sense, rhs in self.global_constraints(graph))
        self.add_quadratic(graph, model)

        for cut in CUT_BLOCKS:
            if cut in cuts:
                rows.extend((terms, sense, rhs, cut) for terms, sense, rhs in getattr(self, f"_{cut}_cuts")(graph))

        model.constraints = [
            Constraint(f"c{k}", tuple(terms.items()), sense, rhs, block)
            for k, (terms, sense, rhs, block) in enumerate(rows, start=1)
        ]
        logger.info(
            f"Built {self.name} model: {model.variable_count} variables, "
            f"{model.constraint_count} constraints"
        )
        return model

    def node_variables(self, graph: SignedGraph) -> List[str]:
        return [node(i) for i in range(graph.n)]

    @abstractmethod
    def edge_variables(self, edge: Edge) -> List[str]:
        pass

    @abstractmethod
    def edge_objective(self, edge: Edge) -> Tuple[Terms, float]:
        """Linear terms and constant of the edge's contribution to the objective."""
        pass

    def edge_constraints(self, edge: Edge) -> List[Tuple[Terms, str, float]]:
        return []

    def global_constraints(self, graph: SignedGraph) -> List[Tuple[Terms, str, float]]:
        return []

    def add_quadratic(self, graph: SignedGraph, model: MilpModel) -> None:
        pass

    def frustration(self, edge: Edge) -> Tuple[Terms, float]:
        """f_ij as linear terms plus a constant."""
        return self.edge_objective(edge)

    # Valid-inequality blocks

    def _edge_of(self, graph: SignedGraph, u: int, v: int) -> Edge:
        return graph.edges[graph.index[(min(u, v), max(u, v))]]

    def _triangle_cuts(self, graph: SignedGraph) -> List[Tuple[Terms, str, float]]:
        """Every unbalanced triangle holds at least one frustrated edge."""
        rows = []
        for i, j, k in unbalanced_triangles(graph):
            terms: Terms = {}
            constant = 0.0
            for u, v in ((i, j), (i, k), (j, k)):
                side, offset = self.frustration(self._edge_of(graph, u, v))
                for var, coef in side.items():
                    _add(terms, var, coef)
                constant += offset
            rows.append((terms, ">=", 1.0 - constant))
        return rows

    def _degree_cuts(self, graph: SignedGraph) -> List[Tuple[Terms, str, float]]:
        """At an optimum no node has more than half of its edges frustrated."""
        rows = []
        for i in range(graph.n):
            if graph.degrees[i] == 0:
                continue
            terms: Terms = {}
            constant = 0.0
            for other, _, _ in graph.neighbours[i]:
                side, offset = self.frustration(self._edge_of(graph, i, other))
                for var, coef in side.items():
                    _add(terms, var, coef)
                constant += offset
            rows.append((terms, "<=", float(graph.degrees[i] // 2) - constant))
        return rows

    def _four_cuts(self, graph: SignedGraph) -> List[Tuple[Terms, str, float]]:
        raise SolverError(f"{self.name} model has no product variables")

    def _fix_cuts(self, graph: SignedGraph) -> List[Tuple[Terms, str, float]]:
        """Colour the maximum-degree node (smallest id on ties) black."""
        if graph.n == 0:
            return []
        chosen = max(range(graph.n), key=lambda i: (graph.degrees[i], -i))
        return [({self.fix_variable(chosen): 1.0}, "=", 1.0)]

    def fix_variable(self, i: int) -> str:
        return node(i)


class AndFormulation(BaseFormulation):
    """x_ij = x_i AND x_j with the standard linearisation per edge sign."""

    name = "AND"
    supported_cuts = CUT_BLOCKS

    @staticmethod
    def product(e: Edge) -> str:
        return f"xe_{e.u}_{e.v}"

    def edge_variables(self, edge: Edge) -> List[str]:
        return [self.product(edge)]

    def edge_objective(self, edge: Edge) -> Tuple[Terms, float]:
        # f_ij = (1 - a)/2 + a (x_i + x_j - 2 x_ij)
        a = float(edge.sign)
        return {node(edge.u): a, node(edge.v): a, self.product(edge): -2.0 * a}, (1.0 - a) / 2.0

    def edge_constraints(self, edge: Edge) -> List[Tuple[Terms, str, float]]:
        xe, xi, xj = self.product(edge), node(edge.u), node(edge.v)
        if edge.sign > 0:
            return [({xe: 1.0, xi: -1.0}, "<=", 0.0), ({xe: 1.0, xj: -1.0}, "<=", 0.0)]
        return [({xi: 1.0, xj: 1.0, xe: -1.0}, "<=", 1.0)]

    def _four_cuts(self, graph: SignedGraph) -> List[Tuple[Terms, str, float]]:
        """Four triangle inequalities of the product linearisation."""
        rows = []
        for i, j, k in triangles(graph):
            ij, ik, jk = (self.product(self._edge_of(graph, u, v)) for u, v in ((i, j), (i, k), (j, k)))
            rows.append(({ij: 1.0, ik: 1.0, node(i): -1.0, jk: -1.0}, "<=", 0.0))
            rows.append(({ij: 1.0, jk: 1.0, node(j): -1.0, ik: -1.0}, "<=", 0.0))
            rows.append(({ik: 1.0, jk: 1.0, node(k): -1.0, ij: -1.0}, "<=", 0.0))
            rows.append(({node(i): 1.0, node(j): 1.0, node(k): 1.0, ij: -1.0, ik: -1.0, jk: -1.0}, "<=", 1.0))
        return rows


class WeightedFormulation(AndFormulation):
    """AND model with the edge weight in place of the sign in the objective."""

    name = "weighted"
    supported_cuts = ("four", "fix")

    def edge_objective(self, edge: Edge) -> Tuple[Terms, float]:
        w = edge.weight
        return {node(edge.u): w, node(edge.v): w, self.product(edge): -2.0 * w}, (1.0 - w) / 2.0


class XorFormulation(BaseFormulation):
    """f_ij bounded below by the XOR (or XNOR) of the endpoint colours."""

    name = "XOR"
    supported_cuts = ("triangle", "degree", "fix")

    @staticmethod
    def frustrated(e: Edge) -> str:
        return f"f_{e.u}_{e.v}"

    def edge_variables(self, edge: Edge) -> List[str]:
        return [self.frustrated(edge)]

    def edge_objective(self, edge: Edge) -> Tuple[Terms, float]:
        return {self.frustrated(edge): 1.0}, 0.0

    def edge_constraints(self, edge: Edge) -> List[Tuple[Terms, str, float]]:
        f, xi, xj = self.frustrated(edge), node(edge.u), node(edge.v)
        if edge.sign > 0:
            return [({f: 1.0, xi: -1.0, xj: 1.0}, ">=", 0.0), ({f: 1.0, xi: 1.0, xj: -1.0}, ">=", 0.0)]
        return [({f: 1.0, xi: -1.0, xj: -1.0}, ">=", -1.0), ({f: 1.0, xi: 1.0, xj: 1.0}, ">=", 1.0)]


class AbsFormulation(BaseFormulation):
    """The colour difference (or sum minus one) split into e_ij - h_ij."""

    name = "ABS"
    supported_cuts = ("triangle", "degree", "fix")

    def edge_variables(self, edge: Edge) -> List[str]:
        return [f"e_{edge.u}_{edge.v}", f"h_{edge.u}_{edge.v}"]

    def edge_objective(self, edge: Edge) -> Tuple[Terms, float]:
        e, h = self.edge_variables(edge)
        return {e: 1.0, h: 1.0}, 0.0

    def edge_constraints(self, edge: Edge) -> List[Tuple[Terms, str, float]]:
        e, h = self.edge_variables(edge)
        xi, xj = node(edge.u), node(edge.v)
        if edge.sign > 0:
            return [({xi: 1.0, xj: -1.0, e: -1.0, h: 1.0}, "=", 0.0)]
        return [({xi: 1.0, xj: 1.0, e: -1.0, h: 1.0}, "=", 1.0)]


class UbqpFormulation(BaseFormulation):
    """Unconstrained quadratic model: sum a_ij (x_i + x_j - 2 x_i x_j) + m-."""

    name = "UBQP"
    supported_cuts = ("fix",)

    def edge_variables(self, edge: Edge) -> List[str]:
        return []

    def edge_objective(self, edge: Edge) -> Tuple[Terms, float]:
        a = float(edge.sign)
        return {node(edge.u): a, node(edge.v): a}, (1.0 - a) / 2.0

    def add_quadratic(self, graph: SignedGraph, model: MilpModel) -> None:
        for e in graph.edges:
            model.quadratic[(node(e.u), node(e.v))] = -2.0 * e.sign


class KColourFormulation(BaseFormulation):
    """Assignment variables x_i_c with one colour per node."""

    name = "kcolour"
    supported_cuts = ("fix",)

    def __init__(self, colours: int):
        if colours < 1:
            raise SolverError("the k-colour model needs at least one colour")
        self._colours = colours

    @staticmethod
    def assign(i: int, c: int) -> str:
        return f"x_{i}_c{c}"

    def node_variables(self, graph: SignedGraph) -> List[str]:
        return [self.assign(i, c) for i in range(graph.n) for c in range(self._colours)]

    def edge_variables(self, edge: Edge) -> List[str]:
        return [f"f_{edge.u}_{edge.v}"]

    def edge_objective(self, edge: Edge) -> Tuple[Terms, float]:
        return {f"f_{edge.u}_{edge.v}": 1.0}, 0.0

    def edge_constraints(self, edge: Edge) -> List[Tuple[Terms, str, float]]:
        f = f"f_{edge.u}_{edge.v}"
        rows = []
        for c in range(self._colours):
            xi, xj = self.assign(edge.u, c), self.assign(edge.v, c)
            if edge.sign > 0:
                rows.append(({f: 1.0, xi: -1.0, xj: 1.0}, ">=", 0.0))
            else:
                rows.append(({f: 1.0, xi: -1.0, xj: -1.0}, ">=", -1.0))
        return rows

    def global_constraints(self, graph: SignedGraph) -> List[Tuple[Terms, str, float]]:
        return [
            ({self.assign(i, c): 1.0 for c in range(self._colours)}, "=", 1.0)
            for i in range(graph.n)
        ]

    def fix_variable(self, i: int) -> str:
        return self.assign(i, 0)


class FormulationFactory:
    """Factory for model formulations by name (case-insensitive)."""

    _FORMULATIONS = {
        "and": AndFormulation,
        "xor": XorFormulation,
        "abs": AbsFormulation,
        "ubqp": UbqpFormulation,
        "weighted": WeightedFormulation,
    }

    @classmethod
    def names(cls) -> List[str]:
        return sorted(cls._FORMULATIONS) + ["kcolour"]

    @classmethod
    def create(cls, name: str, colours: Optional[int] = None) -> BaseFormulation:
        key = name.lower()
        if key == "kcolour":
            if colours is None:
                raise SolverError("the k-colour model needs a colour count")
            return KColourFormulation(colours)
        if key not in cls._FORMULATIONS:
            raise SolverError(f"unknown formulation {name!r}; choose from {', '.join(cls.names())}")
        return cls._FORMULATIONS[key]()


def export_milp(
    graph: SignedGraph,
    formulation: str = "xor",
    cuts: Iterable[str] = (),
    colours: Optional[int] = None,
) -> MilpModel:
    """Build the chosen model, optionally with valid-inequality blocks."""
    return FormulationFactory.create(formulation, colours).build(graph, tuple(cuts))


def _number(value: float) -> str:
    if float(value).is_integer():
        return str(int(value))
    return format(value, ".15g")


def _linear(terms: Iterable[Tuple[str, float]]) -> str:
    parts = []
    for var, coef in terms:
        sign = "-" if coef < 0 else "+"
        parts.append(f"{sign} {_number(abs(coef))} {var}")
    return " ".join(parts) if parts else "0"


def render_lp(model: MilpModel, linear_only: bool = False) -> str:
    """
    CPLEX-style LP text. Variables keep the model's order (nodes, then edges
    in lexicographic order) and constraints are numbered c1, c2, ...
    """
    if linear_only and model.is_quadratic:
        raise SolverError(f"{model.formulation} has a quadratic objective; a linear rendering is impossible")

    n, m, m_neg = model.fingerprint
    position = {var: k for k, var in enumerate(model.variables)}
    ordered = sorted(model.objective.items(), key=lambda item: position[item[0]])

    objective = _linear(ordered)
    if model.quadratic:
        quadratic = " ".join(
            f"{'-' if coef < 0 else '+'} {_number(abs(coef) * 2)} {a} * {b}"
            for (a, b), coef in sorted(model.quadratic.items(), key=lambda item: (position[item[0][0]], position[item[0][1]]))
        )
        objective += f" + [ {quadratic} ] / 2"
    if model.constant:
        objective += f" {'-' if model.constant < 0 else '+'} {_number(abs(model.constant))}"

    lines = [
        f"\\ frustration model, formulation {model.formulation}",
        f"\\ graph {model.graph_name or 'unnamed'}: n = {n}, m = {m}, m_neg = {m_neg}",
        "Minimize",
        f" obj: {objective}",
        "Subject To",
    ]
    for constraint in model.constraints:
        terms = sorted(constraint.terms, key=lambda item: position[item[0]])
        lines.append(f" {constraint.name}: {_linear(terms)} {constraint.sense} {_number(constraint.rhs)}")
    lines.append("Bounds")
    lines += [f" 0 <= {var} <= 1" for var in model.variables]
    lines.append("Binary")
    lines += [f" {var}" for var in model.variables]
    lines.append("End")
    return "\n".join(lines) + "\n"
