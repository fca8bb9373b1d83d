"""
Edge-list parsers and writer following Single Responsibility Principle.
Each value parser handles one token format of the third column.
"""
import re
from abc import ABC, abstractmethod
from decimal import Decimal, InvalidOperation
from typing import Dict, List, Optional, Tuple

from .entities import SignedGraph
from .exceptions import ParsingError


class BaseValueParser(ABC):
    """Abstract parser for the sign/weight column - Strategy pattern."""

    weighted: bool = False

    @abstractmethod
    def can_parse(self, token: str) -> bool:
        """Check if this parser recognises the token."""
        pass

    @abstractmethod
    def parse(self, token: str) -> Tuple[int, float]:
        """Return (sign, weight) for the token."""
        pass


class SignParser(BaseValueParser):
    """Parser for integer signs: -1, +1, 1."""

    PATTERN = re.compile(r"^[+-]?1$")

    def can_parse(self, token: str) -> bool:
        return bool(self.PATTERN.match(token))

    def parse(self, token: str) -> Tuple[int, float]:
        sign = int(token)
        return sign, float(sign)


class WeightParser(BaseValueParser):
    """Parser for decimal weights in [-1, 1] \\ {0}; implies a weighted graph."""

    weighted = True
    PATTERN = re.compile(r"^[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?$")

    def can_parse(self, token: str) -> bool:
        return bool(self.PATTERN.match(token)) and not SignParser.PATTERN.match(token)

    def parse(self, token: str) -> Tuple[int, float]:
        try:
            value = Decimal(token)
        except InvalidOperation:
            raise ParsingError(f"invalid weight {token!r}")
        if value == 0:
            raise ParsingError("zero weight is not allowed")
        if not Decimal(-1) <= value <= Decimal(1):
            raise ParsingError(f"weight {token} outside [-1, 1]")
        weight = float(value)
        return (1 if weight > 0 else -1), weight


class EdgeListParser:
    """
    Facade for reading edge-list documents.
    Uses Strategy pattern to delegate the third column to a value parser.
    """

    COMMENT = "#"

    def __init__(self):
        self._value_parsers: List[BaseValueParser] = [
            SignParser(),
            WeightParser(),
        ]

    def parse(self, text: str, name: Optional[str] = None) -> SignedGraph:
        """Parse a document into a canonical SignedGraph."""
        ids: Dict[str, int] = {}
        seen: Dict[Tuple[int, int], int] = {}
        records = []
        weighted = False

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split(self.COMMENT, 1)[0].strip()
            if not line:
                continue

            tokens = line.split()
            if len(tokens) == 1:
                # a lone label declares a node, possibly isolated
                ids.setdefault(tokens[0], len(ids))
                continue
            if len(tokens) != 3:
                raise ParsingError(f"expected '<u> <v> <w>', got {len(tokens)} fields", line=number)

            left, right, value = tokens
            if left == right:
                raise ParsingError(f"self-loop on {left!r}", line=number)

            sign, weight, is_weighted = self._parse_value(value, number)
            weighted = weighted or is_weighted

            u = ids.setdefault(left, len(ids))
            v = ids.setdefault(right, len(ids))
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise ParsingError(
                    f"duplicate edge {left} {right} (first seen on line {seen[pair]})",
                    line=number,
                )
            seen[pair] = number
            records.append((u, v, sign, weight))

        labels = sorted(ids, key=ids.get)
        return SignedGraph.from_edges(len(ids), records, name=name, labels=labels, weighted=weighted)

    def _parse_value(self, token: str, number: int) -> Tuple[int, float, bool]:
        for parser in self._value_parsers:
            if parser.can_parse(token):
                try:
                    sign, weight = parser.parse(token)
                except ParsingError as e:
                    raise ParsingError(str(e), line=number)
                return sign, weight, parser.weighted
        raise ParsingError(f"sign/weight {token!r} is neither ±1 nor a decimal in [-1, 1]", line=number)


def load_graph(text: str, name: Optional[str] = None) -> SignedGraph:
    """Parse an edge-list document."""
    return EdgeListParser().parse(text, name)


def dump_graph(graph: SignedGraph, use_labels: bool = True) -> str:
    """Render a graph in canonical u < v order, one edge per line."""
    lines = []
    if graph.name:
        lines.append(f"# {graph.name}")
    lines.append(f"# n={graph.n} m={graph.m} m-={graph.m_neg}")
    for node in range(graph.n):
        if graph.degrees[node] == 0:
            lines.append(graph.label(node) if use_labels else str(node))
    for e in graph.edges:
        u = graph.label(e.u) if use_labels else str(e.u)
        v = graph.label(e.v) if use_labels else str(e.v)
        value = _format_weight(e.weight) if graph.weighted else f"{e.sign:+d}"
        lines.append(f"{u} {v} {value}")
    return "\n".join(lines) + "\n"


def _format_weight(weight: float) -> str:
    text = repr(float(weight))
    return text if "." in text or "e" in text else f"{text}.0"
