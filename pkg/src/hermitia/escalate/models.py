"""Data models for escalation trees."""

from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import ParseError
from ..forms.quadratic import QuadraticForm

MAX_TREE_RANK = 4


class Regime(str, Enum):
    """Integrality regime of an escalation tree."""

    CLASSICAL = "classical"
    INTEGRAL = "integral"

    @classmethod
    def parse(cls, text: str) -> "Regime":
        aliases = {"classical": cls.CLASSICAL, "integral": cls.INTEGRAL, "integer-valued": cls.INTEGRAL}
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise ParseError(f"unknown regime {text!r}; use 'classical' or 'integral'") from None


class EscalationOptions(BaseModel):
    """Parameters that determine an escalation tree."""

    model_config = ConfigDict(frozen=True)

    regime: Regime = Regime.INTEGRAL
    max_rank: int = Field(4, ge=0, le=MAX_TREE_RANK)
    truant_cap: int = Field(1000, ge=1)
    top_truant_cap: int = Field(290, ge=1)
    top_truants: bool = Field(True, description="Compute truants for the top rank")
    theta_bound: int = Field(12, ge=1, description="Signature bound used to bucket forms")

    def cap_for(self, rank: int) -> int:
        return self.top_truant_cap if rank == self.max_rank else self.truant_cap


class EscalatorNode(BaseModel):
    """One equivalence class in an escalation tree."""

    model_config = ConfigDict(frozen=True)

    rank: int
    index: int
    form: QuadraticForm
    regime: Regime
    truant: Optional[int] = None
    truant_checked: bool = True
    parent: Optional[str] = None
    parents: List[str] = Field(default_factory=list)
    witness: Optional[Tuple[int, ...]] = Field(
        None, description="Vector of this form attaining the parent's truant"
    )
    signature: Tuple[int, ...] = ()

    @property
    def key(self) -> str:
        return f"r{self.rank}n{self.index}"

    @property
    def leaf_candidate(self) -> bool:
        """No truant below the cap (only meaningful when the truant was searched)."""
        return self.truant_checked and self.truant is None


class EscalationTree(BaseModel):
    """Escalators grouped by rank; ``levels[0]`` holds the zero form."""

    options: EscalationOptions
    levels: List[List[EscalatorNode]]
    diagnostics: List[str] = Field(default_factory=list)

    def level(self, rank: int) -> List[EscalatorNode]:
        return self.levels[rank] if 0 <= rank < len(self.levels) else []

    def counts(self) -> Dict[int, int]:
        return {rank: len(nodes) for rank, nodes in enumerate(self.levels)}

    def truants(self, rank: int) -> List[int]:
        return sorted(n.truant for n in self.level(rank) if n.truant is not None)

    def node(self, key: str) -> Optional[EscalatorNode]:
        for nodes in self.levels:
            for n in nodes:
                if n.key == key:
                    return n
        return None

    def to_graph(self) -> nx.DiGraph:
        """Directed graph of escalation steps, nodes keyed by ``EscalatorNode.key``."""
        graph = nx.DiGraph()
        for nodes in self.levels:
            for n in nodes:
                graph.add_node(n.key, rank=n.rank, form=str(n.form), truant=n.truant)
        for nodes in self.levels:
            for n in nodes:
                for p in n.parents:
                    graph.add_edge(p, n.key, witness=n.witness if p == n.parent else None)
        return graph
