"""Replayable logs of graph constructions.

A trace is a list of steps.  The first step is ``start`` and names the
initial graph; every later step applies one operation to the current graph:

``join``      ``{"with": operand}``                     current + operand
``coalesce``  ``{"u": int, "with": operand, "v": int}``  merge current[u] with operand[v]
``pendant``   ``{"u": int}``                            attach a new leaf at u
``product``   ``{"with": operand}``                     current x operand

An operand is ``{"family": name, "params": [...]}`` or ``{"graph6": str}``.
Each step also stores the index of the graph it produced as a string
(``"p/q"`` or ``"inf"``), or ``None`` when it was not computed.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from curvex.errors import InvalidParameter
from curvex.graph.core import Graph, add_pendant, cartesian_product, coalesce, join
from curvex.graph.families import family
from curvex.graph.formats import parse_graph6, serialize_graph6

OPS = ("start", "join", "coalesce", "pendant", "product")


def family_operand(name: str, *params: int) -> dict:
    return {"family": name, "params": list(params)}


def graph_operand(g: Graph) -> dict:
    return {"graph6": serialize_graph6(g)}


def build_operand(operand: dict) -> Graph:
    if "family" in operand:
        return family(operand["family"], *operand.get("params", []))
    if "graph6" in operand:
        return parse_graph6(operand["graph6"])
    raise InvalidParameter(f"operand {operand!r} names neither a family nor a graph6 string")


@dataclass(frozen=True)
class Step:
    op: str
    params: dict
    index: str | None = None

    def to_json(self) -> str:
        return json.dumps({"op": self.op, "params": self.params, "index": self.index}, sort_keys=True)


@dataclass
class ConstructionTrace:
    steps: list[Step] = field(default_factory=list)

    def record(self, op: str, params: dict, index: str | None = None) -> None:
        if op not in OPS:
            raise InvalidParameter(f"unknown trace operation {op!r}")
        if (op == "start") != (not self.steps):
            raise InvalidParameter("a trace begins with exactly one 'start' step")
        self.steps.append(Step(op, params, index))

    def replay_steps(self) -> Iterator[tuple[Step, Graph]]:
        """Yield each step together with the graph it produces."""
        if not self.steps or self.steps[0].op != "start":
            raise InvalidParameter("trace has no start step")
        g = build_operand(self.steps[0].params["graph"])
        yield self.steps[0], g
        for st in self.steps[1:]:
            p = st.params
            if st.op == "join":
                g = join(g, build_operand(p["with"]))
            elif st.op == "coalesce":
                g = coalesce(g, p["u"], build_operand(p["with"]), p["v"])
            elif st.op == "pendant":
                g = add_pendant(g, p["u"])
            elif st.op == "product":
                g = cartesian_product(g, build_operand(p["with"]))
            else:
                raise InvalidParameter(f"unexpected step {st.op!r}")
            yield st, g

    def replay(self) -> Graph:
        """Rebuild the final graph vertex-for-vertex from the recorded steps."""
        g = None
        for _, g in self.replay_steps():
            pass
        return g

    @property
    def final_index(self) -> str | None:
        return self.steps[-1].index if self.steps else None

    def to_jsonl(self) -> str:
        return "".join(st.to_json() + "\n" for st in self.steps)

    @classmethod
    def from_jsonl(cls, lines: str | Iterable[str]) -> ConstructionTrace:
        if isinstance(lines, str):
            lines = lines.splitlines()
        trace = cls()
        for line in lines:
            if line.strip():
                rec = json.loads(line)
                trace.record(rec["op"], rec["params"], rec.get("index"))
        return trace

    def __len__(self) -> int:
        return len(self.steps)
