"""Signed {0, 1, -1} lifts of GF(2) kernel vectors."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..exact_arith import QQ, FieldSpec
from ..kernel import KernelVector
from .active import MalformedVectorError, active_adjacency


@dataclass(frozen=True)
class SignedLift:
    """One representative of the class ``[v, -v]``: each connected component
    of the active graph is +1 at its smallest point."""

    vector: KernelVector

    def same_class(self, other: KernelVector) -> bool:
        return other == self.vector or other == -self.vector

    def to_json(self) -> dict:
        return self.vector.to_json()


def lift(u: KernelVector, field: FieldSpec = QQ) -> SignedLift:
    if u.is_zero():
        raise MalformedVectorError("the zero vector has no lift")
    g = active_adjacency(u)
    sign: dict = {}
    for root in sorted(g.points):
        if root in sign:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue:
            p = queue.popleft()
            for q in g.adjacency[p]:
                if q not in sign:
                    sign[q] = -sign[p]
                    queue.append(q)
                elif sign[q] == sign[p]:
                    raise MalformedVectorError(f"odd cycle through {p} and {q}", "bipartite")
    values = {p: field.embed(s) for p, s in sign.items()}
    return SignedLift(KernelVector(u.graph, u.polarity, field, values))


def components(u: KernelVector) -> list[list]:
    """Connected components of the active graph, each sorted."""
    g = active_adjacency(u)
    seen, out = set(), []
    for root in sorted(g.points):
        if root in seen:
            continue
        comp, stack = [], [root]
        seen.add(root)
        while stack:
            p = stack.pop()
            comp.append(p)
            for q in g.adjacency[p]:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        out.append(sorted(comp))
    return out
