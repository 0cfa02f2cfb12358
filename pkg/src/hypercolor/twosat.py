"""2-SAT via strongly connected components of the implication graph.

Literals are signed ints: +v and -v for variable v in 1..nvars.  A unit
clause is stored as the literal duplicated.  The solver is linear time,
fully deterministic (fixed node numbering, clause-order adjacency), and
iterative, so pathological instances cannot hit the recursion limit.
"""

from __future__ import annotations

from typing import Optional

__all__ = ["TwoSatInstance"]


class TwoSatInstance:
    """A conjunction of two-literal clauses over variables 1..nvars."""

    def __init__(self, nvars: int):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        self.clauses: list[tuple[int, int]] = []

    def _check_lit(self, lit: int) -> None:
        if not isinstance(lit, int) or lit == 0 or abs(lit) > self.nvars:
            raise ValueError(f"bad literal {lit!r} for {self.nvars} variables")

    def add_clause(self, a: int, b: int) -> None:
        self._check_lit(a)
        self._check_lit(b)
        self.clauses.append((a, b))

    def add_unit(self, lit: int) -> None:
        self.add_clause(lit, lit)

    @staticmethod
    def _node(lit: int) -> int:
        # +v -> 2(v-1), -v -> 2(v-1)+1; negation toggles the low bit.
        v = abs(lit)
        return 2 * (v - 1) + (0 if lit > 0 else 1)

    def _implication_adj(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(2 * self.nvars)]
        for a, b in self.clauses:
            # (a or b) gives !a -> b and !b -> a.
            adj[self._node(a) ^ 1].append(self._node(b))
            adj[self._node(b) ^ 1].append(self._node(a))
        return adj

    def _scc(self) -> list[int]:
        """Tarjan, iterative.  Component ids come out in reverse topological
        order (every edge leaving a component points at a smaller id)."""
        size = 2 * self.nvars
        adj = self._implication_adj()
        index = [-1] * size
        low = [0] * size
        on_stack = [False] * size
        comp = [-1] * size
        stack: list[int] = []
        next_index = 0
        ncomp = 0
        for root in range(size):
            if index[root] != -1:
                continue
            work: list[list[int]] = [[root, 0]]
            while work:
                frame = work[-1]
                node = frame[0]
                if frame[1] == 0:
                    index[node] = low[node] = next_index
                    next_index += 1
                    stack.append(node)
                    on_stack[node] = True
                descended = False
                neighbors = adj[node]
                i = frame[1]
                while i < len(neighbors):
                    w = neighbors[i]
                    i += 1
                    if index[w] == -1:
                        frame[1] = i
                        work.append([w, 0])
                        descended = True
                        break
                    if on_stack[w] and index[w] < low[node]:
                        low[node] = index[w]
                if descended:
                    continue
                work.pop()
                if low[node] == index[node]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = ncomp
                        if w == node:
                            break
                    ncomp += 1
                if work:
                    parent = work[-1][0]
                    if low[node] < low[parent]:
                        low[parent] = low[node]
        return comp

    def solve(self) -> Optional[dict[int, bool]]:
        """Satisfying assignment {var: bool}, or None if unsatisfiable.

        Variable v is set true exactly when comp[+v] < comp[-v]; with
        Tarjan's numbering that places v's true literal later in topological
        order, so no chosen literal implies a rejected one.
        """
        comp = self._scc()
        out: dict[int, bool] = {}
        for v in range(1, self.nvars + 1):
            pos = comp[2 * (v - 1)]
            neg = comp[2 * (v - 1) + 1]
            if pos == neg:
                return None
            out[v] = pos < neg
        return out

    def satisfies(self, assignment: dict[int, bool]) -> bool:
        def val(lit: int) -> bool:
            return assignment[abs(lit)] == (lit > 0)

        return all(val(a) or val(b) for a, b in self.clauses)

    def to_dot(self) -> str:
        """Implication graph in DOT form, for debugging."""

        def name(node: int) -> str:
            v = node // 2 + 1
            return f"x{v}" if node % 2 == 0 else f"not_x{v}"

        lines = ["digraph implications {"]
        for v in range(1, self.nvars + 1):
            lines.append(f'  x{v} [label="{v}"];')
            lines.append(f'  not_x{v} [label="!{v}"];')
        adj = self._implication_adj()
        for node, neighbors in enumerate(adj):
            for w in neighbors:
                lines.append(f"  {name(node)} -> {name(w)};")
        lines.append("}")
        return "\n".join(lines) + "\n"
