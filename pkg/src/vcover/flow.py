"""Dinic's maximum flow on integer capacities, with the min-cut source side."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, n: int) -> None:
        self.n = n
        # per-arc arrays; arc i ^ 1 is the reverse of arc i
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, capacity: int) -> None:
        self.out[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(capacity)
        self.out[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(0)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for a in self.out[x]:
                y = self.head[a]
                if self.cap[a] > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    queue.append(y)
        return level if level[t] >= 0 else None

    def _push(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        # iterative blocking-flow search, one augmenting path per call
        path: list[int] = []
        x = s
        while True:
            if x == t:
                pushed = min(self.cap[a] for a in path)
                for a in path:
                    self.cap[a] -= pushed
                    self.cap[a ^ 1] += pushed
                return pushed
            arcs = self.out[x]
            while it[x] < len(arcs):
                a = arcs[it[x]]
                y = self.head[a]
                if self.cap[a] > 0 and level[y] == level[x] + 1:
                    break
                it[x] += 1
            if it[x] == len(arcs):
                if x == s:
                    return 0
                level[x] = -1  # dead end
                a = path.pop()
                x = self.head[a ^ 1]
                it[x] += 1
                continue
            a = arcs[it[x]]
            path.append(a)
            x = self.head[a]

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while (level := self._levels(s, t)) is not None:
            it = [0] * self.n
            while pushed := self._push(s, t, level, it):
                total += pushed
        return total

    def source_side(self, s: int) -> set[int]:
        """Vertices reachable from ``s`` in the residual network."""
        seen = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for a in self.out[x]:
                y = self.head[a]
                if self.cap[a] > 0 and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen
