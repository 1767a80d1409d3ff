"""Disjoint-set forest with path compression and union by rank."""

from typing import Dict, List


class DisjointSet:
    """Union-find over the integers 0..size-1."""

    def __init__(self, size: int):
        self.parents = list(range(size))
        self.ranks = [0] * size

    def find(self, index: int) -> int:
        parents = self.parents
        root = index
        while parents[root] != root:
            root = parents[root]
        while parents[index] != root:
            parents[index], index = root, parents[index]
        return root

    def merge(self, a: int, b: int) -> bool:
        """Join the sets of a and b; False if they were already joined."""
        a = self.find(a)
        b = self.find(b)
        if a == b:
            return False

        ranks = self.ranks
        if ranks[a] < ranks[b]:
            a, b = b, a
        self.parents[b] = a
        if ranks[a] == ranks[b]:
            ranks[a] += 1
        return True

    def groups(self) -> List[List[int]]:
        """Members of each set, each sorted, ordered by smallest member."""
        by_root: Dict[int, List[int]] = {}
        for index in range(len(self.parents)):
            by_root.setdefault(self.find(index), []).append(index)
        return sorted(by_root.values(), key=lambda members: members[0])
