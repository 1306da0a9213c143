class UnionFind:
    """
    Disjoint sets over hashable, mutually comparable keys. The root of every
    class is its minimum, so representatives are deterministic.

    Examples
    --------
    >>> uf = UnionFind()
    >>> uf.union(2, 3)
    >>> uf.union(1, 3)
    >>> uf.find(3)
    1
    """

    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            return x

        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        px = self.find(x)
        py = self.find(y)
        if px == py:
            return
        self.parent[px] = self.parent[py] = min(px, py)

    def classes(self):
        groups = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return {root: sorted(members) for root, members in groups.items()}
