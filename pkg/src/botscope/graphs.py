"""Weighted interaction graphs built from account snapshots.

Nodes exist only as edge endpoints, so an account with no interactions of a
given kind yields an empty graph. Self-interactions are ignored. Degree
counts distinct neighbors regardless of direction; strength sums incident
edge weights.
"""

from __future__ import annotations

from itertools import combinations

from .snapshot import AccountSnapshot


class Graph:
    def __init__(self, directed: bool = True):
        self.directed = directed
        self._out: dict[str, dict[str, float]] = {}
        self._in: dict[str, dict[str, float]] = {}
        self._nodes: set[str] = set()

    def add_edge(self, src: str, dst: str, weight: float = 1.0) -> None:
        src, dst = str(src), str(dst)
        if src == dst:
            return
        if not self.directed and dst < src:
            src, dst = dst, src
        self._out.setdefault(src, {})
        self._out[src][dst] = self._out[src].get(dst, 0.0) + float(weight)
        self._in.setdefault(dst, {})
        self._in[dst][src] = self._in[dst].get(src, 0.0) + float(weight)
        self._nodes.add(src)
        self._nodes.add(dst)

    def nodes(self) -> frozenset[str]:
        return frozenset(self._nodes)

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(targets) for targets in self._out.values())

    def has_node(self, node: str) -> bool:
        return str(node) in self._nodes

    def weight(self, src: str, dst: str) -> float:
        src, dst = str(src), str(dst)
        if not self.directed and dst < src:
            src, dst = dst, src
        return self._out.get(src, {}).get(dst, 0.0)

    def out_strength(self, node: str) -> float:
        node = str(node)
        total = sum(self._out.get(node, {}).values())
        if not self.directed:
            total += sum(self._in.get(node, {}).values())
        return total

    def in_strength(self, node: str) -> float:
        node = str(node)
        total = sum(self._in.get(node, {}).values())
        if not self.directed:
            total += sum(self._out.get(node, {}).values())
        return total

    def strength(self, node: str) -> float:
        node = str(node)
        return sum(self._out.get(node, {}).values()) + sum(self._in.get(node, {}).values())

    def neighbors(self, node: str) -> frozenset[str]:
        node = str(node)
        return frozenset(self._out.get(node, {})) | frozenset(self._in.get(node, {}))

    def degree(self, node: str) -> int:
        return len(self.neighbors(node))

    def degree_centrality(self, node: str) -> float:
        if self.node_count <= 1:
            return 0.0
        return self.degree(node) / (self.node_count - 1)

    def degree_sequence(self) -> list[int]:
        return [self.degree(n) for n in sorted(self._nodes)]

    def strength_sequence(self) -> list[float]:
        return [self.strength(n) for n in sorted(self._nodes)]

    def density(self) -> float:
        """Edges as a fraction of possible node pairs; 0 for graphs under 2 nodes."""
        n = self.node_count
        if n < 2:
            return 0.0
        if self.directed:
            return self.edge_count / (n * (n - 1))
        return 2.0 * self.edge_count / (n * (n - 1))

    def transitivity(self) -> float:
        """Global clustering of the undirected projection: 3*triangles / triads.

        0.0 when the graph has no connected triple.
        """
        neigh = {n: self.neighbors(n) for n in self._nodes}
        triads = sum(len(ns) * (len(ns) - 1) // 2 for ns in neigh.values())
        if triads == 0:
            return 0.0
        closed = 0
        for u in self._nodes:
            for v in neigh[u]:
                if v > u:
                    closed += len(neigh[u] & neigh[v])
        # each triangle contributes one closed count per of its three edges
        return closed / triads


def retweet_graph(snapshot: AccountSnapshot) -> Graph:
    """Directed: scored account -> author it retweeted, weight = retweet count."""
    g = Graph(directed=True)
    ego = snapshot.user.user_id
    for tweet in snapshot.tweets:
        if tweet.is_retweet and tweet.retweeted_author is not None:
            g.add_edge(ego, tweet.retweeted_author.user_id)
    return g


def mention_graph(snapshot: AccountSnapshot) -> Graph:
    """Directed: outgoing edges to users the account mentions, incoming from
    authors of tweets that mention it. Weight = interaction count."""
    g = Graph(directed=True)
    ego = snapshot.user.user_id
    for tweet in snapshot.tweets:
        for user_id, _ in tweet.mentioned_users:
            g.add_edge(ego, user_id)
    for mention in snapshot.mentions:
        g.add_edge(mention.author_id, ego)
    return g


def hashtag_graph(snapshot: AccountSnapshot) -> Graph:
    """Undirected co-occurrence between hashtags used in the same tweet."""
    g = Graph(directed=False)
    for tweet in snapshot.tweets:
        for a, b in combinations(sorted(tweet.hashtags), 2):
            g.add_edge(a, b)
    return g
