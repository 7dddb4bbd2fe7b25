"""Interaction-graph features over the retweet, mention, and hashtag graphs."""

from __future__ import annotations

from ..graphs import Graph, hashtag_graph, mention_graph, retweet_graph
from ..snapshot import AccountSnapshot
from ..stats import describe
from .base import FeatureDef, describe_defs

_KINDS = ("retweet", "mention", "hashtag")

_SCALARS = (
    ("nodes", "graph.node_count", "number of graph nodes"),
    ("edges", "graph.edge_count", "number of graph edges"),
    ("density", "graph.density", "edges over possible node pairs"),
    ("ego_out_strength", "graph.ego_out_strength", "summed weight of the scored account's outgoing edges"),
    ("ego_in_strength", "graph.ego_in_strength", "summed weight of the scored account's incoming edges"),
    ("ego_degree_centrality", "graph.ego_degree_centrality", "scored account's degree / (n - 1)"),
    ("clustering", "graph.transitivity", "global clustering: 3*triangles / connected triples"),
)


def _specs() -> tuple[FeatureDef, ...]:
    defs: list[FeatureDef] = []
    for kind in _KINDS:
        for stat, extractor, desc in _SCALARS:
            defs.append(FeatureDef(
                name=f"net.{kind}.{stat}",
                feature_class="network",
                extractor=extractor,
                params=f"kind={kind}",
                description=f"{desc} ({kind} graph)",
            ))
        for dist in ("degree", "strength"):
            defs.extend(describe_defs(
                prefix=f"net.{kind}.{dist}",
                feature_class="network",
                extractor=f"graph.{dist}_describe",
                params=f"kind={kind},bins=10,scale=linear",
                description=f"the {kind}-graph node {dist} distribution",
            ))
    return tuple(defs)


SPECS = _specs()


def _graph_block(kind: str, g: Graph, ego: str) -> dict[str, float]:
    out = {
        f"net.{kind}.nodes": float(g.node_count),
        f"net.{kind}.edges": float(g.edge_count),
        f"net.{kind}.density": g.density(),
        f"net.{kind}.ego_out_strength": g.out_strength(ego),
        f"net.{kind}.ego_in_strength": g.in_strength(ego),
        f"net.{kind}.ego_degree_centrality": g.degree_centrality(ego),
        f"net.{kind}.clustering": g.transitivity(),
    }
    for dist, seq in (("degree", g.degree_sequence()), ("strength", g.strength_sequence())):
        for field, value in describe(seq).as_dict().items():
            out[f"net.{kind}.{dist}.{field}"] = value
    return out


def compute(snapshot: AccountSnapshot, lexicons) -> dict[str, float]:
    ego = snapshot.user.user_id
    out: dict[str, float] = {}
    out.update(_graph_block("retweet", retweet_graph(snapshot), ego))
    out.update(_graph_block("mention", mention_graph(snapshot), ego))
    out.update(_graph_block("hashtag", hashtag_graph(snapshot), ego))
    return out
