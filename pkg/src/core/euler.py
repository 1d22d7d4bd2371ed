import logging
import random

import networkx as nx

from src.core.cluster_graph import ClusterGraph
from src.core.models import Cluster, Trail
from src.exceptions import GraphError

logger = logging.getLogger(__name__)


def is_balanced(G: ClusterGraph) -> bool:
    """
    The is_balanced function checks that in-degree equals out-degree at every cluster.

    :param G: ClusterGraph: The graph
    :return: True if the graph is balanced
    """
    return all(G.in_degree(cluster) == G.out_degree(cluster) for cluster in G.vertices)


def strongly_connected(G: ClusterGraph) -> bool:
    """
    The strongly_connected function checks that every cluster with an edge reaches every other such cluster.
    Clusters without edges are left out; a graph without edges counts as connected.

    :param G: ClusterGraph: The graph
    :return: True if the non-isolated part is strongly connected
    """
    active = [cluster for cluster in G.vertices if G.graph.degree(cluster) > 0]
    if not active:
        return True
    return nx.is_strongly_connected(G.graph.subgraph(active))


def eulerian_circuit(G: ClusterGraph, start: Cluster, seed: int | None = None) -> Trail:
    """
    The eulerian_circuit function walks every edge exactly once and returns to start, peeling edges
    iteratively and splicing closed sub-tours in (Hierholzer). Without a seed, edges leave every cluster in
    increasing id order, so the circuit only depends on the graph; a seed shuffles that order reproducibly.

    :param G: ClusterGraph: A balanced graph whose non-isolated part is strongly connected
    :param start: Cluster: Where the circuit starts and ends
    :param seed: int | None: Optional seed for a random circuit
    :return: The closed trail
    """
    start = tuple(start)
    if start not in G.graph:
        raise GraphError(f'{start} is not a cluster of the graph')
    if G.out_degree(start) == 0:
        raise GraphError(f'start cluster {start} is isolated')
    if not is_balanced(G) or not strongly_connected(G):
        raise GraphError('graph not Eulerian')

    # nx.eulerian_circuit picks its own edge order, and a seed has to reorder each cluster's out-edges
    rng = random.Random(seed) if seed is not None else None
    pending = {}
    for cluster in G.vertices:
        out = G.out_edges(cluster)
        if rng is not None:
            rng.shuffle(out)
        # popped from the end
        pending[cluster] = list(reversed(out))

    stack = [(start, None)]
    circuit = []
    while stack:
        cluster, arrived_by = stack[-1]
        if pending[cluster]:
            edge_id, target, label = pending[cluster].pop()
            stack.append((target, (edge_id, label)))
        else:
            stack.pop()
            if arrived_by is not None:
                circuit.append(arrived_by)
    circuit.reverse()

    if len(circuit) != G.number_of_edges():
        raise GraphError('graph not Eulerian')
    logger.debug('eulerian circuit of %d edges from %s', len(circuit), start)
    return Trail(edges=tuple(circuit), start=start, end=start)
