"""
Cluster graph of n-permutations: vertices are the (n-1)-permutations, edges are the n-permutations
(or compressed twin pairs), every edge going from the cluster of its first n-1 letters to the cluster
of its last n-1 letters.
"""
import logging
from collections import Counter
from itertools import permutations
from typing import Iterable, Iterator, Sequence

import networkx as nx

from src.core.models import Cluster, EdgeKind, EdgeLabel, PFamily, PFamilyVariant, TwinCycle
from src.core.perm_core import Permutation, Word, is_permutation, reduce, twin_of, windows
from src.exceptions import GraphError, OrderError

logger = logging.getLogger(__name__)


def clusters(n: int) -> list[Cluster]:
    return list(permutations(range(1, n)))


class ClusterGraph:
    """
    Immutable directed multigraph over all (n-1)! clusters. Edge ids follow the lexicographic
    order of the labels, so the same label set always yields the same ids.
    """

    def __init__(self, order: int, labels: Iterable[EdgeLabel]):
        self.order = order
        graph = nx.MultiDiGraph(order=order)
        graph.add_nodes_from(clusters(order))
        self._by_letters: dict[Word, tuple[int, EdgeLabel]] = {}
        for edge_id, label in enumerate(sorted(labels, key=lambda item: item.letters)):
            if label.order != order:
                raise GraphError(f'label {label} does not have order {order}')
            if label.letters in self._by_letters:
                raise GraphError(f'duplicate edge label {label}')
            graph.add_edge(label.source, label.target, key=edge_id, label=label)
            self._by_letters[label.letters] = (edge_id, label)
        self._graph = nx.freeze(graph)

    @property
    def graph(self) -> nx.MultiDiGraph:
        return self._graph

    @property
    def vertices(self) -> list[Cluster]:
        return list(self._graph.nodes)

    def edges(self) -> Iterator[tuple[int, Cluster, Cluster, EdgeLabel]]:
        for source, target, edge_id, label in sorted(self._graph.edges(keys=True, data='label'),
                                                     key=lambda edge: edge[2]):
            yield edge_id, source, target, label

    def labels(self) -> list[EdgeLabel]:
        return [label for _, _, _, label in self.edges()]

    def out_edges(self, cluster: Cluster) -> list[tuple[int, Cluster, EdgeLabel]]:
        return sorted(((edge_id, target, label)
                       for _, target, edge_id, label in self._graph.out_edges(cluster, keys=True, data='label')),
                      key=lambda edge: edge[0])

    def edge_by_letters(self, letters: Sequence[int]) -> tuple[int, EdgeLabel] | None:
        return self._by_letters.get(tuple(letters))

    def number_of_edges(self) -> int:
        return self._graph.number_of_edges()

    def in_degree(self, cluster: Cluster) -> int:
        return self._graph.in_degree(cluster)

    def out_degree(self, cluster: Cluster) -> int:
        return self._graph.out_degree(cluster)

    @property
    def is_compressed(self) -> bool:
        return any(label.is_compressed for _, label in self._by_letters.values())

    def __len__(self) -> int:
        return self.number_of_edges()

    def __repr__(self) -> str:
        return f'ClusterGraph(order={self.order}, vertices={self._graph.number_of_nodes()}, ' \
               f'edges={self.number_of_edges()})'


def build_cluster_graph(n: int) -> ClusterGraph:
    """
    The build_cluster_graph function builds the uncompressed cluster graph: n! plain edges over (n-1)! clusters,
    balanced with in- and out-degree n everywhere.

    :param n: int: The order, at least 3
    :return: The cluster graph
    """
    if n < 3:
        raise OrderError('order too small')
    graph = ClusterGraph(n, (EdgeLabel(letters=p) for p in permutations(range(1, n + 1))))
    logger.debug('built %r', graph)
    return graph


def parallel_edge_counts(G: ClusterGraph) -> Counter:
    return Counter((source, target) for _, source, target, _ in G.edges())


def twin_pairs(G: ClusterGraph) -> list[tuple[Permutation, Permutation]]:
    """
    The twin_pairs function lists the pair of twins of every cluster, sorted by cluster.
    Each pair is a parallel double edge.

    :param G: ClusterGraph: An uncompressed cluster graph
    :return: (n-1)! pairs, each pair in lexicographic order
    """
    if G.is_compressed:
        raise GraphError('twin pairs require an uncompressed graph')
    pairs = []
    for cluster in G.vertices:
        twins = sorted(label.letters for _, _, label in G.out_edges(cluster) if twin_of(label.letters) is not None)
        if len(twins) != 2:
            raise GraphError(f'cluster {cluster} has {len(twins)} twin edges')
        pairs.append((twins[0], twins[1]))
    return pairs


def twin_cycles(G: ClusterGraph) -> list[TwinCycle]:
    """
    The twin_cycles function follows double edges from cluster to cluster. Every cluster has exactly one
    outgoing and one incoming double edge, so they split into (n-2)! disjoint cycles. Cycles are ordered by
    the smallest cluster they visit and each one starts at that cluster.

    :param G: ClusterGraph: An uncompressed cluster graph
    :return: The twin cycles in canonical order, ids 0, 1, ...
    """
    pair_by_cluster = {reduce(first[:-1]): (first, second) for first, second in twin_pairs(G)}
    seen: set[Cluster] = set()
    cycles = []
    for start in sorted(pair_by_cluster):
        if start in seen:
            continue
        visited, pairs = [], []
        cluster = start
        while cluster not in seen:
            seen.add(cluster)
            visited.append(cluster)
            pair = pair_by_cluster[cluster]
            pairs.append(pair)
            cluster = reduce(pair[0][1:])
        if cluster != start:
            raise GraphError(f'double edges from {start} do not close into a cycle')
        cycles.append(TwinCycle(id=len(cycles), pairs=tuple(pairs), clusters=tuple(visited)))
    return cycles


def compressed_label(p: Sequence[int]) -> EdgeLabel:
    """
    The compressed_label function labels the single edge replacing a twin pair: reduce(p_1 ... p_{n-1} p_1).
    Both twins give the same label.

    :param p: Sequence[int]: Either twin
    :return: A compressed edge label
    """
    p = tuple(p)
    if twin_of(p) is None:
        raise GraphError(f'{p} has no twin')
    return EdgeLabel(letters=reduce(p[:-1] + (p[0],)), kind=EdgeKind.compressed)


def _check_cycle(G: ClusterGraph, cycle: TwinCycle) -> None:
    if len(cycle.pairs) != len(cycle.clusters) or not cycle.pairs:
        raise GraphError(f'twin cycle {cycle.id} is malformed')
    for index, (first, second) in enumerate(cycle.pairs):
        if twin_of(first) != second:
            raise GraphError(f'twin cycle {cycle.id} holds {first} and {second}, which are not twins')
        for letters in (first, second):
            found = G.edge_by_letters(letters)
            if found is None or found[1].is_compressed:
                raise GraphError(f'twin cycle {cycle.id} is not part of the graph')
        next_cluster = cycle.clusters[(index + 1) % len(cycle.clusters)]
        if reduce(first[:-1]) != cycle.clusters[index] or reduce(first[1:]) != next_cluster:
            raise GraphError(f'twin cycle {cycle.id} does not follow its double edges')


def compress(G: ClusterGraph, chosen: Sequence[TwinCycle]) -> ClusterGraph:
    """
    The compress function replaces every twin pair of the chosen cycles by one compressed edge.
    Each cycle removes n-1 edges, so compressing i cycles leaves n! - i(n-1) edges and keeps the graph balanced.

    :param G: ClusterGraph: The graph to compress
    :param chosen: Sequence[TwinCycle]: Pairwise disjoint twin cycles of G
    :return: A new, compressed graph
    """
    used: set[Cluster] = set()
    removed: set[Word] = set()
    added = []
    for cycle in chosen:
        _check_cycle(G, cycle)
        if used & set(cycle.clusters):
            raise GraphError('twin cycles overlap')
        used |= set(cycle.clusters)
        for first, second in cycle.pairs:
            removed |= {first, second}
            added.append(compressed_label(first))
    labels = [label for label in G.labels() if label.letters not in removed] + added
    compressed = ClusterGraph(G.order, labels)
    logger.debug('compressed %d twin cycles: %r', len(chosen), compressed)
    return compressed


def _first_column(n: int) -> list[Permutation]:
    return [tuple(range(n, j, -1)) + tuple(range(1, j + 1)) for j in range(1, n + 1)]


def _second_column(n: int) -> list[Permutation]:
    column = [tuple(range(1, k + 1)) + (n, k + 1) + tuple(range(n - 1, k + 1, -1)) for k in range(n - 2, 0, -1)]
    column.append((n, 1) + tuple(range(n - 1, 1, -1)))
    column.append((1,) + tuple(range(n, 1, -1)))
    return column


def build_P(n: int) -> PFamily:
    """
    The build_P function lists the 2n gluing permutations in tour order: the first column top to bottom,
    then the second column. Cyclically consecutive members are adjacent in the cluster graph.

    :param n: int: The order, at least 4
    :return: The family P
    """
    if n < 4:
        raise OrderError('order too small')
    return PFamily(order=n, members=tuple(_first_column(n) + _second_column(n)), variant=PFamilyVariant.p)


def _star_extras(n: int) -> list[Permutation]:
    return [twin_of((n,) + tuple(range(1, n))), twin_of((1,) + tuple(range(n, 1, -1)))]


def build_P_star(n: int) -> PFamily:
    """
    The build_P_star function adds the twins of (n, 1, 2, ..., n-1) and (1, n, n-1, ..., 2), the only members
    of P that have twins, namely (n-1, 1, 2, ..., n-2, n) and (2, n, n-1, ..., 3, 1).

    :param n: int: The order, at least 4
    :return: The family P*
    """
    family = build_P(n)
    return PFamily(order=n, members=family.members + tuple(_star_extras(n)), variant=PFamilyVariant.p_star)


def build_P_prime(n: int, chosen: Sequence[TwinCycle]) -> PFamily:
    """
    The build_P_prime function keeps a member of P* \\ P exactly when its twin pair lies in a chosen cycle.

    :param n: int: The order, at least 4
    :param chosen: Sequence[TwinCycle]: The cycles that get compressed
    :return: The family P', between P and P*
    """
    family = build_P(n)
    extras = tuple(p for p in _star_extras(n) if any(cycle.contains(p) for cycle in chosen))
    return PFamily(order=n, members=family.members + extras, variant=PFamilyVariant.p_prime)


def remove_tour(G: ClusterGraph, Pp: PFamily) -> ClusterGraph:
    """
    The remove_tour function deletes the edges of a family of permutations. A twin pair that is compressed in G
    maps to one compressed edge; it is removed once and only when both twins belong to the family.

    :param G: ClusterGraph: A possibly compressed cluster graph
    :param Pp: PFamily: The family to remove, usually P'
    :return: A new graph without the tour
    """
    members = set(Pp.members)
    removed: set[Word] = set()
    for p in Pp.members:
        if G.edge_by_letters(p) is not None:
            removed.add(p)
            continue
        twin = twin_of(p)
        if twin is None or twin not in members:
            raise GraphError("P' inconsistent with compression")
        found = G.edge_by_letters(compressed_label(p).letters)
        if found is None:
            raise GraphError("P' inconsistent with compression")
        removed.add(found[1].letters)
    return ClusterGraph(G.order, (label for label in G.labels() if label.letters not in removed))


def transition_walk(a: Cluster, b: Cluster, n: int) -> Word:
    """
    The transition_walk function builds the word Q = a x b' whose n-windows form a walk from cluster a to
    cluster b that avoids P*. The letter x is n when a ends with a descent and 0 otherwise, and b' lifts the
    letters of b above the mean of b_1 and b_2 by n and lowers the others by n, so every window holds a
    consecutive triple order-isomorphic to 213 or 231.

    :param a: Cluster: Start cluster, an (n-1)-permutation
    :param b: Cluster: End cluster, an (n-1)-permutation
    :param n: int: The order, at least 4
    :return: The word Q of length 2n - 1
    """
    if n < 4:
        raise OrderError('order too small')
    a, b = tuple(a), tuple(b)
    for cluster in (a, b):
        if len(cluster) != n - 1 or not is_permutation(cluster):
            raise GraphError(f'{cluster} is not a cluster of order {n}')
    x = n if a[-2] > a[-1] else 0
    lifted = tuple(letter + n if 2 * letter > b[0] + b[1] else letter - n for letter in b)
    return a + (x,) + lifted


def walk_permutations(Q: Sequence[int], n: int) -> list[Permutation]:
    return [reduce(window) for window in windows(Q, n)]
