from pathlib import Path

from jinja2 import Environment, FileSystemLoader

from src.core.cluster_graph import ClusterGraph
from src.core.models import PFamily
from src.core.perm_core import twin_of

TEMPLATE_FOLDER = Path(__file__).parent / 'templates'

env = Environment(loader=FileSystemLoader(TEMPLATE_FOLDER), trim_blocks=True, lstrip_blocks=True,
                  keep_trailing_newline=True)


def _cluster_id(cluster: tuple[int, ...]) -> str:
    return ''.join(map(str, cluster)) if len(cluster) < 9 else ','.join(map(str, cluster))


def render_dot(G: ClusterGraph, highlight: PFamily | None = None) -> str:
    """
    The render_dot function writes a cluster graph in DOT. Nodes are labeled by cluster, edges by L(e).
    Twin edges are bold, compressed edges dashed, and edges of the highlighted family blue and dashed.

    :param G: ClusterGraph: The graph to render
    :param highlight: PFamily | None: Optional family, usually P*, drawn in blue
    :return: The DOT source
    """
    highlighted = set(highlight.members) if highlight is not None else set()
    edges = []
    for edge_id, source, target, label in G.edges():
        styles = []
        if label.is_compressed:
            styles.append('dashed')
            in_family = bool(label.covers() & highlighted)
        else:
            in_family = label.letters in highlighted
            if twin_of(label.letters) is not None:
                styles.append('bold')
            if in_family:
                styles.append('dashed')
        edges.append({
            'id': edge_id,
            'source': _cluster_id(source),
            'target': _cluster_id(target),
            'label': str(label),
            'style': ','.join(styles),
            'color': 'blue' if in_family else None,
        })
    nodes = [{'id': _cluster_id(cluster)} for cluster in G.vertices]
    return env.get_template('cluster_graph.dot.j2').render(order=G.order, nodes=nodes, edges=edges)
