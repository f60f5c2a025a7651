"""Bipartite graphs whose edges select difference vectors.

This package exports girth computation and the graph constructions.
"""

from src.graphs.bipartite import EdgeOrder, complete_bipartite, edge_bound, edge_order, greedy_girth_graph, to_networkx
from src.graphs.girth import girth, girth_exceeds, support_check_bruteforce
