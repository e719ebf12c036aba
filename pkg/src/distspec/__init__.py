"""Exact distance matrices, distance spectra and Wiener-index tools."""
import logging

from .blockclique import (
    NotBlockCliqueError,
    block_decomposition,
    uniform_block_clique_params,
    wiener_blockclique_spectral,
)
from .distance import diameter, distance_matrix, wiener_index
from .extensions import ExtensionKind, extend, extension_distance_matrix, extension_wiener
from .formats import FormatError, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graph import DisconnectedGraphError, Graph, GraphError
from .ktree import NotLinearKTreeError, recursive_labeling, wiener_linear_ktree
from .search import cospectral_classes, enumerate_connected, mate_report, scan_graph6_files
from .spectra import charpoly_int, d_cospectral, distance_spectrum, fingerprint
from .transmission import transmission_profile

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "DisconnectedGraphError", "ExtensionKind", "FormatError", "Graph", "GraphError",
    "NotBlockCliqueError", "NotLinearKTreeError", "block_decomposition", "charpoly_int",
    "cospectral_classes", "d_cospectral", "diameter", "distance_matrix", "distance_spectrum",
    "enumerate_connected", "extend", "extension_distance_matrix", "extension_wiener",
    "fingerprint", "mate_report", "parse_edge_list", "parse_graph6", "recursive_labeling",
    "scan_graph6_files", "transmission_profile", "uniform_block_clique_params",
    "wiener_blockclique_spectral", "wiener_index", "wiener_linear_ktree", "write_edge_list",
    "write_graph6",
]
