"""Lines in graph metrics and certificates for split-bipartite graphs."""

from .bound import (
    Case,
    InequalityReport,
    SweepReport,
    case_classify,
    inequality_margins,
    nb_lines_lower_bound,
    triple_sweep,
)
from .certificate import Certificate, certify, verify_certificate
from .errors import GraphError
from .graph import UNREACHABLE, DistanceMatrix, Graph, apsp, bipartition, build_graph, components
from .lines import DbeVerdict, Line, all_lines, check_dbe, find_universal_line, is_between, is_collinear, line_of
from .twins import (
    BlobPartition,
    BlobStats,
    SplitTrace,
    blob_stats,
    generate_instance,
    pullback_line,
    recognize_split_of_bipartite,
    split_vertex,
    true_twin_classes,
    twin_quotient,
)

__version__ = "0.1.0"
