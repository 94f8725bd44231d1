"""degpoly: degree polynomials of graph vertices, their behavior under
graph operations, and realizability of polynomial sequences.

The degree polynomial of a vertex v is the polynomial whose coefficient of
x^i counts the neighbors of v having degree i.  Collecting these over all
vertices of a graph (without isolated vertices) yields its degree
polynomial sequence, a strictly finer invariant than the degree sequence.
"""

from .dp import (
    DpReport,
    OperationCheck,
    PolySequence,
    cartesian_formula,
    closed_form_sequence,
    complement_formula,
    degree_polynomial,
    degree_polynomial_sequence,
    dp_report,
    graph_degree_polynomial,
    join_formula,
    lexicographic_formula,
    regularity_from_sequence,
    tensor_formula,
    verify_operation,
)
from .errors import DegpolyError
from .graphs import (
    CanonicalForm,
    OpKind,
    SimpleGraph,
    apply_operation,
    canonical_form,
    cartesian_product,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    emit_dot,
    empty_graph,
    family,
    from_edge_list,
    join,
    lexicographic_product,
    path_graph,
    tensor_product as tensor_product_graph,
)
from .poly import (
    CoeffStats,
    DegreePoly,
    coeff_stats,
    coeff_sum,
    compare_polys,
    format_poly,
    parse_poly,
    reflect_exponents,
    scale_exponents,
    sort_polys_desc,
    tensor_product,
)
from .realizability import (
    BasicFacts,
    ClassifiedSequence,
    ConditionReport,
    RealizabilityReport,
    Witness,
    any_graph_exists,
    basic_facts,
    classify_all,
    count_labeled_graphs,
    degree_projection,
    erdos_gallai,
    havel_hakimi,
    iter_graphs_without_isolated_vertices,
    iter_labeled_graphs,
    necessary_conditions,
    realize,
)

__version__ = "0.1.0"

__all__ = [
    "BasicFacts",
    "CanonicalForm",
    "ClassifiedSequence",
    "CoeffStats",
    "ConditionReport",
    "DegpolyError",
    "DegreePoly",
    "DpReport",
    "OpKind",
    "OperationCheck",
    "PolySequence",
    "RealizabilityReport",
    "SimpleGraph",
    "Witness",
    "any_graph_exists",
    "apply_operation",
    "basic_facts",
    "canonical_form",
    "cartesian_formula",
    "cartesian_product",
    "classify_all",
    "closed_form_sequence",
    "coeff_stats",
    "coeff_sum",
    "compare_polys",
    "complement",
    "complement_formula",
    "complete_bipartite_graph",
    "complete_graph",
    "count_labeled_graphs",
    "cycle_graph",
    "degree_polynomial",
    "degree_polynomial_sequence",
    "degree_projection",
    "dp_report",
    "emit_dot",
    "empty_graph",
    "erdos_gallai",
    "family",
    "format_poly",
    "from_edge_list",
    "graph_degree_polynomial",
    "havel_hakimi",
    "iter_graphs_without_isolated_vertices",
    "iter_labeled_graphs",
    "join",
    "join_formula",
    "lexicographic_formula",
    "lexicographic_product",
    "necessary_conditions",
    "parse_poly",
    "path_graph",
    "realize",
    "reflect_exponents",
    "regularity_from_sequence",
    "scale_exponents",
    "sort_polys_desc",
    "tensor_formula",
    "tensor_product",
    "tensor_product_graph",
    "verify_operation",
]
