"""k-balanced chromatic quasisymmetric functions of small graphs.

Two independent computation paths (coloring census and orientation /
P-partition expansion), closed forms for cycles and complete bipartite
graphs, the k-balanced chromatic polynomial over exact rationals, and
reciprocity at negative arguments.
"""

from .compositions import (
    Composition,
    SubsetOfRange,
    ascent_composition,
    composition_of,
    compositions_of,
    quasi_shuffles,
    refines,
    subset_of,
)
from .qsym import (
    FUNDAMENTAL,
    MONOMIAL,
    QSymElement,
    RationalPolynomial,
    evaluate,
    is_symmetric,
    l_to_m,
    m_to_l,
    multiply,
    specialize,
)
from .graphs import (
    Graph,
    complete_bipartite_graph,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    from_graph6,
    generator,
    girth,
    grotzsch_graph,
    path_graph,
    petersen_graph,
    simple_cycles,
    to_graph6,
)
from .orient import (
    Orientation,
    induced_orientation,
    is_k_balanced,
    k_balanced_orientations,
    poset_of,
)
from .posets import (
    Poset,
    kp,
    linear_extensions,
    natural_relabelling,
    order_polynomial,
    strict_order_polynomial,
)
from .chromatic import (
    chi_k,
    count_k_balanced_orientations,
    leading_coefficient_check,
    reciprocity_pairs,
    xk_complete_bipartite_closed_form,
    xk_cycle_closed_form,
    xk_via_colorings,
    xk_via_orientations,
)
from .errors import CycleCapExceeded, KBalanceError, SearchBudgetExceeded
from .kernels import BACKEND

__version__ = "0.1.0"
