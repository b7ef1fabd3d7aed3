"""Conway-Coxeter friezes from triangulations, with entrywise mutation."""

__version__ = "0.1.0"

from .ar import (
    ext_nonzero,
    hom_nonzero,
    module_of,
    shape_via_construction,
    tau,
    tau_inv,
)
from .frieze import (
    Frieze,
    frieze_from_cc,
    frieze_from_dict,
    frieze_from_quiddity,
    frieze_to_dict,
    matching_number,
    render_ascii,
    validate_frieze,
)
from .mutation import (
    RegionTag,
    ZERO,
    classify,
    delta,
    delta_map,
    delta_report,
    mutate_frieze,
    project,
    rays,
    region_map,
)
from .polygon import (
    Chord,
    Triangulation,
    all_triangulations,
    chord,
    chord_crosses,
    parse_chord,
    parse_triangulation,
    triangulation,
    triangulation_from_dict,
    triangulation_to_dict,
)
from .quiver import Quiver, mutate_quiver, quiver, quiver_from_dict, quiver_of, quiver_to_dict
from .strings import (
    StringShape,
    StringWalk,
    admissible_subsets,
    parse_shape,
    parse_walk,
    reverse,
    s_bruteforce,
    s_formula,
    s_recursive,
    shape,
    shape_of,
    walk,
)
