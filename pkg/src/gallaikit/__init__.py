"""Edge-colored complete graphs: colorful cycles, Gallai structure and monochromes."""

from .core import (
    ColoredClique,
    ColoringError,
    Cycle,
    Partition,
    SimpleGraph,
    colors_between,
    induced_subclique,
    is_colorful,
    validate,
)
from .spectrum import (
    Spectrum,
    check_spectrum_laws,
    colorful_lengths,
    find_colorful_cycle,
    has_colorful_cycle,
    monoid_closure,
    spectrum,
)
from .search import SearchResult, Status, search_coloring
from .gallai import (
    GallaiTree,
    NotGallaiError,
    Theorem4Report,
    TreeError,
    check_theorem4,
    decompose,
    find_inexact_triangle,
    find_rainbow_triangle,
    homogeneous_2_partition,
    is_exact_gallai,
    is_gallai,
    is_irreducible,
    max_exact_gallai_order,
    recompose,
    smallest_module,
    verify_exact_structure,
)
from .constructions import (
    even_gon_no_preceding,
    extremal_exact_gallai,
    gallai_host,
    named_graph,
    odd_gon_no_squares,
    simple_clique,
)
from .homomorphism import (
    DualityResult,
    FullHom,
    Monochrome,
    brute_force_full_hom,
    classify_monochrome,
    exists_full_hom,
    graph_type,
    is_exact_gallai_monochrome,
    is_full_hom,
    monochromes,
    reduced_form,
    spanning_monochrome,
    type_name,
)

__version__ = "0.1.0"
