"""Ad-nilpotent ideals of Borel subalgebras, combinatorially.

Enumerate and classify the ideals of a positive root poset, construct
the minimal/maximal/minimax elements of the affine Weyl group attached
to them, and count minimax elements by lattice points in polytopes.
"""

from .rootsys import AffineRoot, Root, RootSystem, build
from .ideals import (
    Antichain,
    Ideal,
    enumerate_ideals,
    generators,
    ideal_of,
    is_abelian,
    is_minimax,
    is_strictly_positive,
    k_value,
    l_value,
    power,
    xi,
)
from .affine import (
    AffineWeylElement,
    FiniteWeylElement,
    first_layer_ideal,
    is_dominant,
    is_maximal,
    is_minimal,
    is_minimax_element,
    lattice_image,
    rootlet,
    w_max,
    w_min,
)
from .heisenberg import HeisenbergElementDescriptor, heisenberg_ideal
from .lattice_count import (
    CountReport,
    count_AD,
    count_AD0,
    count_minimax,
    directed_animals,
    haiman_count,
    motzkin,
    trinomial,
)

__version__ = "0.1.0"

__all__ = [
    "AffineRoot", "Root", "RootSystem", "build",
    "Antichain", "Ideal", "enumerate_ideals", "generators", "ideal_of",
    "is_abelian", "is_minimax", "is_strictly_positive", "k_value", "l_value",
    "power", "xi",
    "AffineWeylElement", "FiniteWeylElement", "first_layer_ideal",
    "is_dominant", "is_maximal", "is_minimal", "is_minimax_element",
    "lattice_image", "rootlet", "w_max", "w_min",
    "HeisenbergElementDescriptor", "heisenberg_ideal",
    "CountReport", "count_AD", "count_AD0", "count_minimax",
    "directed_animals", "haiman_count", "motzkin", "trinomial",
]
