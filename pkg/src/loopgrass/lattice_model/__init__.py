"""Lattice realization of loop-group cosets for GL_n (and SL_n as the
determinant-one, component-zero sublocus)."""

from .birkhoff import (BirkhoffWitness, ChartTranslate, birkhoff_factorize,
                       find_chart_translate, in_big_cell)
from .loops import based_loop, count_lattices_in_window, gaussian_binomial
from .window import (WindowLattice, cartan_coweight, equal_in_gr, lattice_of,
                     torus_point, window_radius)

__all__ = [
    "BirkhoffWitness", "ChartTranslate", "birkhoff_factorize",
    "find_chart_translate", "in_big_cell", "based_loop",
    "count_lattices_in_window", "gaussian_binomial", "WindowLattice",
    "cartan_coweight", "equal_in_gr", "lattice_of", "torus_point",
    "window_radius",
]
