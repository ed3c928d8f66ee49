"""Exact verification of the Heisenberg algebra action on framed-sheaf moduli homology.

Combinatorial shadows only: symmetric functions stand in for the curve-supported
punctual cycles, a polynomial Fock space carries the Nakajima operators, and the
cohomology ring of a Grassmannian carries the excess-intersection computation.
"""

__version__ = "0.1.0"
