"""Exact matrix representations of virtual and welded braid groups.

Modules:
    words          free-group words, automorphisms, the Artin action
    presentations  relator catalogs, xi_{i,j} words, the twin isomorphism
    laurent        integer Laurent polynomials in named parameters
    galgebra       group-algebra elements and matrices over them
    fox            Fox free differential calculus
    burau          the parameterized Burau variant of VB_n
    gassner        generalized Gassner matrices and their iteration
    verify         relator-by-relator verification reports
"""

__version__ = "0.1.0"
