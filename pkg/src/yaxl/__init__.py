"""Finite self-distributive structures and set-theoretic Yang-Baxter maps.

Submodules:

  fnmap          transformations of a finite carrier, relative inverses
  shelves        shelves, racks, quandles, quasi racks
  solutions      Yang-Baxter maps, quasi bijectivity, quasi non-degeneracy
  twists         generalized twists of shelves
  constructions  Clifford semigroups, weak braces, example factories
  plonka         Plonka sums of racks and the converse decomposition
  enumeration    isomorphism-free enumeration and counterexample searches
  serialization  text/JSON file formats
  cli            the ``yaxl`` command-line tool
"""

__version__ = "1.0.0"
