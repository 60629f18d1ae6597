"""
Kronecker Domain Package

Partitions, the symmetric-group character oracle, Kronecker / reduced
Kronecker / Littlewood-Richardson coefficients, Deligne-category
combinatorics at integer parameters and the identity suites.

Layout mirrors the rest of src/: value types under ``models``, pure
operations under ``services``.
"""
