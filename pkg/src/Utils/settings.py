"""
Size bounds for the workbench.

Every decider is polynomial in n; the bounds below only guard the parts that
enumerate (partitions, tables, orders, subsets).
"""

# Structures up to this size load and go through every decider
MAX_ELEMENTS = 12

# Bell(8) = 4140 partitions, still instant
MAX_CONGRUENCE_ENUM = 8

# Labeled enumeration of tables and orders
MAX_ENUMERATION = 4

# P_f(B) has 2^n - 1 elements
MAX_POWER_BASE = 4

# Builders never produce more than MAX_ELEMENTS elements
MAX_BUILDER = MAX_ELEMENTS

# P_f of a MAX_POWER_BASE-element band is loaded past MAX_ELEMENTS
MAX_POWER_ELEMENTS = 2 ** MAX_POWER_BASE - 1

# canonical_form tries every permutation
MAX_CANONICAL = 7
