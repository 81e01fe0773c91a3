"""Frozen expected values shared by the verification suites.

Q54_PROFILE is the adjacency profile (n_0..n_5) observed on Q(5,4) by
brute force; only n_5 = 3 is forced abstractly, the rest is a regression
oracle for this construction.
"""

Q54_PROFILE = (36, 45, 120, 0, 0, 3)
SRG_PARAMS = (325, 68, 3, 17)
LAMBDA_VECTOR = (204, 60, 15, 3)
DERIVED_LAMBDAS = (60, 15, 3)
