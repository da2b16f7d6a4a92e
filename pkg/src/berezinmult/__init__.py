"""Exact weight multiplicities via reproducing kernels on flag manifolds."""
from .berezin import (
    HermitianForm,
    Kernel,
    MultiplicityResult,
    basic_kernel,
    coset_rep,
    hermitian_form,
    kernel_for_highest_weight,
    multiplicities,
    multiplicity,
    project_weight,
)
from .liealg import (
    ConsistencyError,
    DomainError,
    FundamentalRep,
    GroupSpec,
    RootDatum,
    UnsupportedAlgebra,
    build_rep,
    build_root_datum,
)
from .oracle import freudenthal_multiplicity, weight_system, weyl_dimension

__version__ = "0.1.0"
