"""Exact combinatorics of the geometric Satake correspondence.

Root data and Langlands duality, orbit combinatorics of the affine
Grassmannian, weight multiplicities as MV-cycle counts, and tensor product
decompositions as convolution.
"""

from .root_datum import (
    DatumError,
    FiniteAbelianGroup,
    InvariantForm,
    RootDatum,
    build_root_datum,
    dominance_leq,
    dominant_representative,
    dual,
    height2,
    invariant_form,
    iota,
    iota_order_check,
    pi1,
)
from .multiplicities import (
    MultiplicityTable,
    PoincareVector,
    freudenthal_table,
    ic_poincare,
    kostant_multiplicity,
    kostant_partition,
    mv_cycle_count,
    weight_diagram,
    weyl_dimension,
)
from .tensor import TensorTable, associativity_check, semismall_estimate_check, tensor_decompose, verify_support_and_top

__version__ = "0.1.0"
