"""Primitive roots of primes, constructed from elements of prime-power order."""

from .fieldcore import (
    MODULUS_BOUND,
    FieldElement,
    divides,
    field_add,
    field_div,
    field_inv,
    field_mul,
    field_neg,
    field_pow,
    gcd,
    least_divisor,
    primep,
    relatively_primep,
    require_prime,
)
from .order import PowerTrace, all_powers, exists_smaller_power_eq_1, order, order_fast
from .orderconstruct import (
    PrimePowerFactor,
    number_of_powers,
    product_order_compose,
    witness_with_order_q_n,
)
from .polycong import (
    degree,
    divide_by_x_plus_a,
    eval_pfield_polynomial,
    fermat_poly,
    geometric_block_poly,
    non_trivial_pfield_polynomial_p,
    normalize,
    pfield_polynomial_num_roots,
    pfield_polynomial_root_p,
    pfield_polynomial_roots,
    poly_add,
    poly_mul,
    root_of_linear,
)
from .proot import (
    PeelStep,
    PrimitiveRootResult,
    count_primitive_roots,
    decompose_with_witnesses,
    is_primitive_root,
    primitive_root,
    primitive_root_aux,
    totient,
)

__version__ = "0.1.0"
