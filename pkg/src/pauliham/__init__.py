"""Common +1 eigenstates of commuting signed Pauli words.

Given pairwise-commuting n-qubit Pauli words with +-1 signs, this package
decides in polynomial time whether a state exists that all of them fix
with eigenvalue +1, and emits checkable evidence either way: witness
stabilizer generators for YES, or a subset of inputs multiplying to -I
for NO.
"""

from .clifford import (
    CliffordCircuit,
    CnotLayer,
    DiagonalLayer,
    Gate,
    GateRun,
    apply_circuit,
    apply_cx,
    apply_cz,
    apply_h,
    apply_s,
    apply_swap,
    invert,
)
from .errors import (
    ClosureBoundError,
    CommutationError,
    InstanceFormatError,
    OracleLimitError,
    PauliHamError,
    PauliSyntaxError,
    PromiseViolationError,
)
from .instances import TorusLattice, random_commuting, toric_code, toric_code_flipped
from .oracle import (
    DenseOperator,
    closure_contains_minus_identity,
    dense,
    groundspace_dim,
)
from .pauli import PauliWord, format_pauli, g, multiply, parse_pauli, symplectic_inner
from .solver import (
    MinusIdentityFound,
    Verdict,
    check_b2_zero,
    clear_b1,
    decide,
    extract_witness,
    gauss_x_block,
    hadamard_tail,
    kernel_decide,
    verify_certificate,
    verify_witness,
)
from .tableau import (
    Instance,
    Tableau,
    format_instance,
    parse_instance,
    read_instance,
    validate_commuting,
    write_instance,
)
from ._kernels import active_backend, available_backends, set_backend

__version__ = "0.1.0"

__all__ = [
    "CliffordCircuit",
    "ClosureBoundError",
    "CnotLayer",
    "CommutationError",
    "DenseOperator",
    "DiagonalLayer",
    "Gate",
    "GateRun",
    "Instance",
    "InstanceFormatError",
    "MinusIdentityFound",
    "OracleLimitError",
    "PauliHamError",
    "PauliSyntaxError",
    "PauliWord",
    "PromiseViolationError",
    "Tableau",
    "TorusLattice",
    "Verdict",
    "active_backend",
    "apply_circuit",
    "apply_cx",
    "apply_cz",
    "apply_h",
    "apply_s",
    "apply_swap",
    "available_backends",
    "check_b2_zero",
    "clear_b1",
    "closure_contains_minus_identity",
    "decide",
    "dense",
    "extract_witness",
    "format_instance",
    "format_pauli",
    "g",
    "gauss_x_block",
    "groundspace_dim",
    "hadamard_tail",
    "invert",
    "kernel_decide",
    "multiply",
    "parse_instance",
    "parse_pauli",
    "random_commuting",
    "read_instance",
    "set_backend",
    "symplectic_inner",
    "toric_code",
    "toric_code_flipped",
    "validate_commuting",
    "verify_certificate",
    "verify_witness",
    "write_instance",
]
