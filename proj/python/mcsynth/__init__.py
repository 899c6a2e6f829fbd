"""Circuit synthesis for multi-controlled gates and incrementors.

The heavy lifting lives in the compiled extension; this package just
re-exports it.
"""

from mcsynth._core import (  # noqa: F401
    Circuit,
    CircuitError,
    QasmParseError,
    SimulationError,
    SynthesisError,
    classical_run,
    det_phase,
    from_qasm,
    incrementor,
    lower_to_basis,
    mcu_clean,
    mcu_dirty,
    mcx_clean,
    mcx_dirty,
    mcx_no_ancilla,
    oracle_incr,
    oracle_mcx,
    rz_fanout,
    scaling,
    to_qasm,
    unitary_of,
)

__all__ = [
    "Circuit",
    "CircuitError",
    "QasmParseError",
    "SimulationError",
    "SynthesisError",
    "classical_run",
    "det_phase",
    "from_qasm",
    "incrementor",
    "lower_to_basis",
    "mcu_clean",
    "mcu_dirty",
    "mcx_clean",
    "mcx_dirty",
    "mcx_no_ancilla",
    "oracle_incr",
    "oracle_mcx",
    "rz_fanout",
    "scaling",
    "to_qasm",
    "unitary_of",
]
