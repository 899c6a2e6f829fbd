# Copyright 2026 mcsynth contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import numpy as np
import pytest

import mcsynth


def test_mcx_clean_flips_on_all_ones():
    c = mcsynth.mcx_clean(8)
    assert c.num_qubits == 10
    out = mcsynth.classical_run(c, "1" * 8 + "00")
    assert out == "1" * 8 + "01"
    # one zero control: nothing happens
    inp = "1110111" + "1" + "00"
    assert mcsynth.classical_run(c, inp) == inp


def test_mcx_clean_matches_oracle_randomly():
    rng = np.random.default_rng(7)
    c = mcsynth.mcx_clean(64)
    for _ in range(50):
        x = "".join(rng.choice(["0", "1"], size=64)) + "0" + "0"
        got = mcsynth.classical_run(c, x)
        want = x[:64] + "0" + ("1" if x[:64] == "1" * 64 else "0")
        assert got == want


def test_incrementor_wraps():
    c = mcsynth.incrementor(16)
    out = mcsynth.classical_run(c, "1" * 16 + "0")
    assert out == "0" * 16 + "0"
    assert mcsynth.oracle_incr(4, "1001") == "0101"


def test_report_fields():
    r = mcsynth.mcx_no_ancilla(6).report()
    assert r["ancilla_clean"] == 0 and r["ancilla_dirty"] == 0
    assert r["det_phase"] == "1/1"
    assert r["max_denominator"] == "32"
    r2 = mcsynth.lower_to_basis(mcsynth.mcx_clean(6)).report()
    assert int(r2["max_denominator"]) <= 4


def test_unitary_mcx_no_ancilla_small():
    c = mcsynth.mcx_no_ancilla(3)
    u = mcsynth.unitary_of(c)
    expect = np.eye(16, dtype=complex)
    expect[[7, 15]] = expect[[15, 7]]
    assert np.max(np.abs(u - expect)) < 1e-8


def test_qasm_round_trip():
    c = mcsynth.incrementor(8)
    text = mcsynth.to_qasm(c)
    again = mcsynth.to_qasm(mcsynth.from_qasm(text))
    assert text == again


def test_lowering_is_basis_level():
    low = mcsynth.lower_to_basis(mcsynth.mcx_clean(5))
    assert low.level == "basis"
    assert low.size > 0


def test_mcu_dirty_rejects_non_involution():
    with pytest.raises(mcsynth.SynthesisError):
        mcsynth.mcu_dirty(6, "phase", (1, 3))
    mcsynth.mcu_dirty(6, "phase", (1, 1))  # a Z base is fine


def test_scaling_rows():
    rows = mcsynth.scaling("mcx_clean", [8, 16, 32])
    assert [r["n"] for r in rows] == [8, 16, 32]
    assert rows[2]["depth_diff"] == rows[2]["depth_mcx"] - rows[1]["depth_mcx"]
