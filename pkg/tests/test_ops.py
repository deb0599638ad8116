import itertools

import numpy as np
import pytest

import reference_sim as ref
from modalq import (
    GF2,
    ControlInTargetsError,
    FieldSpec,
    Gate2,
    I,
    MixedFieldError,
    NonInvertibleGateError,
    S,
    S_DAG,
    UnsupportedFieldError,
    X,
    apply_single,
    apply_single_raw,
    basis_state,
    compose,
    enumerate_1q_maps,
    fanout_cnot,
    from_coeffs,
    inverse,
    is_invertible,
    named_gate,
    one_qubit_action,
    tensor,
)

GF3 = FieldSpec(3)


def plus():
    return from_coeffs(1, [1, 1]).to_state()


def one_qubit_states():
    return {"0": basis_state(1, 0), "1": basis_state(1, 1), "+": plus()}


def test_named_gate_matrices():
    assert S.rows() == [[1, 0], [1, 1]]
    assert S_DAG.rows() == [[1, 1], [0, 1]]
    assert X.rows() == [[0, 1], [1, 0]]
    assert I.rows() == [[1, 0], [0, 1]]
    assert named_gate("S") == S


def test_named_gate_errors():
    with pytest.raises(ValueError):
        named_gate("H")
    with pytest.raises(UnsupportedFieldError):
        named_gate("S", field=GF3)


def test_s_action_table():
    # the six rows of the two action tables, frozen
    assert one_qubit_action(S) == {"0": "+", "1": "1", "+": "0"}
    assert one_qubit_action(S_DAG) == {"0": "0", "1": "+", "+": "1"}


def test_x_and_i_action_tables():
    assert one_qubit_action(X) == {"0": "1", "1": "0", "+": "+"}
    assert one_qubit_action(I) == {"0": "0", "1": "1", "+": "+"}


def test_action_table_matches_apply_single():
    states = one_qubit_states()
    for gate in (S, S_DAG, X, I):
        for name, img_name in one_qubit_action(gate).items():
            assert apply_single(gate, 0, states[name]) == states[img_name]


def test_s_gates_are_involutions():
    assert compose(S, S) == I
    assert compose(S_DAG, S_DAG) == I
    assert compose(X, X) == I
    for st in one_qubit_states().values():
        assert apply_single(S, 0, apply_single(S, 0, st)) == st
        assert apply_single(S_DAG, 0, apply_single(S_DAG, 0, st)) == st


def test_census_sixteen_maps_six_invertible():
    invertible, singular = enumerate_1q_maps()
    assert len(invertible) + len(singular) == 16
    assert len(invertible) == 6
    assert len(singular) == 10
    assert all(is_invertible(g) for g in invertible)
    assert not any(is_invertible(g) for g in singular)


def test_invertible_maps_form_the_permutation_group():
    invertible, _ = enumerate_1q_maps()
    perms = set()
    for g in invertible:
        action = one_qubit_action(g)
        assert None not in action.values()
        assert sorted(action.values()) == ["+", "0", "1"]  # a bijection
        perms.add(tuple(action[k] for k in ("0", "1", "+")))
    assert len(perms) == 6  # all 3! permutations, each exactly once
    # closure and inverses
    for g in invertible:
        assert any(compose(g, h) == I for h in invertible)
        for h in invertible:
            assert compose(g, h) in invertible
    assert I in invertible


def test_singular_maps_each_kill_a_state():
    _, singular = enumerate_1q_maps()
    states = one_qubit_states().values()
    for g in singular:
        assert any(apply_single_raw(g, 0, st).is_zero for st in states)
        with pytest.raises(NonInvertibleGateError):
            apply_single(g, 0, basis_state(1, 0))


def test_inverse_matches_search_over_invertibles():
    invertible, singular = enumerate_1q_maps()
    for g in invertible:
        by_search = [h for h in invertible if compose(h, g) == I and compose(g, h) == I]
        assert by_search == [inverse(g)]
    for g in singular:
        with pytest.raises(NonInvertibleGateError):
            inverse(g)


def test_apply_then_inverse_is_identity_on_random_states():
    rng = np.random.default_rng(31)
    invertible, _ = enumerate_1q_maps()
    for _ in range(50):
        m = int(rng.integers(1, 7))
        sup = rng.choice(1 << m, size=int(rng.integers(1, 1 << m)), replace=False)
        st = from_coeffs(m, {int(i): 1 for i in sup}).to_state()
        g = invertible[int(rng.integers(6))]
        q = int(rng.integers(m))
        assert apply_single(inverse(g), q, apply_single(g, q, st)) == st


def test_apply_single_frozen_examples():
    # S on the second wire of |0>|0> spreads the low bit
    st = apply_single(S, 1, basis_state(2, 0b00))
    assert st.support() == [0b00, 0b01]
    # S_DAG on the top wire of |1>|1>
    st = apply_single(S_DAG, 0, basis_state(2, 0b11))
    assert st.support() == [0b01, 0b11]


def test_apply_single_matches_reference_on_random_input():
    rng = np.random.default_rng(37)
    for _ in range(100):
        m = int(rng.integers(1, 8))
        vec = [int(v) for v in rng.integers(0, 2, size=1 << m)]
        if not any(vec):
            vec[0] = 1
        a, b, c, d = (int(v) for v in rng.integers(0, 2, size=4))
        g = Gate2(GF2, a, b, c, d)
        wire = int(rng.integers(m))
        expected = ref.apply_1q(vec, m, wire, g.rows())
        for backend in ("dense", "sparse"):
            v = from_coeffs(m, {i: 1 for i, c0 in enumerate(vec) if c0}, backend=backend)
            assert apply_single_raw(g, wire, v).support() == ref.support_of(expected)


def test_apply_single_wire_and_field_checks():
    with pytest.raises(IndexError):
        apply_single(S, 2, basis_state(2, 0))
    with pytest.raises(IndexError):
        apply_single(S, -1, basis_state(2, 0))
    with pytest.raises(MixedFieldError):
        apply_single(Gate2(GF3, 1, 0, 0, 1), 0, basis_state(1, 0))


def test_fanout_cnot_frozen_examples():
    # |1>|00>  ->  |1>|11>
    st = fanout_cnot(0, [1, 2], basis_state(3, 0b100))
    assert st.support() == [0b111]
    # (|1>|1> + |0>|0>)  ->  (|1>|0> + |0>|0>)
    st = fanout_cnot(0, [1], (basis_state(2, 0b11) + basis_state(2, 0b00)).to_state())
    assert st.support() == [0b00, 0b10]


def test_fanout_cnot_equals_chained_cnots():
    rng = np.random.default_rng(41)
    for _ in range(50):
        m = int(rng.integers(2, 8))
        sup = rng.choice(1 << m, size=int(rng.integers(1, 1 << m)), replace=False)
        st = from_coeffs(m, {int(i): 1 for i in sup}).to_state()
        control = int(rng.integers(m))
        targets = [t for t in range(m) if t != control and rng.integers(2)]
        chained = st
        for t in targets:
            chained = fanout_cnot(control, [t], chained)
        assert fanout_cnot(control, targets, st) == chained


def test_fanout_cnot_validation():
    st = basis_state(3, 0)
    with pytest.raises(ControlInTargetsError):
        fanout_cnot(0, [0, 1], st)
    with pytest.raises(IndexError):
        fanout_cnot(0, [3], st)
    with pytest.raises(IndexError):
        fanout_cnot(5, [1], st)
    # empty target list and duplicate targets are both fine
    assert fanout_cnot(0, [], st) == st
    assert fanout_cnot(0, [1, 1], st) == fanout_cnot(0, [1], st)


def test_fanout_cnot_is_involutive():
    st = from_coeffs(4, {3: 1, 9: 1, 14: 1}).to_state()
    once = fanout_cnot(1, [0, 2, 3], st)
    assert fanout_cnot(1, [0, 2, 3], once) == st


def test_compose_applies_right_operand_first():
    # compose(g, h) acting on v equals g(h(v))
    invertible, _ = enumerate_1q_maps()
    st = plus()
    for g in invertible:
        for h in invertible:
            assert apply_single(compose(g, h), 0, st) == apply_single(
                g, 0, apply_single(h, 0, st)
            )


def test_gate_entries_validated():
    with pytest.raises(ValueError):
        Gate2(GF2, 2, 0, 0, 1)
    with pytest.raises(MixedFieldError):
        compose(S, Gate2(GF3, 1, 0, 0, 1))


def test_gf3_gate_inverse_by_adjugate():
    g = Gate2(GF3, 1, 2, 1, 1)  # det = 1 - 2 = -1 = 2, invertible
    assert g.is_invertible
    ginv = inverse(g)
    assert compose(g, ginv) == Gate2(GF3, 1, 0, 0, 1)
    assert compose(ginv, g) == Gate2(GF3, 1, 0, 0, 1)


def test_enumeration_is_gf2_only():
    with pytest.raises(UnsupportedFieldError):
        enumerate_1q_maps(GF3)


def test_gates_on_disjoint_wires_commute():
    st = tensor(tensor(plus(), basis_state(1, 1)), plus()).to_state()
    a = apply_single(S, 0, apply_single(S_DAG, 2, st))
    b = apply_single(S_DAG, 2, apply_single(S, 0, st))
    assert a == b
