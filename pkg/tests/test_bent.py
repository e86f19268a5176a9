"""Twin functions, Walsh spectra, duals, composition, difference sets."""

import json
import random

import pytest

from ctwin.algebra import SymmetryClass, classify, gamma
from ctwin.bent import (
    BoolFunc,
    DiffSetParams,
    dual,
    fwht,
    is_bent,
    predicted_params,
    sigma,
    sigma_function,
    tau,
    tau_function,
    tokareva_compose,
    verify_difference_set,
    walsh_transform,
)


# --- dense Sylvester oracle ----------------------------------------------

def dense_sylvester(n):
    h = [[1]]
    for _ in range(n):
        h = [row + row for row in h] + [row + [-x for x in row] for row in h]
    return h


def dense_wht(vec):
    h = dense_sylvester(len(vec).bit_length() - 1)
    return [sum(r * v for r, v in zip(row, vec)) for row in h]


def signed(f):
    return [1 - 2 * b for b in f.table()]


# --- sigma / tau ------------------------------------------------------------

def test_sigma_point_values():
    assert sigma(1, 0b01) == 1
    assert sigma(1, 0) == 0
    assert sigma(2, 0) == 0
    assert sigma(2, 0b0101) == 0
    assert sigma(2, 0b0111) == 1
    assert sigma(3, 0b010101) == 1


def test_tau_point_values():
    assert tau(1, 0b10) == 1
    assert tau(1, 0b01) == 0
    assert tau(2, 0) == 0
    assert tau(3, 0) == 0
    assert tau(2, 0b1000) == 1
    assert tau(2, 0b0101) == 1


def test_tau_table_m2_frozen():
    # quadrants tau_1 | sigma_1 | ~sigma_1 | tau_1
    assert tau_function(2).table() == [0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 0]
    assert sigma_function(2).table() == [0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0]


def test_tables_agree_with_point_rules():
    for m in (1, 2, 3, 4):
        sf, tf = sigma_function(m), tau_function(m)
        for i in range(1 << (2 * m)):
            assert sf(i) == sigma(m, i)
            assert tf(i) == tau(m, i)


def test_bit_rules_match_matrix_classes():
    for m in (1, 2, 3):
        for i in range(1 << (2 * m)):
            cls = classify(gamma(m, i))
            assert sigma(m, i) == (cls is SymmetryClass.SKEW)
            assert tau(m, i) == (cls is SymmetryClass.SYMMETRIC_OFF_DIAGONAL)


def test_supports_disjoint_with_diagonal_rest():
    for m in (1, 2, 3, 4, 5):
        sf, tf = sigma_function(m), tau_function(m)
        assert sf.bits & tf.bits == 0
        k = (1 << (2 * m - 1)) - (1 << (m - 1))
        assert sf.weight() == k
        assert tf.weight() == k
        zeros = (1 << (2 * m)) - sf.weight() - tf.weight()
        assert zeros == 1 << m


def test_index_range_checks():
    with pytest.raises(ValueError):
        sigma(1, 4)
    with pytest.raises(ValueError):
        tau(2, -1)
    with pytest.raises(ValueError):
        sigma(0, 0)


# --- transform ---------------------------------------------------------------

def test_walsh_constant_function():
    f = BoolFunc(2, 0)
    assert walsh_transform(f) == [4, 0, 0, 0]


def test_walsh_sigma1():
    assert walsh_transform(sigma_function(1)) == [2, 2, -2, 2]


def test_walsh_matches_dense_small():
    rng = random.Random(5)
    for n in (1, 2, 3, 4):
        for bits in [0, (1 << (1 << n)) - 1] + [
            rng.randrange(1 << (1 << n)) for _ in range(6)
        ]:
            f = BoolFunc(n, bits)
            assert walsh_transform(f) == dense_wht(signed(f))


def test_walsh_matches_dense_random_n10():
    rng = random.Random(9)
    f = BoolFunc(10, rng.randrange(1 << 1024))
    assert walsh_transform(f) == dense_wht(signed(f))


def test_fwht_involution_and_parseval():
    rng = random.Random(13)
    for n in (1, 4, 7, 10):
        size = 1 << n
        vec = [rng.randrange(-50, 50) for _ in range(size)]
        assert fwht(fwht(vec)) == [size * x for x in vec]
        f = BoolFunc(n, rng.randrange(1 << size))
        spec = walsh_transform(f)
        assert sum(w * w for w in spec) == size * size


def test_fwht_numpy_matches_python():
    rng = random.Random(17)
    for n in (6, 10, 14):
        vec = [rng.randrange(-3, 4) for _ in range(1 << n)]
        assert fwht(vec, impl="numpy") == fwht(vec, impl="python")


def test_fwht_rejects_bad_lengths():
    with pytest.raises(ValueError):
        fwht([1, 2, 3])
    with pytest.raises(ValueError):
        fwht([])
    with pytest.raises(ValueError):
        fwht([1, 2], impl="fortran")


# --- bentness and duals -----------------------------------------------------

def test_twins_are_bent():
    for m in (1, 2, 3, 4, 5):
        assert is_bent(sigma_function(m))
        assert is_bent(tau_function(m))


def test_non_bent_cases():
    assert not is_bent(BoolFunc(2, 0))
    assert not is_bent(BoolFunc(3, 0b01010101))  # odd arity


def test_dual_sigma1_is_tau1():
    assert dual(sigma_function(1)) == tau_function(1)
    assert dual(tau_function(1)) == sigma_function(1)


def test_dual_involution_and_complement():
    for m in (1, 2, 3, 4):
        for f in (sigma_function(m), tau_function(m)):
            assert dual(dual(f)) == f
            assert dual(f.complement()) == dual(f).complement()


def test_dual_rejects_non_bent():
    with pytest.raises(ValueError, match="not bent"):
        dual(BoolFunc(2, 0))
    with pytest.raises(ValueError, match="odd arity"):
        dual(BoolFunc(3, 1))


# --- composition -------------------------------------------------------------

def test_compose_reconstructs_tau2():
    s, t = sigma_function(1), tau_function(1)
    assert tokareva_compose(t, s, s.complement(), t) == tau_function(2)


def test_compose_dual_sum_is_all_ones():
    s, t = sigma_function(1), tau_function(1)
    acc = dual(t) ^ dual(s) ^ dual(s.complement()) ^ dual(t)
    assert acc.bits == (1 << acc.size) - 1


def test_compose_rejects_bad_inputs():
    s1, s2 = sigma_function(1), sigma_function(2)
    with pytest.raises(ValueError, match="arity mismatch"):
        tokareva_compose(s1, s1, s1, s2)
    with pytest.raises(ValueError, match="not bent"):
        tokareva_compose(s1, s1, s1, BoolFunc(2, 0))
    with pytest.raises(ValueError, match="dual-sum"):
        tokareva_compose(s1, s1, s1, s1)


# --- difference sets ---------------------------------------------------------

def test_difference_set_sigma1():
    assert verify_difference_set(sigma_function(1)).as_tuple() == (4, 1, 0, 1)


def test_difference_set_tau2():
    assert verify_difference_set(tau_function(2)).as_tuple() == (16, 6, 2, 4)


def test_difference_set_matches_prediction():
    for m in (1, 2, 3):
        expect = predicted_params(m)
        assert verify_difference_set(sigma_function(m)) == expect
        assert verify_difference_set(tau_function(m)) == expect
        assert expect.is_hadamard


def test_difference_set_rejects_non_example():
    f = BoolFunc.from_values(2, [1, 1, 0, 0])  # support {00, 01}
    with pytest.raises(ValueError, match="occurs 2 times.*occurs 0 times"):
        verify_difference_set(f)


def test_difference_set_preconditions():
    with pytest.raises(ValueError, match="empty"):
        verify_difference_set(BoolFunc(2, 0))
    with pytest.raises(ValueError, match="whole group"):
        verify_difference_set(BoolFunc(2, 0b1111))


def test_predicted_params_values():
    assert predicted_params(1).as_tuple() == (4, 1, 0, 1)
    assert predicted_params(2).as_tuple() == (16, 6, 2, 4)
    assert predicted_params(4).as_tuple() == (256, 120, 56, 64)


def test_diff_set_params_type_invariant():
    with pytest.raises(ValueError, match="k - lam"):
        DiffSetParams(4, 1, 0, 2)


# --- serialization ------------------------------------------------------------

def test_hex_roundtrip():
    assert sigma_function(1).hex() == "tt:2:2"
    assert tau_function(1).hex() == "tt:2:4"
    rng = random.Random(21)
    for n in (1, 2, 5, 8):
        f = BoolFunc(n, rng.randrange(1 << (1 << n)))
        assert BoolFunc.from_hex(f.hex()) == f


def test_hex_rejects_malformed():
    for bad in ("tt:2:100", "tt:2", "f:2:2", "tt:2:Z", "tt:0:1"):
        with pytest.raises(ValueError):
            BoolFunc.from_hex(bad)


def test_spectrum_is_json_serializable():
    spec = walsh_transform(sigma_function(2))
    assert json.loads(json.dumps(spec)) == spec
