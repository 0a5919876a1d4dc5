"""Tests for state sampling, task construction and the task costs."""
import numpy as np
import pytest

from src.baselines import compile_to_device, swap_test_circuit, w_state_vector, w_tree_circuit
from src.circuits import ideal_unitary
from src.devices import builtin_gst_ourense, builtin_ideal, restrict
from src.exceptions import SampleSpecError, TaskMismatch
from src.models import Circuit, GateInstance, OE, SP, UC, X90, Z
from src.tasks import (
    CostEvaluator, cost_oe, cost_sp, cost_uc, gen_overlap_training, overlap, overlap_task,
    sample_states, state_prep_task, task_cost, unitary_task,
)


def make_training(n=20, seed=0):
    return gen_overlap_training(n, seed)


class TestSampling:

    def test_haar_normalized(self):
        psi = sample_states('haar_pure', 2, 10, seed=3)
        assert psi.shape == (10, 4)
        assert np.allclose(np.linalg.norm(psi, axis=1), 1.0)

    def test_hs_mixed_are_states(self):
        rhos = sample_states('hs_mixed', 1, 10, seed=3)
        for rho in rhos:
            assert np.isclose(np.trace(rho).real, 1.0)
            assert np.all(np.linalg.eigvalsh(rho) > -1e-12)

    def test_seeded(self):
        a = sample_states('haar_pure', 1, 5, seed=7)
        b = sample_states('haar_pure', 1, 5, seed=7)
        assert np.array_equal(a, b)

    def test_two_design_ignores_count(self):
        assert len(sample_states('two_design', 1, count=3)) == 6

    def test_bad_kind(self):
        with pytest.raises(SampleSpecError):
            sample_states('gaussian', 1, 3)

    def test_overlap_labels(self):
        training = make_training(10)
        for pair in training:
            rho, sigma = pair.inputs
            assert pair.label == pytest.approx(overlap(rho, sigma))
            assert 0.0 <= pair.label <= 1.0

    def test_pure_overlap_distribution(self):
        training = gen_overlap_training(5, 1, distribution='haar_pure')
        rho = training.pairs[0].inputs[0]
        assert np.trace(rho @ rho).real == pytest.approx(1.0)


class TestFactory:

    def test_overlap_task(self):
        task = overlap_task(make_training())
        assert task.kind == OE
        assert task.measured_qubit == 0 and task.data_qubits == (1, 2)

    def test_state_prep_task(self):
        task = state_prep_task(w_state_vector(4), 4, name='w4')
        assert task.kind == SP
        assert task.training.pairs[0].inputs == (None,)

    def test_unitary_task(self):
        task = unitary_task(np.eye(4), name='id')
        assert task.kind == UC and task.n_qubits == 2

    def test_bad_state(self):
        with pytest.raises(TaskMismatch):
            state_prep_task(np.ones(3), 2)


class TestOverlapCost:

    def test_swap_test_exact_on_ideal_device(self):
        task = overlap_task(make_training(30))
        estimates = CostEvaluator(task, builtin_ideal(3)).estimates(swap_test_circuit())
        assert np.allclose(estimates, task.training.labels(), atol=1e-9)
        assert cost_oe(task, swap_test_circuit(), builtin_ideal(3)) == pytest.approx(0.0, abs=1e-12)

    def test_noise_gives_positive_cost(self):
        task = overlap_task(make_training(30))
        device = restrict(builtin_gst_ourense(), [0, 1, 2])
        cost = cost_oe(task, compile_to_device(swap_test_circuit(), device), device)
        assert cost > 0

    def test_max_reduction(self):
        task = overlap_task(make_training(30))
        device = builtin_ideal(3)
        empty = Circuit(3)
        mean = CostEvaluator(task, device, 'mean')(empty)
        worst = CostEvaluator(task, device, 'max')(empty)
        assert worst >= mean

    def test_counts_evaluations(self):
        evaluator = CostEvaluator(overlap_task(make_training(5)), builtin_ideal(3))
        evaluator(Circuit(3))
        evaluator(Circuit(3))
        assert evaluator.n_evals == 2

    def test_task_device_mismatch(self):
        with pytest.raises(TaskMismatch):
            CostEvaluator(overlap_task(make_training(5)), builtin_ideal(2))

    def test_wrong_kind(self):
        with pytest.raises(TaskMismatch):
            cost_sp(overlap_task(make_training(5)), Circuit(3), builtin_ideal(3))


class TestStatePrepCost:

    def test_w_tree_perfect_on_ideal_device(self):
        for n in (3, 4, 5):
            task = state_prep_task(w_state_vector(n), n, noisy_prep=False)
            assert cost_sp(task, w_tree_circuit(n), builtin_ideal(n)) == pytest.approx(0.0, abs=1e-9)

    def test_noisy_prep_costs(self):
        # an empty circuit keeps |0>, so only the prep error remains
        d = restrict(builtin_gst_ourense(), [0])
        task = state_prep_task(np.array([1, 0], dtype=complex), 1)
        assert cost_sp(task, Circuit(1), d) == pytest.approx(0.0097, abs=1e-6)


class TestUnitaryCost:

    def test_exact_circuit(self):
        c = Circuit(1, (GateInstance(X90, (0,)), GateInstance(Z, (0,), 0.3)))
        task = unitary_task(ideal_unitary(c))
        assert cost_uc(task, c, builtin_ideal(1)) == pytest.approx(0.0, abs=1e-12)

    def test_methods_give_same_cost(self):
        c = Circuit(1, (GateInstance(X90, (0,)),))
        d = restrict(builtin_gst_ourense(), [0])
        costs = [task_cost(unitary_task(ideal_unitary(c), method=m), c, d)
                 for m in ('choi', 'pauli_sum', 'two_design')]
        assert np.allclose(costs, costs[0])
        assert costs[0] == pytest.approx(8.8e-4, rel=0.05)

    def test_for_structure(self):
        c = Circuit(1, (GateInstance(Z, (0,), 0.0),))
        task = unitary_task(np.diag([1, -1]))
        f = CostEvaluator(task, builtin_ideal(1)).for_structure(c)
        assert f([np.pi]) == pytest.approx(0.0, abs=1e-12)
        assert f([0.0]) > 0.5
