"""Extension-count bound estimators and minimal fingerprints."""

import itertools

import pytest
from helpers import scaled_params

from orientcount import (
    BudgetRefusal,
    Frame,
    Graph,
    Orientation,
    PreconditionError,
    count_propagate,
    dense_case_bound,
    enumerate_cfree,
    estimate_dense_case,
    estimate_sparse_case,
    fingerprint_split,
    has_directed_cycle,
    independent_in_power,
    is_r_locally_dense,
    mask_of,
    minimal_fingerprint,
    per_vertex_rate,
    sample_extension,
    sample_gnp,
    sample_orientation,
    sparse_case_bound,
    validate_frame,
)


def transitive_orientation(g):
    rows = [0] * g.n
    for u, v in g.edges():
        rows[u] |= 1 << v
    return Orientation._from_rows(g, rows)


def sparse_setup(seed, p=0.4):
    """alpha = 2, ell = 2, host on 10 of 11 ground vertices, one hub."""
    params = scaled_params(2, p, 11, 2.0)
    h = sample_gnp(11, p, seed).induced(mask_of(range(10)))
    frame = Frame(mask_of([10]), h, mask_of([0, 1, 2, 3]), mask_of([4]), r=2)
    assert validate_frame(frame, params)
    return params, h, frame


class TestSparseCase:
    def test_report_shape_and_bound(self):
        params, h, frame = sparse_setup(3)
        h_orient = sample_orientation(h, 1)
        report = estimate_sparse_case(h_orient, frame, params, trials=2, seed=9)
        assert report.sample_mean <= report.bound
        assert report.samples == 2
        assert len(report.trial_counts) == 2
        assert report.params_used == params

    def test_counts_match_direct_filtering(self):
        params, h, frame = sparse_setup(5)
        h_orient = sample_orientation(h, 2)
        report = estimate_sparse_case(h_orient, frame, params, trials=3, seed=21)
        # recompute one trial by explicit enumeration
        from orientcount import is_sparse_extension
        from orientcount.extensions import _graph_is_1_dense

        g = sample_extension(frame.A, frame.H, params.p, 21)
        expected = 0
        if _graph_is_1_dense(g, params, 10**7):
            for o in enumerate_cfree(g, 4, fixed_arcs=list(h_orient.arcs())):
                if is_sparse_extension(o, frame, params):
                    expected += 1
        assert report.trial_counts[0] == expected
        assert report.sample_mean <= report.bound
        assert report.vacuous_trials == sum(1 for c in report.trial_counts if c == 0)

    def test_invalid_frame_rejected(self):
        params, h, frame = sparse_setup(1)
        bad = Frame(frame.A, h, frame.B | frame.X, frame.X, r=2)
        h_orient = sample_orientation(h, 1)
        with pytest.raises(PreconditionError):
            estimate_sparse_case(h_orient, bad, params, trials=1, seed=0)

    def test_free_edge_budget_refusal(self):
        params, h, frame = sparse_setup(2, p=1.0)
        # p = 1 attaches the hub to all ten host vertices
        params1 = scaled_params(2, 1.0, 11, 2.0)
        h1 = sample_gnp(11, 1.0, 2).induced(mask_of(range(10)))
        frame1 = Frame(mask_of([10]), h1, mask_of([0, 1, 2, 3]), mask_of([4]), r=2)
        h_orient = transitive_orientation(h1)
        with pytest.raises(BudgetRefusal):
            estimate_sparse_case(
                h_orient, frame1, params1, trials=1, seed=0, free_edge_limit=3
            )


class TestDenseCase:
    def test_empty_hub_set_single_extension(self):
        params = scaled_params(1, 0.9, 6, 1.5)
        h = Graph.complete(6)
        h_orient = transitive_orientation(h)  # 3-cycle-free
        report = estimate_dense_case(h_orient, 0, params, trials=1, seed=0)
        assert report.trial_counts == (1,)
        assert report.sample_mean <= report.bound

    def test_p_one_matches_bruteforce_oracle(self):
        # with p = 1 the sampled graph is deterministic; compare against a
        # direct scan of all orientations of the new edges
        params = scaled_params(1, 1.0, 7, 1.5)
        h = Graph.complete(6).induced(mask_of(range(6)))
        h6 = sample_gnp(7, 1.0, 0).induced(mask_of(range(6)))
        h_orient = transitive_orientation(h6)
        A = mask_of([6])
        report = estimate_dense_case(h_orient, A, params, trials=1, seed=5)

        g = sample_extension(A, h6, 1.0, 5)
        new_edges = [e for e in g.edges() if 6 in e]
        fixed = list(h_orient.arcs())
        expected = 0
        for dirs in itertools.product((0, 1), repeat=len(new_edges)):
            arcs = list(fixed)
            for (u, v), d in zip(new_edges, dirs):
                arcs.append((u, v) if d == 0 else (v, u))
            o = Orientation(g, arcs)
            if has_directed_cycle(o.to_digraph(), 3):
                continue
            if not is_r_locally_dense(o, 1, params, 10**7).dense:
                continue
            expected += 1
        assert report.trial_counts[0] == expected

    def test_scaled_sweep_never_violates_bound(self):
        params = scaled_params(2, 0.35, 11, 2.0)
        h = sample_gnp(11, 0.35, 8).induced(mask_of(range(10)))
        h_orient = sample_orientation(h, 3)
        report = estimate_dense_case(
            h_orient, mask_of([10]), params, trials=3, seed=40
        )
        assert report.sample_mean <= report.bound
        assert report.case == "locally_dense_ii"

    def test_bound_formulas(self):
        params = scaled_params(2, 0.25, 16, 2.0)
        import math

        a, p, n, ell = params.alpha, params.p, params.n, params.ell
        assert sparse_case_bound(params) == pytest.approx(
            math.exp(9 * a * p ** (-1 / ell) * math.log(n))
        )
        assert dense_case_bound(params) == pytest.approx(
            math.exp(a * (ell + 2) * p ** (-1 / ell) * math.log(n) ** 2)
        )
        assert per_vertex_rate(params) == pytest.approx(
            math.exp(4 * (ell + 2) * p ** (-1 / ell) * math.log(n) ** 2)
        )
        # full-scale constants overflow to inf rather than raising
        assert dense_case_bound(scaled_params(1, 1e-4, 10**6, 10.0)) == float("inf")


class TestMinimalFingerprint:
    def make_instance(self, seed):
        g = sample_gnp(7, 0.6, seed)
        hv = mask_of(range(6))
        for o in enumerate_cfree(g, 3):
            return g, hv, o
        return None

    def test_uniqueness_and_minimality(self):
        g, hv, o = self.make_instance(2)
        T = minimal_fingerprint(o, hv, 3)
        h_arcs = [(u, v) for u, v in o.arcs() if ((hv >> u) & 1) and ((hv >> v) & 1)]
        assert count_propagate(g, 3, fixed_arcs=h_arcs + T).count == 1
        for arc in T:
            rest = [a for a in T if a != arc]
            assert count_propagate(g, 3, fixed_arcs=h_arcs + rest).count > 1

    def test_fingerprint_subset_of_new_arcs(self):
        g, hv, o = self.make_instance(4)
        T = minimal_fingerprint(o, hv, 3)
        for u, v in T:
            assert not (((hv >> u) & 1) and ((hv >> v) & 1))
            assert o.to_digraph().has_arc(u, v)

    def test_hub_neighborhoods_independent_in_power(self):
        # minimality forces the fingerprint's out- and in-neighborhoods of
        # the new vertex to be independent in the ell-power of the host
        found = 0
        for seed in range(20):
            inst = self.make_instance(seed)
            if inst is None:
                continue
            g, hv, o = inst
            for k in (3, 4):
                ell = k - 2
                T = minimal_fingerprint(o, hv, k)
                h_orient = o.restricted_to(hv)
                t_plus, t_minus = fingerprint_split(T, 6)
                assert independent_in_power(h_orient, ell, t_plus & hv)
                assert independent_in_power(h_orient, ell, t_minus & hv)
                found += 1
        assert found >= 10

    def test_cyclic_orientation_rejected(self):
        g = Graph.complete(3)
        o = Orientation(g, [(0, 1), (1, 2), (2, 0)])
        with pytest.raises(PreconditionError):
            minimal_fingerprint(o, mask_of([0, 1]), 3)
