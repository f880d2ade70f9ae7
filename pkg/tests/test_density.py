"""Local-density checkers, frames, and the moment inequality."""

import itertools
import math

import numpy as np
import pytest

from orientcount import (
    Frame,
    Graph,
    Params,
    PreconditionError,
    bits,
    is_r_locally_dense,
    is_sparse_extension,
    mask_of,
    moment_bound_check,
    sample_extension,
    sample_gnp,
    sample_orientation,
    size,
    validate_frame,
)


def scaled_params(ell, p, n, alpha_target):
    return Params(ell=ell, p=p, n=n, alpha_scale=alpha_target * p / math.log(n))


class TestParams:
    def test_alpha_formula(self):
        params = Params(ell=2, p=0.5, n=20)
        assert params.alpha == pytest.approx(64 * math.log(20) / 0.5)
        assert params.alpha > 0

    def test_regime_flag(self):
        # boundary (2^7 * ell)^(-ell) for ell = 1 is 1/128
        assert Params(ell=1, p=0.5, n=10).outside_regime
        assert not Params(ell=1, p=1 / 256, n=10).outside_regime

    def test_validation(self):
        with pytest.raises(PreconditionError):
            Params(ell=0, p=0.5, n=10)
        with pytest.raises(PreconditionError):
            Params(ell=1, p=0.0, n=10)
        with pytest.raises(PreconditionError):
            Params(ell=1, p=0.5, n=1)
        with pytest.raises(PreconditionError):
            Params(ell=1, p=0.5, n=10, alpha_scale=0)

    def test_rounded_sizes(self):
        params = scaled_params(2, 0.5, 12, 2.0)  # alpha = 2 exactly
        assert params.a_prime_size == 2
        assert params.a_size == 1
        assert params.b_min(2) == 4
        assert params.b_max == 4
        assert params.x_max(2) == 2


class TestFrameValidation:
    def setup_method(self):
        self.params = scaled_params(2, 0.5, 12, 2.0)  # alpha = 2
        self.h = sample_gnp(12, 0.5, 3).induced(mask_of(range(10)))

    def test_valid_frame(self):
        f = Frame(mask_of([10]), self.h, mask_of([0, 1, 2, 3]), 0, r=2)
        assert validate_frame(f, self.params)

    def test_b_too_large(self):
        f = Frame(mask_of([10]), self.h, mask_of([0, 1, 2, 3, 4]), 0, r=2)
        assert not validate_frame(f, self.params)

    def test_b_intersecting_x(self):
        f = Frame(mask_of([10]), self.h, mask_of([0, 1, 2, 3]), mask_of([3]), r=2)
        assert not validate_frame(f, self.params)

    def test_a_overlapping_host(self):
        f = Frame(mask_of([9]), self.h, mask_of([0, 1, 2, 3]), 0, r=2)
        assert not validate_frame(f, self.params)

    def test_wrong_a_size(self):
        f = Frame(mask_of([10, 11]), self.h, mask_of([0, 1, 2, 3]), 0, r=2)
        assert not validate_frame(f, self.params)

    def test_r_out_of_range(self):
        f = Frame(mask_of([10]), self.h, mask_of([0, 1, 2, 3]), 0, r=3)
        assert not validate_frame(f, self.params)


class TestLocalDensity:
    def test_complete_graph_dense(self):
        params = scaled_params(1, 0.8, 10, 2.0)
        o = sample_orientation(Graph.complete(10), 1)
        verdict = is_r_locally_dense(o, 1, params, budget=10**6)
        assert verdict.dense and verdict.exhaustive and verdict.witness is None

    def test_empty_graph_sparse_with_witness(self):
        params = scaled_params(1, 0.8, 10, 2.0)
        o = sample_orientation(Graph.empty(10), 1)
        verdict = is_r_locally_dense(o, 1, params, budget=10**6)
        assert not verdict.dense
        assert verdict.witness is not None

    def test_witness_present_iff_sparse(self):
        params = scaled_params(1, 0.7, 12, 2.0)
        for seed in range(12):
            o = sample_orientation(sample_gnp(12, 0.7, seed), seed)
            v = is_r_locally_dense(o, 1, params, budget=10**6)
            assert (v.witness is None) == v.dense

    def test_witness_sound_independent_recount(self):
        # a reported witness must violate the bound when recomputed directly
        params = scaled_params(1, 0.8, 10, 2.0)
        o = sample_orientation(sample_gnp(10, 0.3, 7), 7)
        v = is_r_locally_dense(o, 1, params, budget=10**6)
        assert not v.dense
        Am, Bm, Xm = v.witness
        d = o.to_digraph()
        e_bidir = 0
        for a in bits(Am):
            for b in bits(Bm):
                e_bidir += (d.succ(a) >> b) & 1
                e_bidir += (d.pred(a) >> b) & 1
        need = 0.5 * params.p * size(Am) * size(Bm)
        assert e_bidir < need
        assert (Am & Bm) == 0 and (Am & Xm) == 0 and (Bm & Xm) == 0

    def test_orientation_independence_r1(self):
        params = scaled_params(1, 0.6, 9, 2.0)
        for seed in range(8):
            g = sample_gnp(9, 0.6, seed)
            verdicts = {
                is_r_locally_dense(
                    sample_orientation(g, s), 1, params, budget=10**7
                ).dense
                for s in (1, 2, 3)
            }
            assert len(verdicts) == 1

    def test_vacuous_when_alpha_too_large(self):
        params = Params(ell=1, p=0.5, n=6, alpha_scale=64.0)  # alpha huge
        o = sample_orientation(Graph.complete(6), 0)
        v = is_r_locally_dense(o, 1, params, budget=100)
        assert v.dense and v.pairs_checked == 0 and v.exhaustive

    def test_r_out_of_range_rejected(self):
        params = scaled_params(1, 0.5, 8, 2.0)
        o = sample_orientation(Graph.complete(8), 0)
        with pytest.raises(PreconditionError):
            is_r_locally_dense(o, 2, params, budget=100)

    def test_incomplete_orientation_rejected(self):
        params = scaled_params(1, 0.5, 8, 2.0)
        from orientcount import Orientation

        o = Orientation(Graph(8, [(0, 1)]))
        with pytest.raises(PreconditionError):
            is_r_locally_dense(o, 1, params, budget=100)

    def test_sampled_mode_montecarlo_trend(self):
        # At alpha ~ 4, n = 40, dense p, the sampled verdict should call at
        # least 90% of seeded orientations 1-locally-dense.
        n, p = 40, 0.9
        params = scaled_params(1, p, n, 4.0)
        assert params.a_prime_size == 4
        dense = 0
        for seed in range(100):
            o = sample_orientation(sample_gnp(n, p, seed), seed)
            v = is_r_locally_dense(o, 1, params, budget=1500, seed=seed)
            assert not v.exhaustive
            dense += v.dense
        assert dense >= 90

    def test_r2_exhaustive_small(self):
        # r = 2 path: exhaustive enumeration incl. X; just consistency checks
        params = scaled_params(2, 0.6, 8, 1.0)  # alpha = 1
        g = sample_gnp(8, 0.6, 5)
        o = sample_orientation(g, 5)
        v = is_r_locally_dense(o, 2, params, budget=10**6, seed=1)
        assert v.exhaustive
        assert (v.witness is None) == v.dense


def path_exists_oracle(o, X, r, a, b):
    """Simple directed r-path from a to b avoiding X, by explicit enumeration."""
    d = o.to_digraph()
    verts = [v for v in bits(o.base.verts) if not ((X >> v) & 1)]
    if ((X >> a) & 1) or ((X >> b) & 1):
        return False
    for mids in itertools.permutations([v for v in verts if v not in (a, b)], r - 1):
        seq = (a,) + mids + (b,)
        if all(d.has_arc(seq[i], seq[i + 1]) for i in range(r)):
            return True
    return False


class TestSparseExtension:
    def make_instance(self, seed, p=0.5):
        params = scaled_params(2, p, 12, 2.0)  # alpha = 2, |A| = 1
        h = sample_gnp(12, p, seed).induced(mask_of(range(10)))
        A = mask_of([10])
        frame = Frame(A, h, mask_of([0, 1, 2, 3]), mask_of([4]), r=2)
        assert validate_frame(frame, params)
        g = sample_extension(A, h, p, seed + 100)
        o = sample_orientation(g, seed + 200)
        return params, frame, o

    def test_no_edges_to_host_is_sparse(self):
        params = scaled_params(2, 0.5, 12, 2.0)
        h = sample_gnp(12, 0.5, 1).induced(mask_of(range(10)))
        frame = Frame(mask_of([10]), h, mask_of([0, 1, 2, 3]), 0, r=2)
        g = sample_extension(mask_of([10]), h, 0.0, 1)
        o = sample_orientation(g, 1)
        assert is_sparse_extension(o, frame, params)

    def test_verdict_matches_path_oracle(self):
        # independent recomputation: bidirectional r-power degrees via
        # explicit simple-path enumeration
        for seed in range(8):
            params, frame, o = self.make_instance(seed)
            limit = params.sparse_threshold(2, size(frame.B))
            worst = 0
            for a in bits(frame.A):
                deg = 0
                for b in bits(frame.B):
                    deg += path_exists_oracle(o, frame.X, 2, a, b)
                    deg += path_exists_oracle(o, frame.X, 2, b, a)
                worst = max(worst, deg)
            assert is_sparse_extension(o, frame, params) == (worst <= limit)

    def test_invalid_frame_rejected(self):
        params, frame, o = self.make_instance(0)
        bad = Frame(frame.A, frame.H, frame.B | frame.X, frame.X, r=2)
        with pytest.raises(PreconditionError):
            is_sparse_extension(o, bad, params)


class TestMomentBound:
    def test_c_one(self):
        r = moment_bound_check(7, 0.3, 1.0)
        assert r.exact == pytest.approx(1.0) and r.ok

    def test_deterministic_subset(self):
        r = moment_bound_check(3, 1.0, 2.0)
        assert r.exact == pytest.approx(8.0)
        assert r.bound == pytest.approx(math.exp(6.0))
        assert r.ok

    def test_heavy_point_closed_form(self):
        r = moment_bound_check(50, 0.1, 4.0)
        assert r.exact == pytest.approx(1.3**50)
        assert r.exact <= math.exp(20.0)
        assert r.ok

    def test_grid_never_violated(self):
        for s in (0, 1, 2, 5, 10, 40):
            for p in (0.0, 0.1, 0.5, 0.9, 1.0):
                for c in (0.0, 0.5, 1.0, 2.0, 4.0):
                    assert moment_bound_check(s, p, c).ok

    def test_monte_carlo_matches_closed_form(self):
        # low-relative-variance point so that 10^5 draws resolve 5%
        s, p, c = 10, 0.3, 1.5
        rng = np.random.Generator(np.random.Philox(key=7))
        draws = rng.binomial(s, p, size=10**5)
        mc = float(np.mean(np.power(float(c), draws)))
        exact = moment_bound_check(s, p, c).exact
        assert abs(mc - exact) / exact < 0.05

    def test_invalid_inputs(self):
        with pytest.raises(PreconditionError):
            moment_bound_check(-1, 0.5, 1.0)
        with pytest.raises(PreconditionError):
            moment_bound_check(3, 1.5, 1.0)
        with pytest.raises(PreconditionError):
            moment_bound_check(3, 0.5, -1.0)
