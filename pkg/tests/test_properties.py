"""Property-based checks of the metric and representation invariants."""

import hypothesis.strategies as st
from hypothesis import given, settings

from fuzzymetrics import (
    alpha_cut,
    cauchy_limit_construct,
    covering_number,
    directed_hausdorff,
    endograph_metric,
    endograph_oracle,
    eps_net,
    finite_set,
    hausdorff,
    kuratowski_tail_diagnostic,
    make_fuzzy,
    membership,
    p0_points,
    platform_points,
    sendograph_metric,
    sendograph_oracle,
    strict_cut_closure,
    support,
    union_family,
    Verdict,
)
from helpers import SP1

# quarter-step coordinates in [0,2] force coincidences and touching cuts
coord = st.integers(0, 8).map(lambda k: 0.25 * k)
point_lists = st.lists(coord, min_size=1, max_size=5)
sets1 = point_lists.map(lambda ps: finite_set(SP1, ps))
alpha_pool = st.sampled_from([0.2, 0.4, 0.6, 0.8])


@st.composite
def step_sets(draw):
    extra_levels = draw(st.lists(alpha_pool, min_size=0, max_size=3, unique=True))
    base = draw(point_lists)
    levels = [(1.0, finite_set(SP1, base))]
    pts = list(base)
    for a in sorted(extra_levels, reverse=True):
        pts = pts + draw(st.lists(coord, min_size=0, max_size=2))
        levels.append((a, finite_set(SP1, pts)))
    return make_fuzzy(levels)


@given(sets1, sets1)
def test_hausdorff_symmetry_and_identity(a, b):
    assert hausdorff(a, a) == 0.0
    assert hausdorff(a, b) == hausdorff(b, a)
    assert directed_hausdorff(a, b) <= hausdorff(a, b)


@given(sets1, sets1, sets1)
def test_hausdorff_triangle(a, b, c):
    assert hausdorff(a, c) <= hausdorff(a, b) + hausdorff(b, c) + 1e-9


@given(sets1, st.sampled_from([0.1, 0.3, 0.5, 1.0, 2.0]))
def test_eps_net_subset_and_coverage(a, eps):
    net = eps_net(a, eps)
    assert all(a.contains(c) for c in net.points)
    for p in a.points:
        assert min(abs(p.coords[0] - c.coords[0]) for c in net.points) <= eps


@given(sets1, st.sampled_from([0.1, 0.3, 0.5]), st.sampled_from([0.5, 1.0, 2.0]))
def test_covering_number_monotone(a, eps_small, eps_big):
    assert covering_number(a, eps_small) >= covering_number(a, eps_big)


@given(st.lists(sets1, min_size=1, max_size=6))
def test_union_contains_all_members(family):
    u = union_family(family)
    for s in family:
        for p in s.points:
            assert u.contains(p)


@given(st.lists(sets1, min_size=1, max_size=8))
def test_cauchy_construct_residuals_monotone_to_zero(prefix):
    _, limit, residuals = cauchy_limit_construct(prefix)
    assert all(b <= a + 1e-12 for a, b in zip(residuals, residuals[1:]))
    assert residuals[-1] == 0.0
    for c in prefix:
        for p in c.points:
            assert limit.contains(p)


@given(sets1, st.integers(2, 6))
def test_hausdorff_tail_pass_implies_kuratowski_pass(target, count):
    # a sequence that provably converges: constant at the target
    prefix = [target] * (count * 4)
    series = [hausdorff(c, target) for c in prefix]
    window, tol = count, 1e-3
    assert max(series[-window:]) < tol
    diag = kuratowski_tail_diagnostic(prefix, target, window=window, tol=tol)
    assert diag.verdict is Verdict.PASS


@given(step_sets())
def test_platform_and_discontinuity_sets_agree(u):
    plat = p0_points(u)
    assert plat == platform_points(u)
    assert len(plat) < len(u.levels)
    for a in plat:
        strict = strict_cut_closure(u, a)
        cut = alpha_cut(u, a)
        assert all(cut.contains(p) for p in strict.points)
        assert len(strict) < len(cut)


@given(step_sets())
def test_membership_reconstructs_cuts(u):
    for a, cut in u.levels:
        rebuilt = alpha_cut(u, a)
        assert len(rebuilt) == len(cut)
        for p in cut.points:
            assert membership(u, p) >= a
    for p in support(u).points:
        assert membership(u, p) in {0.0, *u.alphas}


@given(step_sets(), step_sets())
def test_graph_metric_symmetry_identity_dominance(u, v):
    for dist in (endograph_metric, sendograph_metric):
        assert dist(u, u) <= 1e-9
        assert dist(u, v) == dist(v, u)
    assert endograph_metric(u, v) <= sendograph_metric(u, v) + 1e-12


@given(step_sets(), step_sets(), step_sets())
@settings(max_examples=50)
def test_graph_metric_triangle(u, v, w):
    for dist in (endograph_metric, sendograph_metric):
        assert dist(u, w) <= dist(u, v) + dist(v, w) + 1e-9


@given(step_sets(), step_sets())
@settings(max_examples=50)
def test_oracle_agreement(u, v):
    res = 0.05
    assert abs(endograph_metric(u, v) - endograph_oracle(u, v, res)) <= 2 * res
    assert abs(sendograph_metric(u, v) - sendograph_oracle(u, v, res)) <= 2 * res


@given(step_sets())
def test_zero_distance_only_for_identical_graphs(u):
    # moving one support point by a visible amount moves both metrics
    moved_levels = []
    for a, cut in u.levels:
        pts = [(p.coords[0] + 0.75,) for p in cut.points]
        moved_levels.append((a, finite_set(SP1, pts)))
    v = make_fuzzy(moved_levels)
    assert sendograph_metric(u, v) > 1e-9
