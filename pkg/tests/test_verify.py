import pytest

from magicpoly import (
    DomainMismatch,
    Family,
    Labeling,
    Mode,
    SearchOptions,
    StructureSpec,
    build,
    constants,
    d2,
    layer_sums,
    p2,
    p4,
    solve,
    verify,
)


def ring_labeling(spec, center, *rings):
    values = {0: center}
    for t, ring in enumerate(rings, start=1):
        for q, v in enumerate(ring, start=1):
            values[spec.point_id(t, q)] = v
    return Labeling(values)


D52 = StructureSpec(Family.DEGENERATE, 5, 2)
P42 = StructureSpec(Family.MAGIC, 4, 2)

# Two-ring root-sharing labeling: vertices and midpoints interleaved along
# each path, root 8, every segment summing to 24.
D52_LABELING = ring_labeling(D52, 8, [1, 14, 9, 12, 3, 10, 11], [15, 2, 7, 4, 13, 6, 5])
# Single-ring labeling: vertices 2,4,8,6 and midpoints 9,3,1,7 around the
# perimeter, center 5, every segment summing to 15.
P42_LABELING = ring_labeling(P42, 5, [2, 9, 4, 3, 8, 1, 6, 7])


def test_degenerate_example_is_magic():
    report = verify(build(D52), D52_LABELING)
    assert report.is_magic
    assert report.bijective
    assert report.violations == ()
    assert report.center_value == 8
    assert report.layer_sums == (64, 48)


def test_concentric_witness_is_magic():
    st = build(P42)
    report = verify(st, P42_LABELING)
    assert report.is_magic
    assert report.center_value == 5
    for seg in st.segments:
        assert sum(P42_LABELING.values[p] for p in seg.points) == 15


def test_swapping_two_labels_breaks_magic():
    values = dict(P42_LABELING.values)
    a = next(p for p, v in values.items() if v == 1)
    b = next(p for p, v in values.items() if v == 2)
    values[a], values[b] = 2, 1
    report = verify(build(P42), Labeling(values))
    assert not report.is_magic
    assert report.bijective
    assert len(report.violations) >= 1
    assert all(expected == 15 for _, _, expected in report.violations)
    assert all(actual != 15 for _, actual, _ in report.violations)


def test_constant_labeling_fails_bijectivity_not_sums():
    # Assigning every point the center value satisfies each segment sum
    # but is rejected: equal sums alone are not enough.
    st = build(P42)
    report = verify(st, Labeling({p: 5 for p in st.point_ids()}))
    assert report.violations == ()
    assert not report.bijective
    assert report.duplicates == (5,)
    assert not report.is_magic


def test_out_of_range_values_reported():
    values = dict(P42_LABELING.values)
    point_of_nine = next(p for p, v in values.items() if v == 9)
    values[point_of_nine] = 10
    report = verify(build(P42), Labeling(values))
    assert report.out_of_range == (10,)
    assert not report.bijective
    assert not report.is_magic


def test_domain_mismatch_rejected():
    st = build(P42)
    missing = dict(P42_LABELING.values)
    del missing[3]
    with pytest.raises(DomainMismatch):
        verify(st, Labeling(missing))
    extra = dict(P42_LABELING.values)
    extra[99] = 1
    with pytest.raises(DomainMismatch):
        verify(st, Labeling(extra))


def test_layer_sum_vectors():
    assert layer_sums(build(StructureSpec(Family.MAGIC, 8, 2)), p2(8)) == (72, 72)
    assert layer_sums(build(D52), d2(5)) == (64, 48)
    witness = p4(4)
    assert witness is not None
    assert layer_sums(build(StructureSpec(Family.MAGIC, 4, 4)), witness) == (136, 136, 136, 136)


@pytest.mark.parametrize("n", [4, 6, 8, 12])
def test_accepted_labelings_match_predicted_constants(n):
    spec = StructureSpec(Family.MAGIC, n, 2)
    report = verify(build(spec), p2(n))
    predicted = constants(spec)
    assert report.is_magic
    assert report.center_value == predicted.center_value
    assert tuple(report.layer_sums) == tuple(int(s) for s in predicted.layer_sums)


@pytest.mark.parametrize("n", [4, 6])
def test_enumerated_solutions_obey_vertex_parity(n):
    # Single-ring solutions always carry at least one even vertex label and
    # at least one odd midpoint label.
    spec = StructureSpec(Family.MAGIC, n, 2)
    result = solve(build(spec), SearchOptions(mode=Mode.ENUMERATE_ALL))
    assert result.count > 0
    for sol in result.solutions:
        vertices = [sol.values[spec.point_id(1, q)] for q in range(1, 2 * n + 1, 2)]
        midpoints = [sol.values[spec.point_id(1, q)] for q in range(2, 2 * n + 1, 2)]
        assert any(v % 2 == 0 for v in vertices)
        assert any(v % 2 == 1 for v in midpoints)
