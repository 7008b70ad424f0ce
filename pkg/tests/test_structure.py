import pytest

from magicpoly import (
    CENTER,
    Family,
    InvalidSpec,
    SegmentKind,
    StructureSpec,
    antipode,
    build,
)

P_GRID = [(n, k) for n in range(3, 13) for k in (2, 4, 6)]
D_GRID = [(n, k) for n in range(3, 13) for k in range(1, 5)]


@pytest.mark.parametrize("n,k", P_GRID)
def test_concentric_counts(n, k):
    spec = StructureSpec(Family.MAGIC, n, k)
    st = build(spec)
    assert st.point_count == k * k * n // 2 + 1
    edge = [s for s in st.segments if s.kind is SegmentKind.EDGE]
    central = [s for s in st.segments if s.kind is SegmentKind.CENTRAL]
    assert len(edge) == n * k // 2
    assert len(central) == n * k // 2
    assert all(len(s.points) == k + 1 for s in st.segments)


@pytest.mark.parametrize("n,k", D_GRID)
def test_degenerate_counts(n, k):
    spec = StructureSpec(Family.DEGENERATE, n, k)
    st = build(spec)
    assert st.point_count == k * k * (n - 2) + k + 1
    edge = [s for s in st.segments if s.kind is SegmentKind.EDGE]
    central = [s for s in st.segments if s.kind is SegmentKind.CENTRAL]
    assert len(edge) == k * (n - 2)
    assert len(central) == k * (n - 2) + 1
    assert all(len(s.points) == k + 1 for s in st.segments)


def test_known_small_structures():
    st = build(StructureSpec(Family.MAGIC, 4, 2))
    assert st.point_count == 9
    assert sum(1 for s in st.segments if s.kind is SegmentKind.EDGE) == 4
    assert sum(1 for s in st.segments if s.kind is SegmentKind.CENTRAL) == 4
    assert all(len(s.points) == 3 for s in st.segments)

    st = build(StructureSpec(Family.DEGENERATE, 5, 2))
    assert st.point_count == 15
    assert sum(1 for s in st.segments if s.kind is SegmentKind.EDGE) == 6
    assert sum(1 for s in st.segments if s.kind is SegmentKind.CENTRAL) == 7

    st = build(StructureSpec(Family.MAGIC, 4, 4))
    assert st.point_count == 33
    assert sum(1 for s in st.segments if s.kind is SegmentKind.EDGE) == 8
    assert sum(1 for s in st.segments if s.kind is SegmentKind.CENTRAL) == 8
    assert all(len(s.points) == 5 for s in st.segments)


@pytest.mark.parametrize(
    "family,n,k",
    [
        (Family.MAGIC, 2, 2),
        (Family.MAGIC, 4, 3),
        (Family.MAGIC, 4, 0),
        (Family.MAGIC, 5, 1),
        (Family.DEGENERATE, 2, 2),
        (Family.DEGENERATE, 4, 0),
    ],
)
def test_invalid_specs_rejected(family, n, k):
    with pytest.raises(InvalidSpec):
        StructureSpec(family, n, k)


@pytest.mark.parametrize("n,k", [(4, 2), (3, 2), (5, 4), (8, 6)])
def test_point_id_round_trip_concentric(n, k):
    spec = StructureSpec(Family.MAGIC, n, k)
    seen = set()
    for t in range(1, spec.rings + 1):
        for q in range(1, spec.ring_length + 1):
            pid = spec.point_id(t, q)
            assert spec.ring_position(pid) == (t, q)
            assert spec.layer(pid) == (q - 1) % k + 1
            seen.add(pid)
    assert seen == set(range(1, spec.point_count))


@pytest.mark.parametrize("n,k", [(3, 1), (5, 2), (4, 4), (6, 3)])
def test_point_id_round_trip_degenerate(n, k):
    spec = StructureSpec(Family.DEGENERATE, n, k)
    seen = set()
    for t in range(1, spec.rings + 1):
        for q in range(1, spec.ring_length + 1):
            pid = spec.point_id(t, q)
            assert spec.ring_position(pid) == (t, q)
            seen.add(pid)
    assert seen == set(range(1, spec.point_count))
    # Both path endpoints count as vertices.
    assert spec.layer(spec.point_id(1, 1)) == 1
    assert spec.layer(spec.point_id(1, spec.ring_length)) == 1


def test_point_id_bounds_checked():
    spec = StructureSpec(Family.MAGIC, 4, 2)
    with pytest.raises(ValueError):
        spec.point_id(2, 1)
    with pytest.raises(ValueError):
        spec.point_id(1, 9)
    with pytest.raises(ValueError):
        spec.ring_position(0)
    with pytest.raises(ValueError):
        spec.ring_position(9)


def test_antipode_examples():
    assert antipode(StructureSpec(Family.MAGIC, 3, 2), 1) == 4
    assert antipode(StructureSpec(Family.MAGIC, 4, 2), 2) == 6
    assert antipode(StructureSpec(Family.MAGIC, 4, 2), 7) == 3


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (5, 2), (4, 4), (7, 6)])
def test_antipode_is_involutive(n, k):
    spec = StructureSpec(Family.MAGIC, n, k)
    for q in range(1, spec.ring_length + 1):
        assert antipode(spec, antipode(spec, q)) == q
        assert antipode(spec, q) != q


def test_antipode_rejects_degenerate_family():
    with pytest.raises(InvalidSpec):
        antipode(StructureSpec(Family.DEGENERATE, 5, 2), 1)


@pytest.mark.parametrize("family,n,k", [(Family.MAGIC, n, k) for n, k in P_GRID[:9]] + [
    (Family.DEGENERATE, n, k) for n, k in D_GRID[:9]
])
def test_segment_contents(family, n, k):
    st = build(StructureSpec(family, n, k))
    for seg in st.segments:
        assert len(set(seg.points)) == k + 1
        if seg.kind is SegmentKind.CENTRAL:
            assert CENTER in seg.points
            assert seg.layer_tags is None
        else:
            assert CENTER not in seg.points
            assert seg.layer_tags == tuple(range(1, k + 1))


@pytest.mark.parametrize("family,n,k", [(Family.MAGIC, 5, 2), (Family.MAGIC, 4, 4), (Family.DEGENERATE, 5, 2), (Family.DEGENERATE, 4, 3)])
def test_incidence_totals(family, n, k):
    st = build(StructureSpec(family, n, k))
    total = sum(len(s.points) for s in st.segments)
    if family is Family.MAGIC:
        assert total == n * k * (k + 1)
        center_degree = n * k // 2
    else:
        assert total == (2 * k * (n - 2) + 1) * (k + 1)
        center_degree = k * (n - 2) + 1
    assert sum(1 for s in st.segments if CENTER in s.points) == center_degree
    covered = set()
    for s in st.segments:
        covered.update(s.points)
    assert covered == set(range(st.point_count))


@pytest.mark.parametrize("n,k", [(4, 2), (6, 2), (4, 4)])
def test_concentric_point_degrees(n, k):
    # Polygon vertices sit on two edge segments plus one central segment;
    # intermediate points on one of each.
    st = build(StructureSpec(Family.MAGIC, n, k))
    spec = st.spec
    for pid in range(1, st.point_count):
        edges = sum(1 for s in st.segments if s.kind is SegmentKind.EDGE and pid in s.points)
        centrals = sum(1 for s in st.segments if s.kind is SegmentKind.CENTRAL and pid in s.points)
        assert centrals == 1
        assert edges == (2 if spec.layer(pid) == 1 else 1)


@pytest.mark.parametrize("n,k", [(5, 2), (4, 3), (3, 1)])
def test_degenerate_point_degrees(n, k):
    # Path endpoints touch a single edge segment; interior vertices two.
    st = build(StructureSpec(Family.DEGENERATE, n, k))
    spec = st.spec
    for pid in range(1, st.point_count):
        t, q = spec.ring_position(pid)
        edges = sum(1 for s in st.segments if s.kind is SegmentKind.EDGE and pid in s.points)
        centrals = sum(1 for s in st.segments if s.kind is SegmentKind.CENTRAL and pid in s.points)
        assert centrals == 1
        if q in (1, spec.ring_length):
            assert edges == 1
        elif spec.layer(pid) == 1:
            assert edges == 2
        else:
            assert edges == 1


def test_build_is_deterministic():
    for spec in (StructureSpec(Family.MAGIC, 6, 2), StructureSpec(Family.DEGENERATE, 5, 3)):
        assert build(spec) == build(spec)


def test_central_pairing_matches_antipode():
    spec = StructureSpec(Family.MAGIC, 4, 2)
    st = build(spec)
    for seg in st.segments:
        if seg.kind is not SegmentKind.CENTRAL:
            continue
        q_side, center, far_side = seg.points
        assert center == CENTER
        assert spec.ring_position(far_side)[1] == antipode(spec, spec.ring_position(q_side)[1])
