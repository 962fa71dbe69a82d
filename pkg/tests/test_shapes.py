import pytest
from hypothesis import given
from hypothesis import strategies as st

from schur_eq.errors import ContainmentViolation, EmptyShape, ParseError
from schur_eq.shapes import (
    Orientation,
    Partition,
    SkewShape,
    as_straight_or_rotated,
    cells,
    column_lengths,
    conjugate,
    connected_skew_shapes,
    is_connected,
    parse_partition,
    parse_shape,
    partitions,
    rotate180,
    skew_shape,
)

from conftest import sh


def ferrers(p):
    return {(i, j) for i, part in enumerate(p, start=1) for j in range(1, part + 1)}


def brute_cells(outer, inner):
    """Set difference of two Ferrers diagrams, shifted to the top-left corner."""
    boxes = ferrers(outer) - ferrers(inner)
    r0 = min(r for r, _ in boxes) - 1
    c0 = min(c for _, c in boxes) - 1
    return {(r - r0, c - c0) for r, c in boxes}


@st.composite
def skew_pairs(draw, max_rows=5, max_part=5):
    outer = sorted(draw(st.lists(st.integers(1, max_part), min_size=1, max_size=max_rows)), reverse=True)
    inner = []
    for idx, part in enumerate(outer):
        cap = min(part, inner[-1] if inner else part)
        inner.append(draw(st.integers(0, cap)))
    inner = [x for x in inner if x]
    if sum(outer) == sum(inner):
        inner = inner[:-1] if inner else inner
        if sum(outer) == sum(inner):
            inner = []
    return Partition(outer), Partition(inner)


class TestPartition:
    def test_conjugate_examples(self):
        assert conjugate(()) == ()
        assert conjugate((1,)) == (1,)
        assert conjugate((4, 3, 2, 2)) == (4, 4, 2, 1)

    def test_conjugate_is_involution_up_to_12_boxes(self):
        for n in range(13):
            for p in partitions(n):
                assert conjugate(conjugate(p)) == p

    def test_partition_counts(self):
        assert [sum(1 for _ in partitions(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_partitions_descending_lex(self):
        ps = list(partitions(5))
        assert ps == sorted(ps, reverse=True)

    @pytest.mark.parametrize("bad", [(1, 2), (0,), (3, -1)])
    def test_rejects_invalid(self, bad):
        with pytest.raises(ValueError):
            Partition(bad)

    def test_parse(self):
        assert parse_partition("4,3,2,2") == (4, 3, 2, 2)
        assert parse_partition("") == ()

    def test_parse_names_offending_index(self):
        with pytest.raises(ParseError, match="index 2"):
            parse_partition("3,2,5")
        with pytest.raises(ParseError, match="index 1"):
            parse_partition("3,x")


class TestSkewShape:
    def test_construction(self):
        s = skew_shape((4, 3, 2, 2), (2, 1))
        assert s.outer == (4, 3, 2, 2) and s.inner == (2, 1)
        assert str(s) == "4,3,2,2/2,1"
        assert str(skew_shape((3, 2))) == "3,2"

    def test_containment_violation(self):
        with pytest.raises(ContainmentViolation):
            skew_shape((2, 2), (3,))
        with pytest.raises(ContainmentViolation):
            skew_shape((2,), (1, 1))

    def test_empty_shape(self):
        with pytest.raises(EmptyShape):
            skew_shape((2, 1), (2, 1))

    def test_parse_shape(self):
        assert parse_shape("4,3,2,2/2,1") == skew_shape((4, 3, 2, 2), (2, 1))
        assert parse_shape("3,2").inner == ()
        with pytest.raises(ParseError):
            parse_shape("2,3/1")
        with pytest.raises(ContainmentViolation):
            parse_shape("2,2/3")

    def test_cells_examples(self):
        assert cells(sh("3,2/1")) == {(1, 2), (1, 3), (2, 1), (2, 2)}
        assert cells(sh("2,1")) == {(1, 1), (1, 2), (2, 1)}
        boxes = cells(sh("4,3,2,2/2,1"))
        assert len(boxes) == 8
        by_col = {c: sorted(r for r, cc in boxes if cc == c) for c in range(1, 5)}
        assert by_col == {1: [3, 4], 2: [2, 3, 4], 3: [1, 2], 4: [1]}

    @given(skew_pairs())
    def test_cells_match_set_difference(self, pair):
        outer, inner = pair
        s = SkewShape(outer, inner)
        assert s.cells == brute_cells(outer, inner)
        assert len(s.cells) == outer.size - inner.size

    def test_translation_invariant_equality(self):
        assert sh("3,3/1") == sh("4,4/2,1")
        assert hash(sh("3,3/1")) == hash(sh("4,4/2,1"))
        assert sh("3,2/1") != sh("3,2")

    @given(skew_pairs())
    def test_from_cells_round_trip(self, pair):
        s = SkewShape(*pair)
        assert SkewShape.from_cells(s.cells) == s

    def test_from_cells_rejects_non_skew(self):
        with pytest.raises(ValueError):
            SkewShape.from_cells({(1, 1), (1, 3)})
        with pytest.raises(ValueError):
            SkewShape.from_cells({(1, 1), (2, 1), (2, 2)})

    def test_rotate_examples(self):
        assert rotate180(sh("4,3,2,2")) == sh("4,4,4,4/2,2,1")
        assert rotate180(sh("4,3,2,2")).outer == (4, 4, 4, 4)
        assert rotate180(sh("4,3,2,2")).inner == (2, 2, 1)
        assert rotate180(sh("3")) == sh("3")
        assert rotate180(sh("4,4,4,4/2,2,1")) == sh("4,3,2,2")

    def test_rotate_matches_point_reflection(self, shapes10):
        for s in shapes10:
            height = max(r for r, _ in s.cells)
            width = max(c for _, c in s.cells)
            assert rotate180(s).cells == {(height + 1 - r, width + 1 - c) for r, c in s.cells}

    def test_rotate_involution_connected(self, shapes10):
        for s in shapes10:
            assert rotate180(rotate180(s)).cells == s.cells

    @given(skew_pairs())
    def test_rotate_involution_any(self, pair):
        s = SkewShape(*pair)
        assert rotate180(rotate180(s)) == s

    def test_connectivity(self):
        assert is_connected(sh("4,3,2,2/2,1"))
        assert not is_connected(sh("3,1,1/2"))
        assert not is_connected(sh("4,4,2,2/2,2"))
        for n in range(1, 8):
            assert all(is_connected(SkewShape(p)) for p in partitions(n))

    def test_connectivity_with_empty_middle_row(self):
        s = sh("3,2,1/2,2")
        assert s.rows[1] == (0, -1)
        assert not s.is_connected

    def test_column_lengths(self):
        assert column_lengths(sh("4,3,2,2/2,1")) == (2, 3, 2, 1)
        assert column_lengths(sh("4,3,2,2")) == (4, 4, 2, 1)
        assert column_lengths(sh("3,2/1")) == (1, 2, 1)

    def test_column_lengths_of_straight_is_conjugate(self):
        for n in range(1, 11):
            for p in partitions(n):
                assert column_lengths(SkewShape(p)) == conjugate(p)

    def test_as_straight_or_rotated(self):
        assert as_straight_or_rotated(sh("4,4,4,4/2,2,1")) == ((4, 3, 2, 2), Orientation.ROTATED)
        assert as_straight_or_rotated(sh("3,2")) == ((3, 2), Orientation.STRAIGHT)
        assert as_straight_or_rotated(sh("3,2/1")) is None
        # a translated straight shape is still straight
        assert as_straight_or_rotated(sh("5,4/2,2")) == ((3, 2), Orientation.STRAIGHT)

    def test_rotated_partitions_are_recognised(self):
        for n in range(1, 9):
            for p in partitions(n):
                rectangle = len(set(p)) == 1
                expected = Orientation.STRAIGHT if rectangle else Orientation.ROTATED
                assert as_straight_or_rotated(rotate180(SkewShape(p))) == (p, expected)


class TestConnectedShapeEnumeration:
    def test_counts(self):
        counts = [0] * 11
        for s in connected_skew_shapes(10):
            counts[s.size] += 1
        assert counts[1:] == [1, 2, 4, 9, 20, 46, 105, 242, 557, 1285]

    def test_matches_polyomino_growth(self):
        """Grow every fixed polyomino cell by cell and keep the skew-diagram ones."""

        def is_skew(boxes):
            rows = {}
            for r, c in boxes:
                rows.setdefault(r, []).append(c)
            spans = []
            for r in sorted(rows):
                cols = sorted(rows[r])
                if cols != list(range(cols[0], cols[-1] + 1)):
                    return False
                spans.append((cols[0], cols[-1]))
            return all(lo >= lo2 and hi >= hi2 for (lo, hi), (lo2, hi2) in zip(spans, spans[1:]))

        def norm(boxes):
            r0 = min(r for r, _ in boxes) - 1
            c0 = min(c for _, c in boxes) - 1
            return frozenset((r - r0, c - c0) for r, c in boxes)

        limit = 7
        layer = {frozenset({(1, 1)})}
        polyominoes = set(layer)
        for _ in range(limit - 1):
            layer = {
                norm(p | {(r + dr, c + dc)})
                for p in layer
                for r, c in p
                for dr, dc in ((0, 1), (1, 0), (0, -1), (-1, 0))
                if (r + dr, c + dc) not in p
            }
            polyominoes |= layer
        brute = {p for p in polyominoes if is_skew(p)}
        assert {s.cells for s in connected_skew_shapes(limit)} == brute

    def test_order(self):
        shapes = connected_skew_shapes(6)
        keys = [(s.size, tuple(-x for x in s.outer)) for s in shapes]
        assert [k[0] for k in keys] == sorted(k[0] for k in keys)
        for a, b in zip(shapes, shapes[1:]):
            if a.size == b.size:
                assert (a.outer, a.inner) > (b.outer, b.inner)

    def test_min_boxes(self):
        assert all(s.size >= 3 for s in connected_skew_shapes(5, min_boxes=3))
        assert connected_skew_shapes(0) == []
