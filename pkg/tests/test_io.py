"""File parsing and serialization."""

import pytest

from simpair import RankedPair, build_communities, extract_partition
from simpair.io import (
    InputFormatError,
    format_similarity,
    pairs_to_tsv,
    partition_to_tsv,
    read_dense,
    read_edges,
    read_pairs,
)


class TestReadEdges:
    def test_integer_ids(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("0\t1\t3\n\n# comment\n1\t2\t5\n")
        m = read_edges(path)
        assert m.n_nodes == 3
        assert m.node_labels is None
        assert m.to_dense()[0, 1] == 3 and m.to_dense()[1, 2] == 5

    def test_labeled_ids_first_seen_order(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("phys\tchem\t2\nchem\tbio\t1\n")
        m = read_edges(path)
        assert m.node_labels == ["phys", "chem", "bio"]
        assert m.to_dense()[0, 1] == 2

    def test_duplicate_edges_summed(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("0\t1\t3\n0\t1\t4\n")
        assert read_edges(path).to_dense()[0, 1] == 7

    def test_malformed_line_reports_line_number(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("0\t1\t3\n0\t1\n")
        with pytest.raises(InputFormatError, match=r":2:"):
            read_edges(path)

    def test_negative_count_rejected(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("0\t1\t-3\n")
        # a negative token is not a valid 0-based id, so ids fall back to
        # labels and the count must still be a nonnegative integer
        with pytest.raises(InputFormatError, match="nonnegative"):
            read_edges(path)

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "g.tsv"
        path.write_text("# nothing\n")
        with pytest.raises(InputFormatError, match="no edges"):
            read_edges(path)


class TestReadDense:
    def test_square_grid(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("# 2x2\n0, 3\n4, 0\n")
        assert read_dense(path).to_dense().tolist() == [[0, 3], [4, 0]]

    def test_ragged_grid_rejected(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("0,3\n4\n")
        with pytest.raises(InputFormatError, match=r":2:"):
            read_dense(path)

    def test_non_integer_rejected(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("0,x\n1,0\n")
        with pytest.raises(InputFormatError, match="not an integer"):
            read_dense(path)


class TestPairsSerialization:
    def test_six_digit_correct_rounding(self):
        assert format_similarity(0.1234564) == "0.123456"
        assert format_similarity(0.1234576) == "0.123458"
        assert format_similarity(1.0) == "1.000000"
        # exact binary ties at the sixth digit resolve to the even neighbor
        assert format_similarity(0.0078125) == "0.007812"
        assert format_similarity(0.0234375) == "0.023438"

    def test_tsv_layout(self):
        pairs = [RankedPair(2, 3, 0.4988), RankedPair(3, 2, 0.4988)]
        assert pairs_to_tsv(pairs) == "2\t3\t0.498800\n3\t2\t0.498800\n"

    def test_round_trip_integer_ids(self, tmp_path):
        path = tmp_path / "pairs.tsv"
        path.write_text("2\t3\t0.498800\n3\t2\t0.498800\n")
        pairs, labels = read_pairs(path)
        assert labels is None
        assert pairs[0] == RankedPair(2, 3, 0.4988)

    def test_labeled_pairs(self, tmp_path):
        path = tmp_path / "pairs.tsv"
        path.write_text("a\tb\t0.9\nb\ta\t0.9\n")
        pairs, labels = read_pairs(path)
        assert labels == ["a", "b"]
        assert pairs[0] == RankedPair(0, 1, 0.9)

    def test_bad_similarity_reports_line(self, tmp_path):
        path = tmp_path / "pairs.tsv"
        path.write_text("0\t1\thigh\n")
        with pytest.raises(InputFormatError, match=r":1:"):
            read_pairs(path)


class TestPartitionSerialization:
    def test_index_rows(self):
        r = build_communities([RankedPair(0, 1, 0.5)], 3)
        text = partition_to_tsv(extract_partition(r, "core"))
        assert text == "0\t0\n1\t0\n2\t1\n"

    def test_label_rows(self):
        r = build_communities([RankedPair(0, 1, 0.5)], 3)
        text = partition_to_tsv(extract_partition(r, "core"), ["a", "b", "c"])
        assert text.splitlines() == ["a\t0", "b\t0", "c\t1"]
