import csv

import pytest

from spanner.certificate import (
    ROUND_CSV_FIELDS,
    format_certificate,
    parse_certificate,
    read_certificate,
    write_certificate,
    write_round_csv,
)
from spanner.greedy import GreedyConfig, PgSequence, parallel_greedy
from utils.errors import GraphFormatError


def test_format_and_parse():
    seq = PgSequence.from_rounds(4, [[(0, 1), (3, 2)], [(1, 2), (0, 3)]])
    text = format_certificate(seq)
    assert text == "# n 4\nr 1 : 0-1 2-3\nr 2 : 1-2 0-3\n"
    assert parse_certificate(text) == seq


def test_empty_round_and_explicit_vertex_count():
    seq = parse_certificate("r 1 :\nr 2 : 4-5\n", vertex_count=9)
    assert seq.vertex_count == 9
    assert seq.rounds == ((), ((4, 5),))


def test_vertex_count_inferred_without_header():
    assert parse_certificate("r 1 : 2-7\n").vertex_count == 8


@pytest.mark.parametrize("text,line", [
    ("r 2 : 0-1\n", 1),
    ("r 1 : 0-1\nr 1 : 2-3\n", 2),
    ("r 1 0-1\n", 1),
    ("r 1 : 0_1\n", 1),
    ("# n 4\n\nq 1 : 0-1\n", 3),
])
def test_malformed_certificates(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_certificate(text)
    assert info.value.line == line


def test_file_round_trip_and_round_csv(tmp_path, q3):
    result = parallel_greedy(q3, GreedyConfig(t=3, seed=4))
    cert = tmp_path / "q3.cert"
    write_certificate(result.certificate, str(cert))
    assert read_certificate(str(cert)) == result.certificate

    stats = tmp_path / "q3.rounds.csv"
    write_round_csv(result.stats, str(stats))
    with open(stats, newline='') as f:
        rows = list(csv.DictReader(f))
    assert list(rows[0]) == ROUND_CSV_FIELDS
    assert len(rows) == result.rounds
    assert int(rows[-1]['cumulative_edges']) == result.spanner.edge_count
