import pytest

from golden import DELTA_D1, DELTA_D1_RECOMPUTED, DELTA_D2, DELTA_D3, ROOT_ROWS, digits
from mcgfac.core import parse_word
from mcgfac.delta import DeltaError, assert_all_distinct, delta_profile, profile_record, split_sequences
from mcgfac.tables import Factorization, expand_all, reversion, sample


def P(d, type_id):
    return delta_profile(sample(d, type_id).word)


def names(xs):
    return [str(x) for x in xs]


def test_split_examples():
    s = split_sequences(sample(1, "5").word)
    assert names(s["a"]) == "a2 a2 a2 a3 a2 a2 a1 a2 a2".split()
    assert names(s["b"]) == ["b1", "b2", "b1"]
    s = split_sequences(sample(2, "2").word)
    assert names(s["a1"]) == ["a1"] * 3
    assert names(s["a2"]) == "a2 a2 a2 a3 a3 a3".split()
    assert names(s["b"]) == ["b1", "b1", "b2"]
    assert names(split_sequences(sample(3, "6").word)["b"]) == ["b2"] * 3


def test_profile_examples():
    p = P(1, "1")
    assert p["a"] == (-1, 0, 1, -1, 0, 1, -1, 0, 1) and p["b"] == (0, 0, 0)
    p = P(1, "4")
    assert p["a"] == (0, 0, -1, 0, 0, 0, 0, 0, 1) and p["b"] == (-1, -1, 2)
    p = P(2, "2")
    assert (p["a1"], p["b"], p["a2"]) == ((0, 0, 0), (0, -1, 1), (0, 0, -1, 0, 0, 1))


@pytest.mark.parametrize("type_id,da,db", [r for r in DELTA_D1 if r[0] not in DELTA_D1_RECOMPUTED])
def test_printed_d1(type_id, da, db):
    p = P(1, type_id)
    assert (p["a"], p["b"]) == (digits(da), digits(db))


@pytest.mark.parametrize("type_id", sorted(DELTA_D1_RECOMPUTED))
def test_d1_rows_printed_differently(type_id):
    printed_a, printed_b = [(da, db) for t, da, db in DELTA_D1 if t == type_id][0]
    p = P(1, type_id)
    assert p["a"] == DELTA_D1_RECOMPUTED[type_id]
    assert p["a"] != digits(printed_a)      # the printed row does not match its own word
    assert p["b"] == digits(printed_b)      # delta-b is unaffected


def test_recomputed_row_agrees_with_root_table():
    row = [r for r in ROOT_ROWS if r[:2] == ("5*", "222122322")][0]
    f = sample(1, "5*").word
    assert f.letters == Factorization.parse("a2 a2 a2 b2 a1 a2 a2 b1 a3 a2 a2 b2", 1).letters
    assert delta_profile(f)["a"] == digits(row[2])


@pytest.mark.parametrize("row", DELTA_D2, ids=lambda r: r[0])
def test_printed_d2(row):
    p = P(2, row[0])
    assert (p["a1"], p["b"], p["a2"]) == tuple(digits(s) for s in row[1:])


@pytest.mark.parametrize("row", DELTA_D3, ids=lambda r: r[0])
def test_printed_d3(row):
    """Row 5 is expected to fail on delta-a3; see the README."""
    p = P(3, row[0])
    assert (p["b"], p["a1"], p["a2"], p["a3"]) == tuple(digits(s) for s in row[1:])


def test_d3_type5_recomputed():
    p = P(3, "5")
    assert p["a3"] == (0, -1, 1)
    assert names(split_sequences(sample(3, "5").word)["a3"]) == ["a3", "a3", "a3h"]


@pytest.mark.parametrize("d", [1, 2, 3])
def test_sums_and_range(d):
    for t in expand_all(d):
        for name, seq in delta_profile(t.word).sequences:
            assert sum(seq) == 0
            assert all(-2 <= x <= 2 for x in seq)


@pytest.mark.parametrize("d,n", [(1, 240), (2, 56), (3, 27)])
def test_distinct(d, n):
    report = assert_all_distinct(delta_profile(t.word) for t in expand_all(d))
    assert report.ok and report.distinct == report.total == n


def test_repeated_profile_is_a_collision():
    p = P(2, "1")
    report = assert_all_distinct([p, P(2, "2"), p])
    assert not report.ok and report.collisions == ((p.sequences, (0, 2)),)


def test_reversion_negates_delta_a():
    for t in expand_all(1):
        r = reversion(t.word)
        assert delta_profile(r.partner.word)["a"] == tuple(-x for x in delta_profile(t.word)["a"])


def test_uncovered_pair_raises():
    f = Factorization(2, parse_word("a1 a2c a3 b1 a1 a2 a3 b1 a1 a2 a2 b1", 2))
    with pytest.raises(DeltaError):
        delta_profile(f)


def test_record_field_order():
    rec = profile_record("5*", sample(1, "5*").word)
    assert list(rec) == ["d", "type", "word", "delta_a", "delta_b"]
