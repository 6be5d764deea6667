import pytest
from hypothesis import given, strategies as st

from fallkolor.combinatorics import (
    BlockDesign,
    SubsetLabel,
    binomial,
    colex_rank,
    colex_subsets,
    colex_unrank,
    construct_sts,
    format_design,
    parse_design,
    parse_subset,
    verify_design,
)
from fallkolor.errors import BudgetExceeded, NoDesignError

from oracles import colex_order, naive_design_ok, pascal

FANO = [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3)]


def fano(blocks=FANO):
    return BlockDesign(2, 7, 3, 1, tuple(SubsetLabel.of(b, 7) for b in blocks))


@pytest.mark.parametrize("n,k,expected", [(5, 0, 1), (7, 2, 21), (2, 5, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal():
    for n in range(25):
        for k in range(n + 3):
            assert binomial(n, k) == pascal(n, k)


def test_binomial_overflow_is_reported():
    assert binomial(66, 33) < 2**63
    with pytest.raises(OverflowError):
        binomial(68, 34)


def test_subset_label_invariants():
    with pytest.raises(ValueError):
        SubsetLabel((2, 1), 5)
    with pytest.raises(ValueError):
        SubsetLabel((1, 6), 5)
    with pytest.raises(ValueError):
        SubsetLabel((0, 1), 5)
    s = parse_subset("{3, 1,5}", 5)
    assert s.elements == (1, 3, 5) and str(s) == "{1,3,5}"


@pytest.mark.parametrize("subset,expected", [((1, 2), 0), ((4, 5), 9), ((1, 3), 1)])
def test_colex_rank_examples(subset, expected):
    assert colex_rank(SubsetLabel(subset, 5)) == expected


def test_colex_rank_matches_enumeration():
    for n in range(1, 9):
        for m in range(0, n + 1):
            order = colex_order(n, m)
            assert [s.elements for s in colex_subsets(n, m)] == order
            for r, s in enumerate(order):
                assert colex_rank(s) == r
                assert colex_unrank(r, n, m).elements == s


@given(st.data())
def test_colex_roundtrip(data):
    n = data.draw(st.integers(1, 40))
    m = data.draw(st.integers(0, n))
    r = data.draw(st.integers(0, binomial(n, m) - 1))
    assert colex_rank(colex_unrank(r, n, m)) == r


def test_colex_roundtrip_exhaustive_medium():
    n, m = 17, 6  # C(17,6) = 12376
    for r in range(binomial(n, m)):
        assert colex_rank(colex_unrank(r, n, m)) == r


def test_colex_errors():
    with pytest.raises(ValueError):
        colex_unrank(10, 5, 2)
    with pytest.raises(ValueError):
        colex_unrank(-1, 5, 2)
    with pytest.raises(ValueError):
        colex_rank((3, 2))


def test_fano_passes():
    assert verify_design(fano())


def test_single_triple_is_sts3():
    assert verify_design(BlockDesign(2, 3, 3, 1, (SubsetLabel((1, 2, 3), 3),)))


def test_fano_minus_block_fails_with_uncovered_pair():
    report = verify_design(fano(FANO[1:]))
    assert not report
    assert report.count == 0
    assert set(report.witness) <= set(FANO[0])


def test_design_budget():
    with pytest.raises(BudgetExceeded):
        verify_design(fano(), budget=20)


def test_design_type_invariants():
    with pytest.raises(ValueError):
        BlockDesign(2, 7, 3, 1, (SubsetLabel((1, 2), 7),))
    with pytest.raises(ValueError):
        BlockDesign(4, 7, 3, 1, ())


@pytest.mark.parametrize("v,blocks", [(7, 7), (9, 12)])
def test_sts_examples(v, blocks):
    d = construct_sts(v)
    assert d.b == blocks and verify_design(d)


def test_sts_nonexistent():
    with pytest.raises(NoDesignError, match="no STS"):
        construct_sts(5)


@pytest.mark.parametrize("v", [v for v in range(3, 34) if v % 6 in (1, 3)])
def test_sts_all_orders_to_33(v):
    d = construct_sts(v)
    assert d.b == v * (v - 1) // 6
    assert verify_design(d)
    assert naive_design_ok(2, v, [b.elements for b in d.blocks], 1)[0]


def test_verify_design_agrees_with_naive():
    designs = [fano(), fano(FANO[1:]), fano(FANO + [FANO[0]]), construct_sts(9), construct_sts(13)]
    designs.append(BlockDesign(1, 6, 2, 1, tuple(SubsetLabel.of(b, 6) for b in [(1, 2), (3, 4), (5, 6)])))
    designs.append(BlockDesign(1, 6, 2, 1, tuple(SubsetLabel.of(b, 6) for b in [(1, 2), (2, 4), (5, 6)])))
    for d in designs:
        report = verify_design(d)
        ok, ts, count = naive_design_ok(d.t, d.v, [b.elements for b in d.blocks], d.lam)
        assert report.ok == ok
        if not ok:
            assert (report.witness, report.count) == (ts, count)


def test_design_file_roundtrip():
    d = construct_sts(13)
    text = format_design(d)
    assert text.splitlines()[0] == "2 13 3 1 26"
    assert parse_design(text) == d


def test_design_file_errors():
    with pytest.raises(ValueError):
        parse_design("2 7 3 1 2\n1 2 4\n")
    with pytest.raises(ValueError):
        parse_design("2 7 3 1\n")
    with pytest.raises(ValueError):
        parse_design("2 7 3 1 1\n1 1 4\n")
