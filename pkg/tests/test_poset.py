import pytest

import naive
from cideals import CycleDetected, DuplicateName, PosetError, UnknownName, build_poset
from conftest import mask, names


def test_build_singleton():
    p = build_poset(["x"], [])
    assert p.n == 1
    assert p.bottom == p.top == 0
    assert p.covers == ()


def test_build_fig1_shape(fig1):
    p = fig1.poset
    assert p.n == 5
    assert p.names[p.bottom] == "0" and p.names[p.top] == "1"
    assert len(p.covers) == 6


def test_closure_accepts_non_cover_pairs():
    # long relations mixed with covers collapse to the same order
    p = build_poset(["0", "m", "1"], [("0", "m"), ("m", "1"), ("0", "1")])
    q = build_poset(["0", "m", "1"], [("0", "m"), ("m", "1")])
    assert p.down == q.down
    assert p.covers == q.covers


def test_closure_idempotent(fig3):
    p = fig3.poset
    rebuilt = build_poset(list(p.names), p.le_pairs())
    assert rebuilt.down == p.down


def test_cycle_detected():
    with pytest.raises(CycleDetected):
        build_poset(["p", "q"], [("p", "q"), ("q", "p")])


def test_duplicate_and_unknown_names():
    with pytest.raises(DuplicateName):
        build_poset(["p", "p"], [])
    with pytest.raises(UnknownName):
        build_poset(["p"], [("p", "q")])


def test_bad_name_tokens():
    with pytest.raises(PosetError):
        build_poset(["a b"], [])
    with pytest.raises(PosetError):
        build_poset(["a{"], [])
    with pytest.raises(PosetError):
        build_poset(["none"], [])


def test_unbounded_poset_detected():
    p = build_poset(["a", "b"], [])
    assert p.bottom is None and p.top is None
    assert not p.bounded


def test_lower_cone_values(fig1, fig3):
    p = fig1.poset
    assert names(p, p.lower_cone(mask(p, "a b"))) == {"0"}
    assert p.lower_cone(0) == p.all_mask
    q = fig3.poset
    assert names(q, q.lower_cone(mask(q, "a'"))) == {"0", "b", "c", "d", "a'"}


def test_upper_cone_values(fig1, fig2a):
    p = fig1.poset
    assert names(p, p.upper_cone(mask(p, "a b"))) == {"1"}
    assert p.upper_cone(0) == p.all_mask
    q = fig2a.poset
    assert names(q, q.upper_cone(mask(q, "a f"))) == {"1"}


def test_cone_outside_universe_rejected(fig1):
    with pytest.raises(PosetError):
        fig1.poset.lower_cone(1 << 20)


def test_meet_join_values(fig1, fig3):
    p = fig1.poset
    zero, a, b = p.index("0"), p.index("a"), p.index("b")
    assert p.meet(a, b) == zero
    assert p.join(a, b) == p.top
    assert p.meet(a, a) == a
    assert p.join(a, zero) == a
    q = fig3.poset
    assert q.meet(q.index("b'"), q.index("c'")) is None
    assert names(q, q.lower_cone(mask(q, "b' c'"))) == {"0", "a", "d"}
    assert q.join(q.index("b"), q.index("c")) is None
    assert names(q, q.upper_cone(mask(q, "b c"))) == {"d'", "a'", "1"}


def test_distributivity_fig3_witness(fig3):
    p = fig3.poset
    report = p.is_distributive()
    assert not report.holds
    # lexicographically first violating triple, with both computed sides
    assert tuple(p.names[i] for i in report.witness) == ("a", "b", "c")
    assert names(p, report.lhs) == {"0", "c"}
    assert names(p, report.rhs) == {"0"}


def test_distributivity_chain_and_fig4(fig4):
    chain = build_poset(["0", "m", "1"], [("0", "m"), ("m", "1")])
    assert chain.is_distributive().holds
    assert fig4.poset.is_distributive().holds


def test_distributivity_matches_oracle(corpus):
    for entry in corpus.values():
        elements, le, _ = naive.figure(entry.name)
        holds, witness, lhs, rhs = naive.is_distributive(elements, le)
        report = entry.poset.is_distributive()
        assert report.holds == holds
        if not holds:
            assert names(entry.poset, report.lhs) == lhs
            assert names(entry.poset, report.rhs) == rhs


def test_dual_distributivity_equivalence(corpus):
    for entry in corpus.values():
        p = entry.poset
        assert p.is_distributive().holds == p.is_dual_distributive().holds


def test_semilattice_flags(fig1, fig4):
    assert fig1.poset.semilattice_flags() == (True, True)
    assert fig4.poset.semilattice_flags() == (False, False)
    singleton = build_poset(["x"], [])
    assert singleton.semilattice_flags() == (True, True)


def test_cones_match_oracle_on_corpus(corpus):
    import itertools

    for entry in corpus.values():
        p = entry.poset
        elements, le, _ = naive.figure(entry.name)
        for size in (0, 1, 2, 3):
            for combo in itertools.combinations(p.names, size):
                m = p.mask_of(combo)
                assert names(p, p.lower_cone(m)) == naive.lower_cone(elements, le, set(combo))
                assert names(p, p.upper_cone(m)) == naive.upper_cone(elements, le, set(combo))


def test_meets_joins_match_oracle(corpus):
    for entry in corpus.values():
        p = entry.poset
        elements, le, _ = naive.figure(entry.name)
        for x in p.names:
            for y in p.names:
                got = p.meet(p.index(x), p.index(y))
                want = naive.meet(elements, le, x, y)
                assert (p.names[got] if got is not None else None) == want
                got = p.join(p.index(x), p.index(y))
                want = naive.join(elements, le, x, y)
                assert (p.names[got] if got is not None else None) == want


def test_dual_swaps_cones(fig2a):
    p = fig2a.poset
    d = p.dual()
    assert d.bottom == p.top and d.top == p.bottom
    for x in range(p.n):
        assert d.down[x] == p.up[x]
    assert sorted((j, i) for i, j in p.covers) == sorted(d.covers)
