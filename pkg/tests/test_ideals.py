import pytest

from catborel import rootsys
from catborel.dyck import all_paths, parse, path_leq, pyramid, staircase
from catborel.ideals import (
    BasicIdeal,
    DyckPair,
    antichain_of,
    b_count_cellsum,
    b_count_formula,
    basic_ideals,
    enumerate_basic,
    from_antichain,
    generators_direct,
    generators_formula,
    ideal_record,
    intervals,
    is_admissible,
    is_quasi_abelian,
    is_quasi_abelian_bracket,
    minus_intervals,
    minus_path,
    nd_plus,
    normalize_support,
    phi,
    phi_inv,
    plus_intervals,
    plus_path,
    principal,
    qnd_direct,
    qnd_from_plus_degree,
    quasi_abelian_count,
    span_is_stable,
    verify_basic_in_truncation,
)
from catborel.rootsys import WindowRoot

B_SEQUENCE = [1, 4, 18, 82, 370, 1648, 7252, 31582, 136338, 584248]

# the two interval fillings drawn in the worked six-strand example
FIG_PLUS = {(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)}
FIG_MINUS = {(1, 1), (3, 3), (4, 4), (4, 5), (5, 5)}


def ideal(n, s_plus=(), s_minus=()):
    return BasicIdeal(n, frozenset(s_plus), frozenset(s_minus))


def full_ideal(n):
    return ideal(n, intervals(n), intervals(n))


def delta_root(n):
    return WindowRoot(tuple(0 for _ in range(n - 1)), 1)


def test_grid_walk_matches_drawn_example():
    assert plus_path(6, FIG_PLUS).word == "rrfrfrrffrff"
    assert minus_path(6, FIG_MINUS).word == "rrffrrfrrfff"
    assert plus_intervals(parse("rrfrfrrffrff")) == frozenset(FIG_PLUS)
    assert minus_intervals(parse("rrffrrfrrfff")) == frozenset(FIG_MINUS)


def test_encoding_anchors():
    for n in range(2, 7):
        everything = frozenset(intervals(n))
        assert plus_path(n, frozenset()) == pyramid(n)
        assert plus_path(n, everything) == staircase(n)
        assert minus_path(n, frozenset()) == staircase(n)
        assert minus_path(n, everything) == pyramid(n)


def test_minimum_and_full_ideal_pairs():
    pair = phi(ideal(4))
    assert (pair.p, pair.q) == (pyramid(4), staircase(4))
    pair = phi(full_ideal(4))
    assert (pair.p, pair.q) == (staircase(4), pyramid(4))


def test_encoding_is_monotone():
    # larger plus-set -> lower p; larger minus-set -> higher q
    n = 5
    upsets = {frozenset(plus_intervals(p)) for p in all_paths(n)}
    downsets = {frozenset(minus_intervals(q)) for q in all_paths(n)}
    for a in upsets:
        for b in upsets:
            if a <= b:
                assert path_leq(plus_path(n, b), plus_path(n, a))
    for a in downsets:
        for b in downsets:
            if a <= b:
                assert path_leq(minus_path(n, a), minus_path(n, b))


def test_path_encoders_reject_malformed_shapes():
    with pytest.raises(ValueError):
        plus_path(3, {(1, 1)})  # right endpoints not a suffix
    with pytest.raises(ValueError):
        minus_path(3, {(1, 2)})  # right endpoints not a prefix
    with pytest.raises(ValueError):
        plus_path(3, {(3, 3)})  # outside the rank


def test_admissibility_examples():
    assert is_admissible(pyramid(3), staircase(3))
    assert not is_admissible(staircase(3), staircase(3))
    for n in range(1, 7):
        assert is_admissible(staircase(n), pyramid(n))
    with pytest.raises(ValueError):
        is_admissible(pyramid(2), pyramid(3))


def test_phi_inverse_round_trip():
    for n in range(1, 7):
        for b in basic_ideals(n):
            pair = phi(b)
            assert phi_inv(pair.p, pair.q) == b


def test_phi_inv_rejects_inadmissible():
    with pytest.raises(ValueError):
        phi_inv(staircase(3), staircase(3))


def test_dyck_pair_validation():
    with pytest.raises(ValueError):
        DyckPair(pyramid(2), pyramid(3))


def test_counts_three_ways():
    for n in range(1, 8):
        assert b_count_formula(n) == B_SEQUENCE[n - 1]
        assert b_count_cellsum(n) == B_SEQUENCE[n - 1]
        assert len(basic_ideals(n)) == B_SEQUENCE[n - 1]
    assert b_count_formula(10) == 584248


def test_count_bounded_by_square_of_catalan():
    from catborel.dyck import catalan_number

    for n in range(1, 11):
        assert b_count_formula(n) <= catalan_number(n) ** 2


def test_enumeration_order_is_by_word_pair():
    for n in (3, 4):
        pairs = [(phi(b).p.word, phi(b).q.word) for b in enumerate_basic(n)]
        assert pairs == sorted(pairs)
        assert len(set(pairs)) == len(pairs)


def test_basic_ideal_validation():
    # missing superinterval in s_plus
    with pytest.raises(ValueError):
        ideal(3, s_plus={(1, 1)}, s_minus={(2, 2)})
    with pytest.raises(ValueError):
        ideal(4, s_plus={(2, 2)}, s_minus=set(intervals(4)))
    # missing subinterval in s_minus
    with pytest.raises(ValueError):
        ideal(4, s_minus={(1, 2)})
    # missing disjoint flank
    with pytest.raises(ValueError):
        ideal(3, s_plus={(1, 1), (1, 2)}, s_minus=set())
    with pytest.raises(ValueError):
        ideal(3, s_plus={(0, 1)})


def test_from_antichain_single_simple_root():
    b = from_antichain(3, [WindowRoot((1, 0), 0)])
    assert b.s_plus == frozenset({(1, 1), (1, 2)})
    assert b.s_minus == frozenset({(2, 2)})
    support = {w.label for w in b.window_support()}
    assert support == {"pos:1,0", "pos:1,1", "delta", "neg:0,1"}


def test_from_antichain_delta_is_minimum_ideal():
    for n in (1, 2, 3, 5):
        b = from_antichain(n, [delta_root(n)])
        assert b == ideal(n)
        assert principal(n, delta_root(n)) == b


def test_from_antichain_rejects_bad_input():
    with pytest.raises(ValueError):
        from_antichain(3, [])
    with pytest.raises(ValueError):
        from_antichain(3, [WindowRoot((1, 0), 0), WindowRoot((1, 1), 0)])


def test_antichain_round_trip_and_principal_join():
    for n in range(1, 6):
        for b in basic_ideals(n):
            chain = antichain_of(b)
            assert from_antichain(n, chain) == b
            s_plus, s_minus = set(), set()
            for w in chain:
                piece = principal(n, w)
                s_plus |= piece.s_plus
                s_minus |= piece.s_minus
            assert (frozenset(s_plus), frozenset(s_minus)) == (b.s_plus, b.s_minus)


def test_interval_order_agrees_with_window_poset():
    # the tagged-interval order used here must match the generic
    # closure order computed from root coordinates, on every pair
    from catborel.ideals import _entry_leq, _window_entry

    for n in (2, 3, 4, 5, 6):
        poset = rootsys.window(rootsys.build_root_system(f"A{n - 1}"))
        for a in poset.elements:
            for b in poset.elements:
                assert _entry_leq(_window_entry(a), _window_entry(b)) == poset.closure_leq(
                    a, b
                ), (n, a.label, b.label)


def test_window_supports_are_poset_coideals():
    for n in (2, 3, 4, 5):
        poset = rootsys.window(rootsys.build_root_system(f"A{n - 1}"))
        for b in basic_ideals(n)[:40]:
            support = b.window_support()
            upset = poset.coideal_of(poset.minimal_elements(support))
            assert upset == support


def test_generator_counts_agree():
    for n in range(1, 7):
        for b in basic_ideals(n):
            assert generators_direct(b) == generators_formula(b)


def test_generator_examples():
    for n in (2, 3, 5):
        assert generators_direct(ideal(n)) == 1
    assert generators_direct(full_ideal(3)) == 3
    assert generators_formula(full_ideal(3)) == 3


def test_generator_endpoint_correction_guard():
    # with s_plus the longest root only, the unguarded expression gives -1
    b = ideal(3, s_plus={(1, 2)})
    pair = phi(b)
    assert (pair.p.word, pair.q.word) == ("rrfrff", "rfrfrf")
    n = 3
    a, bb = pair.p.first_peak, pair.p.last_peak
    c, d = pair.q.first_peak, pair.q.last_peak
    unguarded = (
        len(pair.p.valleys)
        + sum(1 for _, h in pair.q.peaks if h >= 2)
        - (1 if d == n - a else 0)
        - (1 if c == n - bb else 0)
    )
    assert unguarded == -1
    assert generators_direct(b) == 1
    assert generators_formula(b) == 1


def test_quasi_abelian_counts():
    expected = [1, 3, 11, 44, 183, 774]
    assert [quasi_abelian_count(n) for n in range(1, 7)] == expected


def _qa_count_band_walk(n):
    """Independent count of pairs min_partner(p) <= q <= p: a height-band
    walk DP per p, never iterating candidate partners."""
    from catborel.dyck import all_paths as paths, min_partner as floor_of

    total = 0
    for p in paths(n):
        hi = p.heights
        lo = floor_of(p).heights
        ways = {0: 1}
        for x in range(1, 2 * n + 1):
            nxt = {}
            for h, c in ways.items():
                for h2 in (h - 1, h + 1):
                    if h2 >= 0 and lo[x] <= h2 <= hi[x]:
                        nxt[h2] = nxt.get(h2, 0) + c
            ways = nxt
        total += ways.get(0, 0)
    return total


def test_quasi_abelian_band_walk_oracle():
    for n in range(1, 8):
        assert _qa_count_band_walk(n) == quasi_abelian_count(n)
    # the walk extends the sequence cheaply past the pair iteration
    assert _qa_count_band_walk(9) == 59711
    assert _qa_count_band_walk(10) == 253430


def test_full_ideal_is_not_quasi_abelian():
    for n in range(2, 6):
        assert not is_quasi_abelian(full_ideal(n))
    assert is_quasi_abelian(ideal(3))


def test_quasi_abelian_matches_bracket_oracle():
    for n in range(1, 5):
        for b in basic_ideals(n):
            assert is_quasi_abelian(b) == is_quasi_abelian_bracket(b)


def test_nilpotency_examples():
    b = ideal(2, s_plus={(1, 1)}, s_minus={(1, 1)})
    assert nd_plus(b) == 1
    assert qnd_direct(b) == 2
    assert nd_plus(ideal(3)) == 0
    assert qnd_direct(ideal(3)) == 1
    assert qnd_direct(ideal(1)) == 1


def test_qnd_two_routes_and_bounds():
    for n in range(1, 6):
        for b in basic_ideals(n):
            m = nd_plus(b)
            value = qnd_direct(b)
            assert value == qnd_from_plus_degree(b)
            assert value in (m, m + 1)
            if m == 0:
                assert value == 1
            assert (value == 1) == is_quasi_abelian(b)


def test_normalize_support():
    for n in (2, 3):
        for b in basic_ideals(n)[:10]:
            for k in (0, 1, 2, 5):
                items = [(w, k) for w in b.window_support()]
                assert normalize_support(n, items) == b
    # idempotence through a round trip
    b = full_ideal(3)
    once = normalize_support(3, [(w, 2) for w in b.window_support()])
    again = normalize_support(3, [(w, 0) for w in once.window_support()])
    assert once == again == b
    # entries above the minimal shift belong to the tail and are allowed
    items = [(w, 1) for w in b.window_support()] + [(delta_root(3), 4)]
    assert normalize_support(3, items) == b


def test_normalize_support_rejects_non_supports():
    with pytest.raises(ValueError):
        normalize_support(3, [])
    # minimal layer without the imaginary root
    with pytest.raises(ValueError):
        normalize_support(3, [(WindowRoot((1, 0), 0), 2)])
    # minimal layer that is not upward closed
    items = [(WindowRoot((1, 0), 0), 1), (delta_root(3), 1)]
    with pytest.raises(ValueError):
        normalize_support(3, items)


def test_truncation_oracle_accepts_all_basic_ideals():
    for n in range(1, 5):
        for b in basic_ideals(n):
            assert verify_basic_in_truncation(b)


def test_truncation_oracle_negative_controls():
    # a lone simple root misses its bracket with the next raising operator
    assert not span_is_stable(3, {(1, 1)}, {(2, 2)})
    # dropping the imaginary component breaks the annihilating bracket
    assert not span_is_stable(
        3, {(1, 1), (1, 2)}, {(1, 1), (2, 2), (1, 2)}, include_delta=False
    )


def test_ideal_record_shape():
    rec = ideal_record(full_ideal(3))
    assert rec == {
        "n": 3,
        "p": "rfrfrf",
        "q": "rrrfff",
        "s_plus": [[1, 1], [1, 2], [2, 2]],
        "s_minus": [[1, 1], [1, 2], [2, 2]],
        "generators": 3,
        "quasi_abelian": False,
        "nd_plus": 2,
        "qnd": 3,
    }
