from functools import lru_cache
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from fockspace.partitions import (
    EMPTY,
    Cell,
    Partition,
    WeightLabel,
    addable_i_boxes,
    content,
    p_core,
    p_core_and_quotient,
    p_core_by_removal,
    parse_partition,
    partitions_of,
    partitions_up_to,
    removable_i_boxes,
    residue,
    residue_counts,
    rim_hook_additions,
    rim_hook_removals,
    z_value,
)

P = Partition


# --- brute-force oracles ----------------------------------------------------

def cells_of(lam):
    return {(k, l) for k in range(1, len(lam) + 1) for l in range(1, lam[k - 1] + 1)}


def is_border_strip(outer, inner):
    """Connected skew shape without a 2x2 square."""
    skew = cells_of(outer) - cells_of(inner)
    if not skew or not cells_of(inner) <= cells_of(outer):
        return False
    for (k, l) in skew:
        if {(k + 1, l), (k, l + 1), (k + 1, l + 1)} <= skew:
            return False
    seen, todo = set(), [next(iter(skew))]
    while todo:
        c = todo.pop()
        if c in seen:
            continue
        seen.add(c)
        k, l = c
        todo.extend(n for n in ((k + 1, l), (k - 1, l), (k, l + 1), (k, l - 1)) if n in skew)
    return seen == skew


def brute_rim_hooks(lam, r):
    out = []
    for mu in partitions_of(lam.size - r):
        if is_border_strip(lam, mu):
            rows = {k for k, _ in cells_of(lam) - cells_of(mu)}
            out.append((mu, len(rows) - 1))
    return sorted(out, reverse=True)


@lru_cache(maxsize=None)
def all_terminal_cores(lam, p):
    hooks = rim_hook_removals(lam, p)
    if not hooks:
        return frozenset([lam])
    return frozenset().union(*(all_terminal_cores(h.result, p) for h in hooks))


def brute_residue_counts(lam, p):
    counts = {}
    for k in range(1, len(lam) + 1):
        for l in range(1, lam[k - 1] + 1):
            r = (l - k) % p if p else l - k
            counts[r] = counts.get(r, 0) + 1
    return counts


def partition_count_series(n):
    coeffs = [1] + [0] * n
    for part in range(1, n + 1):
        for k in range(part, n + 1):
            coeffs[k] += coeffs[k - part]
    return coeffs


# --- construction ----------------------------------------------------------

def test_partition_validation():
    assert P([4, 4, 2, 1]).size == 11
    assert P([3, 0, 0]) == P([3])
    with pytest.raises(ValueError):
        P([1, 2])
    with pytest.raises(ValueError):
        P([2, -1])


def test_parse_and_format():
    assert parse_partition("[4,4,2,1]") == P([4, 4, 2, 1])
    assert parse_partition("[]") == EMPTY
    assert str(P([4, 4, 2, 1])) == "[4,4,2,1]"
    with pytest.raises(ValueError):
        parse_partition("[1,2]")
    with pytest.raises(ValueError):
        parse_partition("4,4")


@given(partitions(10))
def test_conjugate_is_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


# --- contents and residues ---------------------------------------------------

def test_content_examples():
    assert content(Cell(1, 1)) == 0
    assert content(Cell(2, 1)) == -1
    assert content(Cell(1, 4)) == 3
    assert Cell(1, 4) in set(P([4, 4, 2, 1]).cells())


def test_residue_examples():
    assert residue(Cell(2, 1), 3) == 2
    assert residue(Cell(1, 6), 0) == 5
    assert residue(Cell(1, 5), 2) == 0
    with pytest.raises(ValueError):
        residue(Cell(1, 1), 1)


def test_addable_examples():
    for p in (0, 2, 3, 5):
        assert addable_i_boxes(EMPTY, 0, p) == [P([1])]
    assert addable_i_boxes(P([2]), 2, 3) == [P([3]), P([2, 1])]
    # corners of (2,1) have contents 2, 0, -2: none of content 1
    corner_contents = sorted(l - k for k, l in [(1, 3), (2, 2), (3, 1)])
    assert corner_contents == [-2, 0, 2]
    assert addable_i_boxes(P([2, 1]), 1, 0) == []
    assert addable_i_boxes(P([2, 1]), 2, 0) == [P([3, 1])]
    # index read mod p
    assert addable_i_boxes(P([2]), -1, 3) == [P([3]), P([2, 1])]


def test_removable_examples():
    assert removable_i_boxes(P([1]), 0, 0) == [EMPTY]
    assert all(removable_i_boxes(EMPTY, i, 3) == [] for i in range(3))
    assert removable_i_boxes(P([2, 1]), 2, 3) == [P([2])]


def test_residue_counts_examples():
    assert residue_counts(EMPTY, 3).vector() == (0, 0, 0)
    assert residue_counts(P([2, 1]), 3).vector() == (1, 1, 1)
    assert residue_counts(P([4, 4, 2, 1]), 0)[0] == 2


@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_residue_counts_match_cell_enumeration(p):
    for lam in partitions_up_to(10):
        assert residue_counts(lam, p).as_dict() == brute_residue_counts(lam, p)
        assert residue_counts(lam, p).size == lam.size


def test_weight_label_rejects_bad_counts():
    with pytest.raises(ValueError):
        WeightLabel.from_mapping(3, {3: 1})
    with pytest.raises(ValueError):
        WeightLabel.from_mapping(0, {1: -1})


@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_add_remove_duality_and_bookkeeping(p):
    for lam in partitions_up_to(10):
        indices = range(p) if p else range(-len(lam) - 1, len(lam) + 2)
        for i in indices:
            for mu in addable_i_boxes(lam, i, p):
                assert lam in removable_i_boxes(mu, i, p)
                assert residue_counts(mu, p) == residue_counts(lam, p).shift(i)
            for mu in removable_i_boxes(lam, i, p):
                assert lam in addable_i_boxes(mu, i, p)
            assert addable_i_boxes(lam, i, p) == sorted(addable_i_boxes(lam, i, p), reverse=True)


# --- rim hooks ---------------------------------------------------------------

def test_rim_hook_examples():
    assert rim_hook_removals(P([1]), 1) == [(EMPTY, 0)]
    assert rim_hook_removals(P([2, 2]), 2) == [(P([2]), 0), (P([1, 1]), 1)]
    assert rim_hook_removals(P([2]), 3) == []


def test_rim_hooks_match_brute_force():
    for lam in partitions_up_to(8):
        for r in range(1, 7):
            assert [tuple(x) for x in rim_hook_removals(lam, r)] == brute_rim_hooks(lam, r)


def test_rim_hook_additions_invert_removals():
    for lam in partitions_up_to(7):
        for r in range(1, 5):
            for mu, ht in rim_hook_additions(lam, r):
                assert (lam, ht) in [tuple(x) for x in rim_hook_removals(mu, r)]
            for nu, ht in rim_hook_removals(lam, r):
                assert (lam, ht) in [tuple(x) for x in rim_hook_additions(nu, r)]


# --- cores and quotients ----------------------------------------------------

def test_core_examples():
    assert p_core_and_quotient(P([1]), 2) == (P([1]), (EMPTY, EMPTY))
    core, quotient = p_core_and_quotient(P([2]), 2)
    assert core == EMPTY and sum(q.size for q in quotient) == 1
    # exhaustive removal in all orders agrees on (4,4,2,1)
    assert all_terminal_cores(P([4, 4, 2, 1]), 3) == {p_core(P([4, 4, 2, 1]), 3)}
    assert p_core(P([4, 4, 2, 1]), 3) == P([1, 1])


@pytest.mark.parametrize("p", [2, 3])
def test_core_confluence(p):
    for lam in partitions_up_to(12):
        cores = all_terminal_cores(lam, p)
        assert len(cores) == 1
        core, quotient = p_core_and_quotient(lam, p)
        assert cores == {core} and p_core_by_removal(lam, p) == core
        assert lam.size == core.size + p * sum(q.size for q in quotient)
        assert (lam.size - core.size) % p == 0
        assert rim_hook_removals(core, p) == []


@pytest.mark.parametrize("p", [2, 3])
def test_nakayama_consistency(p):
    for n in range(11):
        shapes = partitions_of(n)
        for a, b in product(shapes, repeat=2):
            same_core = p_core(a, p) == p_core(b, p)
            assert same_core == (residue_counts(a, p) == residue_counts(b, p))


def test_p_core_rejects_small_p():
    with pytest.raises(ValueError):
        p_core_and_quotient(P([2]), 1)


# --- enumeration / z -----------------------------------------------------------

def test_partition_counts():
    series = partition_count_series(20)
    assert [len(partitions_of(n)) for n in range(21)] == series
    assert series[:9] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_partitions_are_canonical():
    for n in range(9):
        shapes = partitions_of(n)
        assert list(shapes) == sorted(shapes, reverse=True)
        assert len(set(shapes)) == len(shapes)
        assert all(s.size == n for s in shapes)


def test_z_value_examples():
    assert z_value(EMPTY) == 1
    assert z_value(P([1, 1, 1])) == 6
    assert z_value(P([2, 2, 1])) == 8


@given(st.integers(1, 8))
def test_z_value_counts_centralizers(n):
    # sum over classes of n!/z = n!
    from math import factorial
    assert sum(factorial(n) // z_value(lam) for lam in partitions_of(n)) == factorial(n)
