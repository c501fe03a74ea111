import itertools
from fractions import Fraction as Q

import pytest

from affweyl.rootsys import (
    CIRCULAR_CASES,
    RootSystemError,
    additive_closure,
    build_root_system,
    circular_order,
    circular_order_condition,
    coroot,
    neg,
    orders_equivalent,
    rank2_closed_subsystem,
    reduced_members,
    reflect,
    run_circular_case,
    star_reduction,
)


def v(*coords):
    return tuple(Q(c) for c in coords)


def brute_force_closure_count(label, rank):
    """Independent oracle: close the simple roots under reflections."""
    system = build_root_system(label, rank)
    roots = set(system.simple_roots) | {neg(r) for r in system.simple_roots}
    grew = True
    while grew:
        grew = False
        for b in list(roots):
            for c in list(roots):
                img = reflect(b, c)
                if img not in roots:
                    roots.add(img)
                    grew = True
    return roots


def test_a2_roots():
    system = build_root_system("A", 2)
    expected = {v(1, -1, 0), v(-1, 1, 0), v(0, 1, -1), v(0, -1, 1), v(1, 0, -1), v(-1, 0, 1)}
    assert system.roots == frozenset(expected)


def test_bc3_enumeration_against_reflection_closure():
    system = build_root_system("BC", 3)
    assert len(system.roots) == 24
    # the reduced part is a B_3 system; its reflection closure is the oracle
    closure = brute_force_closure_count("B", 3)
    assert reduced_members(system.roots) == closure
    # every reduced b comes paired with 2b
    for b in reduced_members(system.roots):
        if sum(1 for c in b if c != 0) == 1:
            assert tuple(2 * c for c in b) in system.roots


def test_b2_has_eight_roots():
    system = build_root_system("B", 2)
    assert len(system.roots) == 8


def test_counts_all_supported_types():
    for label, rank, count in [("A", 3, 12), ("B", 3, 18), ("C", 3, 18), ("D", 4, 24),
                               ("BC", 2, 12), ("E6", 6, 72), ("E7", 7, 126),
                               ("E8", 8, 240), ("F4", 4, 48), ("G2", 2, 12)]:
        system = build_root_system(label, rank)
        assert len(system.roots) == count
        for s in system.simple_roots:
            assert s in system.roots


def test_illegal_pairs_rejected():
    with pytest.raises(RootSystemError):
        build_root_system("E6", 7)
    with pytest.raises(RootSystemError):
        build_root_system("D", 2)
    with pytest.raises(RootSystemError):
        build_root_system("X", 4)


def test_star_reduction():
    bc3 = build_root_system("BC", 3)
    assert star_reduction(v(2, 0, 0), bc3) == v(1, 0, 0)
    assert star_reduction(v(1, -1, 0), bc3) == v(1, -1, 0)
    for b in bc3.roots:
        assert star_reduction(star_reduction(b, bc3), bc3) == star_reduction(b, bc3)
    with pytest.raises(RootSystemError):
        star_reduction(v(3, 0, 0), bc3)


def test_reflect_basic():
    assert reflect(v(1, -1, 0), v(0, 1, -1)) == v(1, 0, -1)
    b = v(1, -1, 0)
    assert reflect(b, b) == neg(b)


def test_reflect_permutes_b3():
    system = build_root_system("B", 3)
    roots = sorted(system.roots)
    for b in roots:
        image = {reflect(b, c) for c in roots}
        assert image == set(roots)
        for c in roots:
            assert reflect(b, reflect(b, c)) == c


def test_rank2_subsystem_examples():
    b3 = build_root_system("B", 3)
    sub = rank2_closed_subsystem(b3, v(-1, -1, 0), v(0, 1, -1))
    assert len(sub.members) == 6
    sub = rank2_closed_subsystem(b3, v(-1, -1, 0), v(1, -1, 0))
    assert sub.members == frozenset({v(1, 1, 0), v(-1, -1, 0), v(1, -1, 0), v(-1, 1, 0),
                                     v(1, 0, 0), v(-1, 0, 0), v(0, 1, 0), v(0, -1, 0)})
    a3 = build_root_system("A", 3)
    sub = rank2_closed_subsystem(a3, v(1, -1, 0, 0), v(0, 0, 1, -1))
    assert len(sub.members) == 4
    with pytest.raises(RootSystemError):
        rank2_closed_subsystem(b3, v(1, 1, 0), v(-1, -1, 0))


def test_circular_order_c2():
    c2 = build_root_system("C", 2)
    sub = rank2_closed_subsystem(c2, v(-2, 0), v(1, -1))
    found = circular_order(sub, v(-2, 0), v(1, -1))
    expected = [v(-2, 0), v(-1, -1), v(0, -2), v(1, -1), v(2, 0), v(1, 1), v(0, 2), v(-1, 1)]
    assert orders_equivalent(found, expected)
    assert found[0] == v(-2, 0) and found[3] == v(1, -1)


def test_circular_order_b2_failure():
    b3 = build_root_system("B", 3)
    sub = rank2_closed_subsystem(b3, v(-1, -1, 0), v(1, -1, 0))
    assert circular_order(sub, v(-1, -1, 0), v(1, -1, 0)) is None


def test_circular_order_bc_reduced():
    bc2 = build_root_system("BC", 2)
    sub = rank2_closed_subsystem(bc2, v(-1, 0), v(1, -1))
    found = circular_order(sub, v(-1, 0), v(1, -1))
    expected = [v(-1, 0), v(-1, -1), v(0, -1), v(1, -1), v(1, 0), v(1, 1), v(0, 1), v(-1, 1)]
    assert orders_equivalent(found, expected)


def test_circular_order_precondition():
    bc2 = build_root_system("BC", 2)
    sub = rank2_closed_subsystem(bc2, v(-1, 0), v(1, -1))
    with pytest.raises(RootSystemError):
        circular_order(sub, v(-2, 0), v(1, -1))


def test_circular_order_output_reverified():
    # condition re-checked independently of the search, for every success case
    for case in CIRCULAR_CASES:
        found, ok = run_circular_case(case)
        assert ok, f"case {case.label}: got {found}, expected {case.expected}"


def test_table_failures_exactly_for_the_two_flagged_cases():
    failures = [case.label for case in CIRCULAR_CASES if case.expected is None]
    assert failures == ["B_n", "B-C_n"]
    for case in CIRCULAR_CASES:
        if case.expected is None:
            found, ok = run_circular_case(case)
            assert found is None and ok


def test_additive_closure_g2_long_roots():
    g2 = build_root_system("G2", 2)
    b, bp = v(1, 1, -2), v(-2, 1, 1)
    closure = additive_closure(g2.roots, [b, bp])
    assert len(closure) == 6
    assert all(sum(abs(c) for c in r) == 4 for r in closure)
