import pytest

from garside import (
    NoUpperBoundWithin,
    join_bounded,
    join_search,
    lower_interval,
    meet,
    weak_leq,
)
from garside.weak_order import weak_leq_by_lengths



def test_weak_leq_spec_examples(dinf):
    s, t = dinf.gens
    st = dinf.element("st")
    assert weak_leq(dinf.identity, st)
    assert weak_leq(s, st)
    assert not weak_leq(t, st)


def test_weak_leq_characterisations_agree(system):
    ball = list(system.ball(5))
    for g in ball:
        for h in ball:
            assert weak_leq(g, h) == weak_leq_by_lengths(g, h)


def test_weak_leq_is_partial_order(system):
    ball = list(system.ball(5 if system.rank <= 3 else 4))
    rel = {(g, h) for g in ball for h in ball if weak_leq(g, h)}
    for g in ball:
        assert (g, g) in rel
    for g, h in rel:
        if g != h:
            assert (h, g) not in rel
    below = {}
    for g, h in rel:
        below.setdefault(h, set()).add(g)
    for g, h in rel:
        assert below.get(g, set()) <= below.get(h, set())  # transitivity


def test_meet_spec_examples(s3):
    s, t = s3.gens
    st, sts = s3.element("st"), s3.element("sts")
    assert meet([st]) == st
    assert meet([s, t]).is_identity()
    assert meet([st, sts]) == st


def test_meet_is_greatest_lower_bound(system):
    ball = list(system.ball(4))
    for g in ball:
        for h in ball:
            m = meet([g, h])
            assert weak_leq(m, g) and weak_leq(m, h)
            for c in ball:
                if weak_leq(c, g) and weak_leq(c, h):
                    assert weak_leq(c, m)


def test_join_bounded_spec_examples(s3):
    s, t = s3.gens
    sts = s3.element("sts")
    assert join_bounded([s], s) == s
    assert join_bounded([s3.identity], sts).is_identity()
    assert join_bounded([s, t], sts) == sts


def test_join_bounded_is_least_upper_bound(system):
    ball = list(system.ball(4))
    for bound in ball:
        inside = [x for x in ball if weak_leq(x, bound)]
        for a in inside:
            for b in inside:
                j = join_bounded([a, b], bound)
                assert weak_leq(a, j) and weak_leq(b, j)
                for c in inside:
                    if weak_leq(a, c) and weak_leq(b, c):
                        assert weak_leq(j, c)


def test_join_precondition_enforced(dinf):
    s, t = dinf.gens
    with pytest.raises(ValueError, match="not below"):
        join_bounded([s, t], dinf.element("st"))


def test_iterated_pairwise_join_matches_full_join(s3, i24, affine_a2):
    for system in (s3, i24, affine_a2):
        ball = list(system.ball(4))
        for bound in ball:
            inside = [x for x in ball if weak_leq(x, bound)]
            for a in inside:
                for b in inside:
                    for c in inside:
                        direct = join_bounded([a, b, c], bound)
                        paired = join_bounded(
                            [join_bounded([a, b], bound), c], bound
                        )
                        assert direct == paired


def test_join_search(dinf, s3):
    s, t = s3.gens
    assert join_search([s3.gens[0]], 2) == s3.gens[0]
    assert join_search([s, t], 3) == s3.element("sts")
    verdict = join_search(list(dinf.gens), 8)
    assert verdict == NoUpperBoundWithin(8)


def test_lower_interval(dinf, s3):
    assert [str(g) for g in lower_interval(dinf.identity)] == ["-"]
    assert len(lower_interval(dinf.gens[0])) == 2
    full = lower_interval(s3.element("sts"))
    assert len(full) == 6
    assert s3.element("ts") in full


def test_lower_interval_is_prefix_set(system):
    for g in system.ball(4):
        members = lower_interval(g).member_set
        expected = {x for x in system.ball(4) if weak_leq(x, g)}
        assert members == expected
