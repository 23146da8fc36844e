import pytest

from garside import (
    CutoffExceeded,
    ShadowFileError,
    b_projection,
    cone_type_gates,
    garside_closure,
    is_shi_gate,
    partition_part,
    refinement_check,
    shadow_from_gates,
    shadow_from_text,
    shadow_to_text,
    validate_shadow,
    weak_leq,
)

from conftest import ALL_SYSTEMS, get_system

SHADOW_KINDS = (("low", None), ("m-low", 1), ("m-low", 2), ("gamma", None))


def test_shadow_constants(dinf, s3):
    assert shadow_from_gates(dinf, "low").constant_m == 1
    gamma = shadow_from_gates(s3, "gamma")
    assert len(gamma) == 6 and gamma.constant_m == 3


def test_validate_spec_examples(dinf, s3):
    assert validate_shadow(dinf, [dinf.identity, *dinf.gens]).ok
    result = validate_shadow(dinf, [dinf.identity, dinf.gens[0]])
    assert not result.ok and "generator" in result.violation
    result = validate_shadow(s3, [s3.identity, *s3.gens])
    assert not result.ok
    assert "join" in result.violation and s3.element("sts") in result.witness


def test_validate_reports_missing_suffix(s3):
    sts = s3.element("sts")
    full = {s3.identity, *s3.gens, sts, s3.element("st")}
    result = validate_shadow(s3, full)  # "ts" missing, a suffix of sts
    assert not result.ok and "suffix" in result.violation


@pytest.mark.parametrize("name", ALL_SYSTEMS)
@pytest.mark.parametrize("kind,m", SHADOW_KINDS)
def test_gate_shadows_validate(name, kind, m):
    shadow = shadow_from_gates(get_system(name), kind, m)
    assert shadow.constant_m == max(g.length for g in shadow)
    assert validate_shadow(shadow.system, shadow.members).ok


@pytest.mark.parametrize("name", ALL_SYSTEMS)
def test_gamma_is_smallest(name):
    system = get_system(name)
    gamma = set(cone_type_gates(system))
    for kind, m in SHADOW_KINDS:
        shadow = shadow_from_gates(system, kind, m)
        assert gamma <= shadow.members


@pytest.mark.parametrize("name", ALL_SYSTEMS)
@pytest.mark.parametrize("kind,m", SHADOW_KINDS)
def test_members_gate_their_shi_parts(name, kind, m):
    # containment in the M-low set, by the gate criterion
    shadow = shadow_from_gates(get_system(name), kind, m)
    for b in shadow:
        assert is_shi_gate(b, shadow.constant_m)


def test_closure_fills_finite_groups(s3, i24, dinf):
    assert len(garside_closure(s3, [], 8)) == 6
    assert len(garside_closure(i24, [], 8)) == 8
    assert {str(g) for g in garside_closure(dinf, [], 8)} == {"-", "s", "t"}


def test_closure_is_fixed_point_on_valid_shadows(affine_a2):
    low = shadow_from_gates(affine_a2, "low")
    again = garside_closure(affine_a2, low.members, 10)
    assert again.members == low.members


def test_closure_cutoff(s3):
    with pytest.raises(CutoffExceeded):
        garside_closure(s3, [], 2)


def test_projection_spec_examples(dinf):
    low = shadow_from_gates(dinf, "low")
    assert b_projection(low, dinf.identity).is_identity()
    for s in dinf.gens:
        assert b_projection(low, s) == s
    assert b_projection(low, dinf.element("st")) == dinf.gens[0]


@pytest.mark.parametrize("name", ALL_SYSTEMS)
def test_projection_properties(name):
    system = get_system(name)
    shadow = shadow_from_gates(system, "low")
    radius = min(shadow.constant_m + 4, 7)
    for g in system.ball(radius):
        p = b_projection(shadow, g)
        assert p in shadow
        assert weak_leq(p, g)
        assert b_projection(shadow, p) == p
        for b in shadow:
            if weak_leq(b, g):
                assert weak_leq(b, p)


def test_partition_parts(dinf):
    low = shadow_from_gates(dinf, "low")
    s = dinf.gens[0]
    assert [str(g) for g in partition_part(low, dinf.identity, 3)] == ["-"]
    assert [str(g) for g in partition_part(low, s, 3)] == ["s", "st", "sts"]
    assert s in partition_part(low, s, 1)
    with pytest.raises(ValueError, match="not a member"):
        partition_part(low, dinf.element("st"), 3)


def test_part_gates(system):
    shadow = shadow_from_gates(system, "low")
    for b in shadow:
        for g in partition_part(shadow, b, 5):
            assert weak_leq(b, g)


@pytest.mark.parametrize("name", ALL_SYSTEMS)
def test_refinement_gamma_low_low1(name):
    system = get_system(name)
    gamma = shadow_from_gates(system, "gamma")
    low = shadow_from_gates(system, "low")
    low1 = shadow_from_gates(system, "m-low", 1)
    assert refinement_check(gamma, low, 6).ok
    assert refinement_check(low, low1, 6).ok
    assert refinement_check(low, low, 6).ok  # vacuous


def test_refinement_precondition(dinf):
    low = shadow_from_gates(dinf, "low")
    low1 = shadow_from_gates(dinf, "m-low", 1)
    with pytest.raises(ValueError, match="inside"):
        refinement_check(low1, low, 4)


def test_serialization_roundtrip(system):
    for kind, m in (("low", None), ("gamma", None)):
        shadow = shadow_from_gates(system, kind, m)
        text = shadow_to_text(shadow)
        again = shadow_from_text(system, text)
        assert again.members == shadow.members
        assert again.provenance == shadow.provenance
        assert again.constant_m == shadow.constant_m
        assert shadow_to_text(again) == text


def test_serialization_rejects_corruption(s3, dinf):
    low = shadow_from_gates(s3, "gamma")
    text = shadow_to_text(low)
    # drop one element line: axioms break
    lines = text.strip().splitlines()
    removed = "\n".join(
        line for line in lines if line.strip() != "sts"
    ).replace("elements: 6", "elements: 5")
    with pytest.raises(ShadowFileError):
        shadow_from_text(s3, removed + "\n")
    # wrong group
    with pytest.raises(ShadowFileError, match="different group"):
        shadow_from_text(dinf, text)
    # non-normal-form word
    broken = text.replace("\nsts", "\ntst")
    with pytest.raises(ShadowFileError, match="normal form"):
        shadow_from_text(s3, broken)
