import pytest

from wreathring.families import (InapplicableTheorem, canonical_theorem, check_generation,
                                 generator_family, parse_eps_choice, verify_theorem)
from wreathring.groups import builtin
from wreathring.wreath import RepRingElement

from oracles import sn_character_oracle

TRIV, Z2, S3 = builtin("trivial"), builtin("z2"), builtin("s3")


def irr(label):
    return RepRingElement.irreducible(label)


def test_marin_hooks_family():
    gens = generator_family(TRIV, 4, "marin-hooks")
    assert gens == [irr(((4,),)), irr(((3, 1),)), irr(((2, 1, 1),)), irr(((1, 1, 1, 1),))]
    two = generator_family(TRIV, 5, "marin-two-row")
    assert two == [irr(((5,),)), irr(((4, 1),)), irr(((3, 2),))]


def test_type_b_family_at_n2():
    gens = generator_family(Z2, 2, "thm4.3")
    assert set(gens) == {irr(((2,), ())), irr(((1, 1), ())), irr(((1,), (1,))), irr(((), (1, 1)))}


def test_thm41_family_z2_n2():
    gens = generator_family(Z2, 2, "4.1", {"chi": "sign"})
    assert gens == [irr(((2,), ())), irr(((1, 1), ())), irr(((1,), (1,))), irr(((), (1, 1)))]
    triv = generator_family(Z2, 2, "4.1", {"chi": "triv"})
    assert triv[-1] == irr(((), (2,)))


def test_eps_parsing():
    assert parse_eps_choice(S3, None) == {1: "sign", 2: "sign"}
    v = S3.irreducible_names.index("V")
    assert parse_eps_choice(S3, {"V": "triv", "1": "sign"})[v] == "triv"
    assert parse_eps_choice(S3, {"1": "sign"})[0] == "sign"
    with pytest.raises(ValueError):
        parse_eps_choice(S3, {"V": "maybe"})


def test_theorem_names():
    assert canonical_theorem("4.3") == "thm4.3"
    assert canonical_theorem("Marin-Hooks") == "marin-hooks"
    with pytest.raises(ValueError):
        canonical_theorem("5.1")


@pytest.mark.parametrize("table,theorem", [(Z2, "marin-hooks"), (S3, "thm4.2"), (S3, "thm4.3"),
                                           (builtin("z3"), "thm4.3")])
def test_inapplicable(table, theorem):
    with pytest.raises(InapplicableTheorem):
        generator_family(table, 2, theorem)


@pytest.mark.parametrize("n", range(2, 6))
def test_marin_families_generate(n):
    assert verify_theorem(TRIV, n, "marin-hooks")[1].generates
    assert verify_theorem(TRIV, n, "marin-two-row")[1].generates


@pytest.mark.parametrize("n", [2, 3])
def test_thm43_generates(n):
    _, report = verify_theorem(Z2, n, "thm4.3")
    assert report.generates and report.index == 1


@pytest.mark.parametrize("name", ["z3", "klein"])
def test_thm42_generates(name):
    assert verify_theorem(builtin(name), 2, "thm4.2")[1].generates


def test_thm41_s3_n2_generates():
    for flavor in ("hook", "two-row"):
        for eps in ("sign", "triv"):
            _, rep = verify_theorem(S3, 2, "thm4.1", {"sgn": eps, "V": eps}, flavor)
            assert rep.generates, (flavor, eps)


def _without(gens, label):
    return [g for g in gens if g != irr(label)]


def test_dropping_the_reflection_hook():
    gens = _without(generator_family(TRIV, 3, "marin-hooks"), ((2, 1),))
    assert check_generation(TRIV, 3, gens)[1].verdict == "fails"
    gens = _without(generator_family(TRIV, 4, "marin-two-row"), ((3, 1),))
    report = check_generation(TRIV, 4, gens)[1]
    assert report.verdict == "fails" and report.index is None


def test_hook_family_at_n4_survives_losing_the_reflection_hook():
    """V(2,1,1) (x) sign = V(3,1), so the remaining hooks still generate."""
    assert sn_character_oracle((2, 1, 1), (1, 1, 1, 1)) == 3
    for mu in ((1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)):
        twisted = sn_character_oracle((2, 1, 1), mu) * sn_character_oracle((1, 1, 1, 1), mu)
        assert twisted == sn_character_oracle((3, 1), mu)
    gens = _without(generator_family(TRIV, 4, "marin-hooks"), ((3, 1),))
    assert check_generation(TRIV, 4, gens)[1].generates


def test_dropping_top_exterior_power_fails():
    gens = [g for g in generator_family(Z2, 2, "thm4.3") if g != irr(((), (1, 1)))]
    _, report = check_generation(Z2, 2, gens)
    assert report.verdict == "fails"
