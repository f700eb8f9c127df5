import pytest

from toledo.seifert import (
    BadMultiplicity,
    ExcludedTriple,
    NotCoprime,
    SignatureError,
    TooFewConePoints,
    orbifold_presentation,
    parse_signature,
    validate_signature,
)


def test_basic_signature():
    sig = validate_signature([2, 3, 11])
    assert sig.n == 3 and sig.M == 66
    assert str(sig) == "(2,3,11)"


@pytest.mark.parametrize("raw, exc", [
    ([2, 3, 5], ExcludedTriple),
    ([5, 3, 2], ExcludedTriple),
    ([2, 4, 5], NotCoprime),
    ([1, 3, 5], BadMultiplicity),
    ([0, 3, 5], BadMultiplicity),
    ([2, 3], TooFewConePoints),
    ([], TooFewConePoints),
])
def test_rejections(raw, exc):
    with pytest.raises(exc):
        validate_signature(raw)


def test_errors_are_value_errors():
    assert issubclass(SignatureError, ValueError)


def test_four_fibres_with_2_3_5_allowed():
    assert validate_signature([2, 3, 5, 7]).M == 210


def test_parse_with_twists():
    sig = parse_signature("2,3,11;1:1,1,1")
    assert sig.m == (2, 3, 11) and sig.twists == (1, 1, 1, 1)
    assert sig.literal() == "2,3,11;1:1,1,1"
    assert parse_signature(" 2, 3, 7 ").m == (2, 3, 7)


@pytest.mark.parametrize("text", ["2,x,7", "2,3,7;1", "2,3,7;a:1"])
def test_parse_errors(text):
    with pytest.raises(SignatureError):
        parse_signature(text)


def test_presentation():
    assert orbifold_presentation(validate_signature([2, 3, 11])) == \
        "⟨u1,u2,u3 | u1^2 = u2^3 = u3^11 = u1·u2·u3 = 1⟩"
    text = orbifold_presentation(validate_signature([5, 7, 9, 11]))
    gens, rels = text.strip("⟨⟩").split(" | ")
    assert gens.split(",") == ["u1", "u2", "u3", "u4"]
    assert len(rels.split(" = ")) == 6  # five relations chained to 1
