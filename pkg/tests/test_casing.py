from lemscript.casing import CaseClass, char_class, fold_lower, shift_lower, shift_upper


def test_ascii_classes():
    assert char_class("A") is CaseClass.UPPER
    assert char_class("a") is CaseClass.LOWER
    assert char_class("5") is None
    assert char_class(".") is None


def test_non_invertible_characters_are_caseless():
    # eszett uppercases to two characters
    assert char_class("ß") is None
    # dotted capital I lowercases to i + combining dot
    assert char_class("İ") is None
    # dotless i uppercases to plain I, which does not lower back
    assert char_class("ı") is None
    # Kelvin sign lowercases to plain k, which uppers to plain K
    assert char_class("K") is None


def test_cyrillic_and_turkish_pairs():
    assert char_class("Ж") is CaseClass.UPPER
    assert char_class("ж") is CaseClass.LOWER
    assert char_class("Ş") is CaseClass.UPPER
    assert char_class("ş") is CaseClass.LOWER


def test_shifts_only_touch_invertible_characters():
    assert shift_lower("A") == "a"
    assert shift_lower("ß") == "ß"
    assert shift_lower("İ") == "İ"
    assert shift_upper("a") == "A"
    assert shift_upper("ı") == "ı"


def test_fold_lower():
    assert fold_lower("DiD") == "did"
    assert fold_lower("Straße") == "straße"
    assert fold_lower("İstanbul") == "İstanbul"[0] + "stanbul"
    assert fold_lower("ЖУК") == "жук"
