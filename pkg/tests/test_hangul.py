import pytest
from hypothesis import given, strategies as st

from koasr import hangul
from koasr.errors import IndexOutOfRange, NotAHangulSyllable
from koasr.hangul import (JamoLetter, JamoTriple, compose, decompose,
                          jamo_to_text, parse_jamo_text, recompose_text,
                          text_to_jamo)


def displays(items):
    return [it.display if isinstance(it, JamoLetter) else it for it in items]


class TestDecomposeCompose:
    def test_first_block(self):
        assert decompose("가") == JamoTriple(0, 0, 0)
        assert compose(JamoTriple(0, 0, 0)) == "가"

    def test_gap_is_g_a_b(self):
        triple = decompose("갑")
        assert hangul.CHO_DISPLAY[triple.cho] == "ㄱ"
        assert hangul.JUNG_DISPLAY[triple.jung] == "ㅏ"
        assert hangul.JONG_DISPLAY[triple.jong] == "ㅂ"
        assert compose(triple) == "갑"

    def test_exhaustive_bijection(self):
        seen = set()
        for cp in range(hangul.SYLLABLE_BASE, hangul.SYLLABLE_LAST + 1):
            ch = chr(cp)
            triple = decompose(ch)
            assert compose(triple) == ch
            seen.add((triple.cho, triple.jung, triple.jong))
        assert len(seen) == 11172

    def test_monotone_in_triple_order(self):
        ordered = sorted(
            (triple.cho, triple.jung, triple.jong, cp)
            for cp in range(hangul.SYLLABLE_BASE, hangul.SYLLABLE_LAST + 1)
            for triple in [decompose(chr(cp))]
        )
        codepoints = [cp for *_, cp in ordered]
        assert codepoints == sorted(codepoints)

    def test_decompose_rejects_non_syllables(self):
        for ch in ["a", "ㄱ", " ", "ᄀ", "漢"]:
            with pytest.raises(NotAHangulSyllable):
                decompose(ch)

    @pytest.mark.parametrize("triple", [(19, 0, 0), (-1, 0, 0), (0, 21, 0),
                                        (0, 0, 28), (0, -1, 0)])
    def test_triple_range_checked(self, triple):
        with pytest.raises(IndexOutOfRange):
            JamoTriple(*triple)

    def test_letter_invariants(self):
        with pytest.raises(IndexOutOfRange):
            JamoLetter(hangul.JONGSEONG, 0)  # empty final never a letter
        with pytest.raises(IndexOutOfRange):
            JamoLetter(hangul.CHOSEONG, 19)
        # 19 + 21 + 27 stream-visible letters
        count = (len(hangul.CHO_DISPLAY) + len(hangul.JUNG_DISPLAY)
                 + len([g for g in hangul.JONG_DISPLAY if g]))
        assert count == 67


class TestTextToJamo:
    def test_ganda(self):
        assert displays(text_to_jamo("간다")) == ["ㄱ", "ㅏ", "ㄴ", "ㄷ", "ㅏ"]

    def test_empty(self):
        assert text_to_jamo("") == []

    def test_passthrough(self):
        items = text_to_jamo("a가")
        assert items[0] == "a"
        assert displays(items[1:]) == ["ㄱ", "ㅏ"]

    def test_table_sentence(self):
        got = displays(text_to_jamo("학교에 간다"))
        assert got == ["ㅎ", "ㅏ", "ㄱ", "ㄱ", "ㅛ", "ㅇ", "ㅔ", " ",
                       "ㄱ", "ㅏ", "ㄴ", "ㄷ", "ㅏ"]


class TestJamoToText:
    def test_ganda_regroups(self):
        letters = text_to_jamo("간다")
        assert jamo_to_text(letters) == "간다"

    def test_round_trip_sentence(self):
        text = "학교에 간다"
        assert jamo_to_text(text_to_jamo(text)) == text

    def test_lone_consonant_degrades_with_diagnostic(self):
        diags = []
        out = jamo_to_text([JamoLetter(hangul.CHOSEONG, 18)], diags)
        assert out == "ㅎ"
        assert diags == [(0, "ㅎ")]

    def test_lone_vowel_degrades(self):
        diags = []
        out = jamo_to_text([JamoLetter(hangul.JUNGSEONG, 0)], diags)
        assert out == "ㅏ"
        assert len(diags) == 1

    def test_tense_consonant_never_final(self):
        # ㄸ cannot close a block: 하 + dangling ㄸ
        letters = parse_jamo_text("ㅎㅏㄸ")
        assert jamo_to_text(letters) == "하ㄸ"

    def test_resyllabification_prefers_next_block(self):
        # final-capable ㄱ before a vowel starts the next block instead
        letters = parse_jamo_text("ㅎㅏㄱㅛ")
        assert jamo_to_text(letters) == "하교"


class TestRecompose:
    @pytest.mark.parametrize("display_form", [
        "학교", "학ㄱㅛ", "ㅎㅏㄱㄱㅛ", "하ㄱ교", "ㅎㅏㄱ교",
    ])
    def test_all_fragmentations_collapse(self, display_form):
        assert recompose_text(display_form) == "학교"

    def test_mixed_content(self):
        assert recompose_text("abc 학ㄱㅛ!") == "abc 학교!"


SYLLABLES = st.integers(hangul.SYLLABLE_BASE, hangul.SYLLABLE_LAST).map(chr)
MIXED_TEXT = st.lists(
    st.one_of(SYLLABLES, st.sampled_from(list("abc xyz,.!123"))),
    max_size=40,
).map("".join)


@given(MIXED_TEXT)
def test_round_trip_property(text):
    assert jamo_to_text(text_to_jamo(text)) == text


@given(MIXED_TEXT)
def test_recompose_of_decomposed_display(text):
    flat = "".join(displays(text_to_jamo(text)))
    assert recompose_text(flat) == text
