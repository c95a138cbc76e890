"""Unicode arithmetic between precomposed Hangul syllables and positional Jamo.

A precomposed syllable U+AC00..U+D7A3 encodes a (choseong, jungseong,
jongseong) index triple as ``0xAC00 + (cho*21 + jung)*28 + jong``. The
positional inventory is 19 choseong, 21 jungseong and 28 jongseong slots
(slot 0 meaning "no final"), i.e. 19*21*28 = 11172 distinct syllables.

Letters are stored positionally and displayed as compatibility-Jamo glyphs
(ㄱ, ㅏ, ...). Display glyphs do not distinguish an initial ㄱ from a final
ㄱ; ``jamo_to_text`` resolves positions by standard resyllabification, so
round-trips through display form are exact for any precomposed text.
"""

from dataclasses import dataclass

from .errors import IndexOutOfRange, NotAHangulSyllable

SYLLABLE_BASE = 0xAC00
SYLLABLE_LAST = 0xD7A3

N_CHO, N_JUNG, N_JONG = 19, 21, 28

CHO_DISPLAY = list("ㄱㄲㄴㄷㄸㄹㅁㅂㅃㅅㅆㅇㅈㅉㅊㅋㅌㅍㅎ")
JUNG_DISPLAY = list("ㅏㅐㅑㅒㅓㅔㅕㅖㅗㅘㅙㅚㅛㅜㅝㅞㅟㅠㅡㅢㅣ")
# index 0 is the empty jongseong; it has no display glyph and never
# appears in a letter stream.
JONG_DISPLAY = [""] + list("ㄱㄲㄳㄴㄵㄶㄷㄹㄺㄻㄼㄽㄾㄿㅀㅁㅂㅄㅅㅆㅇㅈㅊㅋㅌㅍㅎ")

_CHO_OF_GLYPH = {g: i for i, g in enumerate(CHO_DISPLAY)}
_JUNG_OF_GLYPH = {g: i for i, g in enumerate(JUNG_DISPLAY)}
_JONG_OF_GLYPH = {g: i for i, g in enumerate(JONG_DISPLAY) if g}

CHOSEONG, JUNGSEONG, JONGSEONG = "choseong", "jungseong", "jongseong"

_INDEX_LIMIT = {CHOSEONG: N_CHO, JUNGSEONG: N_JUNG, JONGSEONG: N_JONG}


@dataclass(frozen=True, slots=True)
class JamoTriple:
    """Positional indices of one syllable block; jong 0 means no final."""

    cho: int
    jung: int
    jong: int

    def __post_init__(self):
        if not (0 <= self.cho < N_CHO and 0 <= self.jung < N_JUNG
                and 0 <= self.jong < N_JONG):
            raise IndexOutOfRange(
                f"jamo triple out of range: ({self.cho}, {self.jung}, {self.jong})")


@dataclass(frozen=True, slots=True)
class JamoLetter:
    """One stream-visible Jamo letter. Jongseong index is always >= 1."""

    kind: str
    index: int

    def __post_init__(self):
        limit = _INDEX_LIMIT.get(self.kind)
        if limit is None:
            raise IndexOutOfRange(f"unknown jamo kind: {self.kind!r}")
        lo = 1 if self.kind == JONGSEONG else 0
        if not (lo <= self.index < limit):
            raise IndexOutOfRange(f"{self.kind} index out of range: {self.index}")

    @property
    def display(self) -> str:
        """Compatibility-Jamo glyph for this letter."""
        if self.kind == CHOSEONG:
            return CHO_DISPLAY[self.index]
        if self.kind == JUNGSEONG:
            return JUNG_DISPLAY[self.index]
        return JONG_DISPLAY[self.index]


def is_syllable(ch: str) -> bool:
    """True for a single precomposed Hangul syllable."""
    return len(ch) == 1 and SYLLABLE_BASE <= ord(ch) <= SYLLABLE_LAST


def decompose(ch: str) -> JamoTriple:
    """Split one precomposed syllable into its positional index triple."""
    if not is_syllable(ch):
        raise NotAHangulSyllable(f"not a precomposed Hangul syllable: {ch!r}")
    offset = ord(ch) - SYLLABLE_BASE
    jong = offset % N_JONG
    rest = offset // N_JONG
    return JamoTriple(rest // N_JUNG, rest % N_JUNG, jong)


def compose(triple: JamoTriple) -> str:
    """Inverse of decompose: index triple back to the syllable character."""
    return chr(SYLLABLE_BASE + (triple.cho * N_JUNG + triple.jung) * N_JONG
               + triple.jong)


def letters_of(triple: JamoTriple) -> list[JamoLetter]:
    """Stream letters of a triple: 2 letters, or 3 when a final is present."""
    out = [JamoLetter(CHOSEONG, triple.cho), JamoLetter(JUNGSEONG, triple.jung)]
    if triple.jong:
        out.append(JamoLetter(JONGSEONG, triple.jong))
    return out


def text_to_jamo(text: str) -> list:
    """Expand syllables to Jamo letters; everything else passes through.

    Returns a list whose items are JamoLetter for Hangul content and the
    original 1-character strings for anything else, order preserved.
    """
    out = []
    for ch in text:
        if is_syllable(ch):
            out.extend(letters_of(decompose(ch)))
        else:
            out.append(ch)
    return out


def _roles(item):
    """(cho, jung, jong) indices a letter's glyph can take; (None,)*3 otherwise.

    Roles come from the display glyph, not the stored kind, so regrouping may
    reassign a final consonant to the next block (resyllabification).
    """
    if not isinstance(item, JamoLetter):
        return None, None, None
    glyph = item.display
    return (_CHO_OF_GLYPH.get(glyph), _JUNG_OF_GLYPH.get(glyph),
            _JONG_OF_GLYPH.get(glyph))


def jamo_to_text(letters, diagnostics: list | None = None) -> str:
    """Regroup a letter stream into syllable blocks.

    Greedy left-to-right: a consonant followed by a vowel opens a block; a
    following consonant joins as the final only when the letter after it is
    not a vowel (resyllabification). Letters that cannot start a valid block
    are emitted as display glyphs and, when ``diagnostics`` is a list,
    recorded there as (position, glyph) pairs. Non-letter items pass through
    verbatim.
    """
    items = list(letters)
    out = []
    i, n = 0, len(items)
    while i < n:
        item = items[i]
        cho = _roles(item)[0]
        if cho is not None and i + 1 < n:
            jung = _roles(items[i + 1])[1]
            if jung is not None:
                jong = 0
                if i + 2 < n:
                    cand_jong = _roles(items[i + 2])[2]
                    after_is_vowel = (i + 3 < n
                                      and _roles(items[i + 3])[1] is not None)
                    if cand_jong is not None and not after_is_vowel:
                        jong = cand_jong
                out.append(compose(JamoTriple(cho, jung, jong)))
                i += 3 if jong else 2
                continue
        if isinstance(item, JamoLetter):
            out.append(item.display)
            if diagnostics is not None:
                diagnostics.append((i, item.display))
        else:
            out.append(item)
        i += 1
    return "".join(out)


def parse_jamo_text(text: str) -> list:
    """Inverse-direction parser for display-form text.

    Precomposed syllables expand to letters; bare compatibility-Jamo glyphs
    become letters with a canonical kind (vowels jungseong, consonants
    choseong when possible, else jongseong); other characters pass through.
    Positions are re-resolved by jamo_to_text, so the canonical kind only
    matters for storage, not for regrouping.
    """
    out = []
    for ch in text:
        if is_syllable(ch):
            out.extend(letters_of(decompose(ch)))
        elif ch in _JUNG_OF_GLYPH:
            out.append(JamoLetter(JUNGSEONG, _JUNG_OF_GLYPH[ch]))
        elif ch in _CHO_OF_GLYPH:
            out.append(JamoLetter(CHOSEONG, _CHO_OF_GLYPH[ch]))
        elif ch in _JONG_OF_GLYPH:
            out.append(JamoLetter(JONGSEONG, _JONG_OF_GLYPH[ch]))
        else:
            out.append(ch)
    return out


def recompose_text(text: str) -> str:
    """Regroup any display-form text (syllables and/or bare glyphs)."""
    return jamo_to_text(parse_jamo_text(text))
