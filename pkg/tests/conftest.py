"""Shared fixtures: deterministic corpora for vocabulary and round-trip tests."""

import random

import pytest

# Korean particles that attach to a preceding noun without a space, the
# spelling round-trip corpora use for code-switching boundaries.
PARTICLES = ["은", "는", "이", "가", "을", "를", "에", "에서", "도", "와"]

EN_WORDS = [
    "school", "cool", "tool", "pool", "chair", "chat", "lunch", "teacher",
    "data", "model", "record", "mass", "volume", "tumor", "rectal", "scan",
    "residual", "signal", "test", "unit", "byte", "token", "chart", "note",
    "i'm", "it's", "don't", "doctor", "nurse", "clinic",
]

SYMBOL_WORDS = ["3", "42", "7%", "#", "10", "=", "100"]


def _syllable_pool(size=320, seed=11172):
    rng = random.Random(seed)
    pool = []
    seen = set()
    while len(pool) < size:
        cp = 0xAC00 + rng.randrange(11172)
        if cp not in seen:
            seen.add(cp)
            pool.append(chr(cp))
    return pool


def _korean_words(pool, count=260, seed=2350):
    rng = random.Random(seed)
    words = set()
    while len(words) < count:
        n = rng.randint(1, 4)
        words.add("".join(rng.choice(pool) for _ in range(n)))
    return sorted(words)


def make_roundtrip_corpus(n_lines=1100, seed=20250810):
    """Mixed Korean/English lines, single-spaced, English attached to
    particles or grouped at the line end so every scheme round-trips."""
    pool = _syllable_pool()
    ko_words = _korean_words(pool)
    rng = random.Random(seed)
    lines = []
    for _ in range(n_lines):
        head, tail = [], []
        for _ in range(rng.randint(2, 7)):
            r = rng.random()
            if r < 0.55:
                head.append(rng.choice(ko_words))
            elif r < 0.70:
                head.append(rng.choice(EN_WORDS) + rng.choice(PARTICLES))
            elif r < 0.80:
                head.append(rng.choice(SYMBOL_WORDS))
            else:
                tail.append(rng.choice(EN_WORDS))
        if not head and not tail:
            head.append(rng.choice(ko_words))
        lines.append(" ".join(head + tail))
    return lines


def make_vocab_corpus(distinct=2400, seed_text=("학교에 간다", "나는 학교에 갔다")):
    """Corpus with >= `distinct` distinct syllables; common sentences first
    so their syllables rank on top, fillers each once for the tie-break."""
    lines = [s for s in seed_text for _ in range(50)]
    fillers = [chr(0xAC00 + (k * 97) % 11172) for k in range(distinct)]
    lines.extend(" ".join(fillers[i:i + 20]) for i in range(0, len(fillers), 20))
    return lines


@pytest.fixture(scope="session")
def roundtrip_corpus():
    return make_roundtrip_corpus()


@pytest.fixture(scope="session")
def vocab_corpus():
    return make_vocab_corpus()
