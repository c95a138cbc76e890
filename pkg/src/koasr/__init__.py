"""Lexicon-free Korean / Korean-English modeling units and decoding math.

Subpackages cover Hangul syllable/Jamo arithmetic, the unit schemes
(syllable, jamo, byte and their sub-word variants), sub-word training, the
CTC objective with prefix scoring and joint CTC/attention beam search, and
CER/WER/SER evaluation. See the ``koasr`` command line for the file-level
pipelines.
"""

__version__ = "0.1.0"
