"""Whitespace tokenizer shared by both lexicon engines.

Rules:
  * split on whitespace;
  * strip leading/trailing punctuation from each raw token;
  * a token whose stripped form has fewer than 3 characters is kept as-is
    (preserves emoticons like ``:)`` or ``:-(``);
  * a ``#``-initial token keeps its leading ``#`` (hashtags stay intact),
    only trailing punctuation is removed.
"""

from __future__ import annotations

import string

MAX_TEXT_CHARS = 10_000

_PUNCT = string.punctuation


def strip_token(raw: str) -> str:
    if raw.startswith("#") and len(raw) > 1:
        return "#" + raw[1:].rstrip(_PUNCT)
    stripped = raw.strip(_PUNCT)
    if len(stripped) <= 2:
        return raw
    return stripped


def tokenize(text: str) -> list[str]:
    """Split `text` into scoring tokens, original case preserved."""
    return [strip_token(raw) for raw in text.split()]


def truncate_text(text: str) -> tuple[str, bool]:
    """Cap very long inputs at a whitespace boundary.

    Returns the (possibly shortened) text and a flag saying whether
    truncation happened.
    """
    if len(text) <= MAX_TEXT_CHARS:
        return text, False
    head = text[:MAX_TEXT_CHARS]
    cut = max(head.rfind(ch) for ch in (" ", "\t", "\n"))
    if cut > 0:
        head = head[:cut]
    return head, True


def mixed_case(tokens: list[str]) -> bool:
    """True when some, but not all, tokens are ALL-CAPS.

    The ALL-CAPS emphasis rule only fires when capitalization is
    distinctive, i.e. the text as a whole is not shouted.
    """
    has_upper = False
    has_other = False
    for tok in tokens:
        if tok.isupper():
            has_upper = True
        else:
            has_other = True
        if has_upper and has_other:
            return True
    return False
