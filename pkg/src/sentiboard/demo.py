"""Demo corpus generation for offline mode."""

from __future__ import annotations

import json
import random
from datetime import datetime, timedelta, timezone
from pathlib import Path

from .evalbench import synth
from .models import format_timestamp

TOPICS = ["#energy", "#coffee", "#football", "#commute", "#phones"]
TOPIC_WORDS = {
    "#energy": ["solar", "wind", "power", "grid", "electricity"],
    "#coffee": ["espresso", "latte", "barista", "beans", "brew"],
    "#football": ["match", "goal", "keeper", "league", "derby"],
    "#commute": ["train", "bus", "traffic", "metro", "bike"],
    "#phones": ["battery", "screen", "camera", "android", "update"],
}
COUNTRIES = ["NO", "SE", "DK", "DE", "GB", "US", "FR", None, None, None]
LANGUAGES = ["en"] * 9 + ["no"]


def write_demo_corpus(path: str | Path, posts: int = 300, seed: int = 11) -> Path:
    """Seeded JSONL corpus of topical posts for `serve --offline-corpus`."""
    path = Path(path)
    rng = random.Random(seed)
    pools = synth._Pools()
    start = datetime(2022, 3, 1, tzinfo=timezone.utc)
    lines = []
    for i in range(posts):
        topic = rng.choice(TOPICS)
        text = synth.generate_post_text(pools, positive=rng.random() < 0.55, rng=rng)
        text = f"{rng.choice(TOPIC_WORDS[topic])} {text} {topic}"
        record = {
            "id": f"demo-{i:05d}",
            "text": text,
            "author": f"user{rng.randrange(40):02d}",
            "created_at": format_timestamp(start + timedelta(minutes=rng.randrange(3 * 24 * 60))),
            "lang": rng.choice(LANGUAGES),
        }
        country = rng.choice(COUNTRIES)
        if country:
            record["country"] = country
        lines.append(json.dumps(record, ensure_ascii=False))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
