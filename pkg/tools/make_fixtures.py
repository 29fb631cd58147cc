"""Generate the labeled-URL corpus fixture used by the classifier tests.

The corpus is synthetic but shaped like real site addresses: each category
has a pool of thematic words, hosts mix those with generic filler, some
hosts fuse words together (invisible to a unigram tokenizer), and a slice
of pure-noise rows keeps accuracy away from 100% so hyperparameter tuning
has something to optimize. A handful of two-word signatures ("world cup",
"high score", "primary care", ...) are built from words that are ambiguous
on their own, which is what gives bigram features their edge.

Regenerate with:  python3 tools/make_fixtures.py
The output is committed; the generator exists so the fixture is auditable
and reproducible, not because tests run it.
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

from linksage.classifier import LabeledUrl, serialize_labels

CATEGORY_WORDS = {
    "Arts": [
        "gallery", "museum", "painting", "sculpture", "theater", "opera",
        "poetry", "cinema", "artist", "canvas", "drawing", "sketch",
        "ballet", "portrait", "exhibit", "crafts", "studio", "mural",
        "house", "art", "street", "play",
    ],
    "Business": [
        "finance", "invest", "market", "startup", "consulting", "payroll",
        "invoice", "trade", "banking", "capital", "ventures", "accounting",
        "broker", "insurance", "commerce", "retail", "logistics", "corporate",
        "exchange", "stock", "customer", "care",
    ],
    "Computers": [
        "software", "linux", "coding", "server", "database", "cloud",
        "python", "hardware", "network", "compiler", "kernel", "devops",
        "router", "laptop", "algorithm", "robotics", "hosting", "debug",
        "source", "open", "machine", "learning",
    ],
    "Games": [
        "arcade", "puzzle", "quest", "rpg", "shooter", "multiplayer",
        "console", "sandbox", "strategy", "platformer", "dungeon", "pixel",
        "loot", "esports", "speedrun", "clan", "respawn", "gamer",
        "game", "world", "high", "score",
    ],
    "Health": [
        "clinic", "wellness", "nutrition", "medical", "pharmacy", "vitamin",
        "therapy", "dental", "diagnosis", "hospital", "surgeon", "vaccine",
        "allergy", "diet", "mental", "rehab", "nursing", "patient",
        "primary", "care", "heart", "rate",
    ],
    "Sports": [
        "soccer", "cricket", "tennis", "baseball", "hockey", "marathon",
        "athletics", "stadium", "league", "goalkeeper", "racing", "cycling",
        "olympics", "coach", "scoreboard", "championship", "football", "derby",
        "world", "cup", "live", "score",
    ],
}

# Two-word signatures whose parts are shared across categories; only the
# pair disambiguates. Each appears in its category's hosts or paths.
SIGNATURE_PAIRS = {
    "Arts": [("play", "house"), ("street", "art")],
    "Business": [("customer", "care"), ("stock", "exchange")],
    "Computers": [("open", "source"), ("machine", "learning")],
    "Games": [("game", "world"), ("high", "score")],
    "Health": [("primary", "care"), ("heart", "rate")],
    "Sports": [("world", "cup"), ("live", "score")],
}

GENERIC_WORDS = [
    "online", "site", "web", "portal", "hub", "zone", "pro", "best", "top",
    "my", "the", "go", "get", "daily", "info", "central", "plus", "prime",
    "global", "home", "page", "one", "now", "club", "spot", "base",
]

TLDS = ["com", "com", "com", "org", "net", "io", "co", "info"]
SEPS = ["-", "-", ".", ""]

NOISE_FRACTION = 0.08
PAIR_FRACTION = 0.35


def _pick_word(rng: random.Random, category: str) -> str:
    roll = rng.random()
    if roll < 0.25:
        return rng.choice(GENERIC_WORDS)
    if roll < 0.33:
        other = rng.choice([c for c in CATEGORY_WORDS if c != category])
        return rng.choice(CATEGORY_WORDS[other])
    return rng.choice(CATEGORY_WORDS[category])


def _host_words(rng: random.Random, category: str, noise: bool) -> list[str]:
    if noise:
        return [rng.choice(GENERIC_WORDS) for _ in range(rng.randint(1, 3))]
    if rng.random() < PAIR_FRACTION:
        words = list(rng.choice(SIGNATURE_PAIRS[category]))
        if rng.random() < 0.4:
            words.append(rng.choice(GENERIC_WORDS))
        return words
    return [_pick_word(rng, category) for _ in range(rng.randint(1, 3))]


def _path_segments(rng: random.Random, category: str, noise: bool) -> list[str]:
    segments = []
    for _ in range(rng.randint(0, 3)):
        if noise or rng.random() < 0.4:
            word = rng.choice(GENERIC_WORDS)
        else:
            word = rng.choice(CATEGORY_WORDS[category])
        if rng.random() < 0.15:
            word = f"{word}{rng.randint(1, 99)}"
        segments.append(word)
    return segments


def make_url(rng: random.Random, category: str, noise: bool) -> str:
    sep = rng.choice(SEPS)
    host = sep.join(_host_words(rng, category, noise))
    if rng.random() < 0.5:
        host = f"www.{host}"
    scheme = "https" if rng.random() < 0.75 else "http"
    url = f"{scheme}://{host}.{rng.choice(TLDS)}"
    path = _path_segments(rng, category, noise)
    if path:
        url = url + "/" + "/".join(path)
    if rng.random() < 0.05:
        url = f"{url}?id={rng.randint(1, 999)}"
    return url


def make_corpus(rows_per_category: int, seed: int) -> list[LabeledUrl]:
    rng = random.Random(seed)
    rows: list[LabeledUrl] = []
    seen: set[str] = set()
    for category in CATEGORY_WORDS:
        for _ in range(rows_per_category):
            noise = rng.random() < NOISE_FRACTION
            url = make_url(rng, category, noise)
            while url in seen:
                url = make_url(rng, category, noise)
            seen.add(url)
            rows.append(LabeledUrl(url, category))
    rng.shuffle(rows)
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rows-per-category", type=int, default=250)
    parser.add_argument("--seed", type=int, default=1337)
    parser.add_argument(
        "--out",
        default=str(Path(__file__).resolve().parent.parent / "tests/fixtures/labeled_urls.csv"),
    )
    args = parser.parse_args()
    corpus = make_corpus(args.rows_per_category, args.seed)
    Path(args.out).write_text(serialize_labels(corpus))
    print(f"wrote {len(corpus)} rows to {args.out}")


if __name__ == "__main__":
    main()
