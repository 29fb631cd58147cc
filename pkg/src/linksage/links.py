"""Address-bar style link prediction over scored history."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ScoredLink:
    url: str
    visit_count: int
    frecency: float


def normalize_url(url: str) -> str:
    """Lowercase and drop a leading http:// or https:// scheme."""
    lowered = url.lower()
    for scheme in ("https://", "http://"):
        if lowered.startswith(scheme):
            return lowered[len(scheme) :]
    return lowered


def predict_links(query: str, history: list[ScoredLink], k: int) -> list[ScoredLink]:
    """Top-k history links whose normalized URL contains the query.

    Matching is case-insensitive substring search after scheme stripping,
    so "loc" finds http://localhost/... entries. The empty query matches
    everything. Results are ordered by frecency descending, then visit
    count descending, then URL, so output is stable for any input order.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    needle = query.lower()
    matches = [link for link in history if needle in normalize_url(link.url)]
    matches.sort(key=lambda link: (-link.frecency, -link.visit_count, link.url))
    return matches[:k]
