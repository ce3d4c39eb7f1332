"""Matching computed sequences against OEIS.

Local-first: `match_local` scans a snapshot in the standard "stripped"
layout (optionally gzip-compressed), so everything runs offline.  Remote
search is a single blocking request to the public search endpoint and is
only attempted when explicitly asked for; the base URL can be overridden
through the OEIS_BASE_URL environment variable.
"""

from __future__ import annotations

import gzip
import os
import re
from dataclasses import dataclass

import requests

from .errors import DbUnreadable, MalformedResponse, OeisOffline, OeisTimeout, TooFewTerms

DEFAULT_MIN_OVERLAP = 8
_IDENT_RE = re.compile(r"^A\d{6}$")


@dataclass(frozen=True)
class OeisMatch:
    ident: str
    offset: int
    matched_length: int

    def __post_init__(self):
        if not _IDENT_RE.match(self.ident):
            raise ValueError(f"bad OEIS identifier {self.ident!r}")


def _match_in_entry(query: list[int], entry: list[int], min_overlap: int) -> tuple[int, int] | None:
    """First offset where the query runs consecutively in the entry.

    A full-query run always matches; a run truncated by the end of the
    entry still matches if it covers at least min_overlap terms.
    """
    nq, ne = len(query), len(entry)
    for off in range(ne):
        length = 0
        while length < nq and off + length < ne and entry[off + length] == query[length]:
            length += 1
        if length == nq or (off + length == ne and length >= min_overlap):
            return off, length
    return None


def parse_stripped(db_path: str):
    """Yield (identifier, terms) pairs from a stripped-format snapshot."""
    try:
        with open(db_path, "rb") as fh:
            blob = fh.read()
    except OSError as exc:
        raise DbUnreadable(str(exc)) from exc
    if blob[:2] == b"\x1f\x8b":
        blob = gzip.decompress(blob)
    for raw in blob.decode("utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        ident, _, rest = line.partition(" ")
        if not _IDENT_RE.match(ident):
            continue
        terms = [int(t) for t in rest.strip().strip(",").split(",") if t]
        yield ident, terms


def match_local(
    terms, db_path: str, min_overlap: int = DEFAULT_MIN_OVERLAP
) -> list[OeisMatch]:
    """All snapshot entries containing the query as a consecutive run."""
    query = [int(t) for t in terms]
    if len(query) < min_overlap:
        raise TooFewTerms(f"need at least {min_overlap} terms, got {len(query)}")
    matches = []
    for ident, entry in parse_stripped(db_path):
        hit = _match_in_entry(query, entry, min_overlap)
        if hit is not None:
            matches.append(OeisMatch(ident, hit[0], hit[1]))
    matches.sort(key=lambda m: m.ident)
    return matches


def search_remote(terms, timeout: float = 10.0) -> list[OeisMatch]:
    """One blocking query against the public OEIS search API."""
    query = [int(t) for t in terms]
    if not query:
        raise TooFewTerms("cannot search for an empty term list")
    base = os.environ.get("OEIS_BASE_URL", "https://oeis.org").rstrip("/")
    url = f"{base}/search"
    try:
        resp = requests.get(
            url,
            params={"q": ",".join(str(t) for t in query), "fmt": "json"},
            timeout=timeout,
        )
    except requests.exceptions.Timeout as exc:
        raise OeisTimeout(str(exc)) from exc
    except requests.exceptions.RequestException as exc:
        raise OeisOffline(str(exc)) from exc
    try:
        payload = resp.json()
    except ValueError as exc:
        raise MalformedResponse("response is not JSON") from exc
    results = payload.get("results") if isinstance(payload, dict) else payload
    if results is None:
        return []
    matches = []
    try:
        for item in results:
            number = int(item["number"])
            ident = f"A{number:06d}"
            entry = [int(t) for t in str(item.get("data", "")).split(",") if t]
            hit = _match_in_entry(query, entry, min_overlap=1)
            offset, length = hit if hit is not None else (0, 0)
            matches.append(OeisMatch(ident, offset, length))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedResponse(str(exc)) from exc
    return matches
