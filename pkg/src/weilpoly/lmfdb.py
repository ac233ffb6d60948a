"""Reconciliation against the public LMFDB isogeny-class tables.

Network access is opt-in; every response is cached on disk as a JSON
document {url, timestamp, body}, keyed by the query, and a cold cache
without network permission yields an explicit Skipped status, never a
failure.  For fetched classes the Weil predicate (and the Tate criterion on
irreducible classes) is asserted and mismatches reported.
"""

from __future__ import annotations

import json
import time
from pathlib import Path

from .errors import UncertifiedProfileError
from .factorint import factor_over_integers
from .padic import tate_condition
from .polynomial import IntPoly
from .weil import WeilParams, is_weil

API_URL = (
    "https://www.lmfdb.org/api/av_fq_isog/?g=i{g}&q=i{q}"
    "&_format=json&_fields=label,poly,is_simple&_limit=1000"
)


def cache_path(cache_dir, g: int, q: int) -> Path:
    return Path(cache_dir) / f"av_fq_isog_g{g}_q{q}.json"


def _fetch(url: str) -> dict:
    from urllib.request import urlopen

    with urlopen(url, timeout=30) as resp:
        return json.loads(resp.read().decode("utf-8"))


def _load_classes(cache_dir, g: int, q: int, allow_network: bool):
    path = cache_path(cache_dir, g, q)
    if path.exists():
        doc = json.loads(path.read_text())
        return doc["body"]
    if not allow_network:
        return None
    url = API_URL.format(g=g, q=q)
    body = _fetch(url)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps({"url": url, "timestamp": time.time(), "body": body}, indent=1)
    )
    return body


def _poly_from_record(rec, g: int, q: int) -> IntPoly | None:
    coeffs = rec.get("poly")
    if not isinstance(coeffs, list) or len(coeffs) != 2 * g + 1:
        return None
    coeffs = [int(c) for c in coeffs]
    # orientation: the constant term of a Weil polynomial is q^g
    if coeffs[0] == q ** g and coeffs[-1] == 1:
        return IntPoly(coeffs)
    if coeffs[-1] == q ** g and coeffs[0] == 1:
        return IntPoly(list(reversed(coeffs)))
    return None


def lmfdb_reconcile(
    params: WeilParams, g: int, cache_dir, allow_network: bool = False
) -> dict:
    """Check fetched isogeny classes for (g, q) against the local predicates."""
    report = {
        "g": g,
        "q": params.q,
        "status": "ok",
        "classes": 0,
        "checked_tate": 0,
        "mismatches": [],
    }
    try:
        body = _load_classes(cache_dir, g, params.q, allow_network)
    except Exception as exc:  # network failure is a skip, never an error
        report["status"] = "skipped"
        report["reason"] = f"fetch failed: {exc}"
        return report
    if body is None:
        report["status"] = "skipped"
        report["reason"] = "cache cold and network not permitted"
        return report
    records = body.get("data", body if isinstance(body, list) else [])
    for rec in records:
        poly = _poly_from_record(rec, g, params.q)
        if poly is None:
            report["mismatches"].append(
                {"label": rec.get("label"), "problem": "unparseable polynomial"}
            )
            continue
        report["classes"] += 1
        verdict = is_weil(poly, params)
        if not verdict.is_weil:
            report["mismatches"].append(
                {"label": rec.get("label"), "problem": "fails the Weil predicate"}
            )
            continue
        if rec.get("is_simple"):
            _, factors = factor_over_integers(poly)
            if len(factors) == 1 and factors[0][1] == 1:
                try:
                    if not tate_condition(poly, params):
                        report["mismatches"].append(
                            {
                                "label": rec.get("label"),
                                "problem": "fails the Tate condition",
                            }
                        )
                    report["checked_tate"] += 1
                except UncertifiedProfileError:
                    pass
    if report["mismatches"]:
        report["status"] = "mismatch"
    return report
