"""Pattern files: parsing and digests.

A pattern file is UTF-8 JSON with integer fields ``K`` and ``M`` and a
``K x M`` row-major matrix ``alpha`` whose entries are strings in fraction
("5/8") or decimal ("0.625") form; decimals convert exactly. JSON integer
literals are also accepted (0 and 1 are common); JSON float literals are
intercepted before any binary rounding and converted from their source text.
"""

from __future__ import annotations

import hashlib
import json

from .csit import CsitPattern, csit_pattern
from .errors import DofsepError
from .rationals import rat, rat_str


class PatternFormatError(DofsepError):
    """Malformed pattern file; carries best-effort line/column info."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

    def location(self) -> str:
        if self.line is None:
            return ""
        return f" (line {self.line}, column {self.column})"


def parse_pattern_text(text: str) -> CsitPattern:
    try:
        payload = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise PatternFormatError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(payload, dict):
        raise PatternFormatError("pattern file must hold a JSON object")
    missing = [key for key in ("K", "M", "alpha") if key not in payload]
    if missing:
        raise PatternFormatError(f"missing fields: {', '.join(missing)}")
    k, m, alpha = payload["K"], payload["M"], payload["alpha"]
    if not isinstance(k, int) or not isinstance(m, int):
        raise PatternFormatError("K and M must be integers")
    if not isinstance(alpha, list) or len(alpha) != k:
        raise PatternFormatError(f"alpha must be a list of K={k} rows")
    rows = []
    for r, row in enumerate(alpha, start=1):
        if not isinstance(row, list) or len(row) != m:
            raise PatternFormatError(f"alpha row {r} must hold M={m} entries")
        parsed_row = []
        for c, entry in enumerate(row, start=1):
            if not isinstance(entry, (str, int)) or isinstance(entry, bool):
                raise PatternFormatError(
                    f"alpha[{r}][{c}] must be a fraction/decimal string or integer"
                )
            try:
                parsed_row.append(rat(entry))
            except (ValueError, TypeError) as exc:
                raise PatternFormatError(f"alpha[{r}][{c}]: {exc}") from None
        rows.append(parsed_row)
    try:
        return csit_pattern(rows)
    except DofsepError as exc:
        raise PatternFormatError(str(exc)) from None


def load_pattern(path) -> CsitPattern:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise PatternFormatError(f"cannot read pattern file: {exc}") from None
    return parse_pattern_text(text)


def pattern_digest(pattern: CsitPattern) -> str:
    """Stable content digest of a pattern (canonical rational rendering)."""
    canonical = f"K={pattern.users};M={pattern.subchannels};" + ";".join(
        ",".join(rat_str(x) for x in row) for row in pattern.entries
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
