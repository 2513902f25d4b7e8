"""Kappa spec file parsing and serialization.

Format (hash comments and blank lines allowed anywhere):

    name = thue-morse        # optional
    L = 2
    k = 2
    preperiod = 0
    period = 1
    kappa =
    1

Either ``preperiod``/``period`` (eventually periodic) or ``window``
(finite window, hard error past the bound) must be present.  After the
``kappa =`` marker come exactly k-1 rows of whitespace-separated
integers, one row per digit value s = 1..k-1, each row with
preperiod + period (resp. window) columns.
"""

from __future__ import annotations

from pathlib import Path

from .errors import SpecParseError
from .kappa import KappaSpec

__all__ = ["parse_spec", "parse_spec_text", "spec_to_text", "load_spec"]

_INT_KEYS = {"L", "k", "preperiod", "period", "window"}


def parse_spec_text(text: str) -> KappaSpec:
    fields: dict[str, object] = {}
    rows: list[tuple[int, ...]] = []
    in_matrix = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_matrix:
            try:
                rows.append(tuple(int(tok) for tok in line.split()))
            except ValueError:
                raise SpecParseError(f"bad kappa row {line!r}", line=lineno)
            continue
        if "=" not in line:
            raise SpecParseError(f"expected 'key = value', got {line!r}", line=lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "kappa":
            if value:
                raise SpecParseError("kappa marker takes no inline value", line=lineno)
            in_matrix = True
            continue
        if key == "name":
            fields["name"] = value
            continue
        if key not in _INT_KEYS:
            raise SpecParseError(f"unknown key {key!r}", line=lineno)
        try:
            fields[key] = int(value)
        except ValueError:
            raise SpecParseError(f"{key} needs an integer, got {value!r}", line=lineno)

    for required in ("L", "k"):
        if required not in fields:
            raise SpecParseError(f"missing required field {required!r}")
    if not in_matrix:
        raise SpecParseError("missing kappa matrix")
    if "window" in fields and ("period" in fields or "preperiod" in fields):
        raise SpecParseError("give either window or preperiod/period, not both")
    if "window" not in fields and "period" not in fields:
        raise SpecParseError("need either period (with preperiod) or window")

    try:
        return KappaSpec(
            L=fields["L"],  # type: ignore[arg-type]
            k=fields["k"],  # type: ignore[arg-type]
            preperiod=fields.get("preperiod", 0),  # type: ignore[arg-type]
            period=fields.get("period"),  # type: ignore[arg-type]
            window=fields.get("window"),  # type: ignore[arg-type]
            table=tuple(rows),
            name=fields.get("name"),  # type: ignore[arg-type]
        )
    except ValueError as exc:
        raise SpecParseError(str(exc)) from exc


def parse_spec(path) -> KappaSpec:
    return parse_spec_text(Path(path).read_text())


load_spec = parse_spec


def spec_to_text(spec: KappaSpec) -> str:
    lines = []
    if spec.name:
        lines.append(f"name = {spec.name}")
    lines.append(f"L = {spec.L}")
    lines.append(f"k = {spec.k}")
    if spec.is_finite_window:
        lines.append(f"window = {spec.window}")
    else:
        lines.append(f"preperiod = {spec.preperiod}")
        lines.append(f"period = {spec.period}")
    lines.append("kappa =")
    for row in spec.table:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
