# -*- coding: utf-8 -*-
"""
Разбор и каноническая запись текстового формата HURDAT2.
- Заголовок: "AL092010,            KARL,     26,"
- Данные:    "20100914, 1200,  , TS, 19.8N,  85.7W,  35, 1000, ..." (поля радиусов ветра игнорируются)
Ошибки грамматики: InputValidationError с номером строки.
"""

import re
import sys
from datetime import datetime
from pathlib import Path

from src.common.errors import InputValidationError
from src.common.log import get_logger
from src.hurdat.storm_record import Fix, StormRecord

log = get_logger("hurdat.parse")

# 🔧 Параметры демонстрации
SAMPLE = """AL092010,            KARL,      3,
20100914, 1200,  , TS, 19.8N,  85.7W,  35, 1000,
20100914, 1800,  , TS, 20.0N,  86.6W,  40,  999,
20100915, 0000, L, TS, 20.3N,  87.4W, -99, -999,
"""

HEADER_ID = re.compile(r"^[A-Z]{2}\d{6}$")
MISSING_WIND = -99
MISSING_PRESSURE = -999


def _fields(line: str) -> list[str]:
    parts = [p.strip() for p in line.split(",")]
    while parts and parts[-1] == "":
        parts.pop()
    return parts


def _coordinate(raw: str, positive: str, negative: str, limit: float, lineno: int) -> float:
    if len(raw) < 2 or raw[-1] not in (positive, negative):
        raise InputValidationError(f"malformed coordinate {raw!r}", line=lineno)
    try:
        value = float(raw[:-1])
    except ValueError:
        raise InputValidationError(f"malformed coordinate {raw!r}", line=lineno)
    if value < 0 or value > limit:
        raise InputValidationError(f"coordinate {raw!r} out of range", line=lineno)
    return -value if raw[-1] == negative else value


def _integer(raw: str, what: str, lineno: int) -> int:
    try:
        return int(raw)
    except ValueError:
        raise InputValidationError(f"malformed {what} {raw!r}", line=lineno)


def _is_header(line: str) -> bool:
    head = _fields(line)
    return bool(head) and HEADER_ID.match(head[0]) is not None


def parse_fix(line: str, lineno: int) -> Fix:
    f = _fields(line)
    if len(f) < 8:
        raise InputValidationError(f"data line needs at least 8 fields, got {len(f)}", line=lineno)
    try:
        time = datetime.strptime(f[0] + f[1].zfill(4), "%Y%m%d%H%M")
    except ValueError:
        raise InputValidationError(f"malformed timestamp {f[0]!r} {f[1]!r}", line=lineno)
    lat = _coordinate(f[4], "N", "S", 90.0, lineno)
    lon = _coordinate(f[5], "E", "W", 180.0, lineno)
    if lon == -180.0:
        lon = 180.0
    wind = _integer(f[6], "maxwind", lineno)
    pressure = _integer(f[7], "pressure", lineno)
    if wind < 0 and wind != MISSING_WIND:
        raise InputValidationError(f"negative maxwind {wind}", line=lineno)
    return Fix(time=time, record_id=f[2], status=f[3], lat=lat, lon=lon,
               wind=None if wind == MISSING_WIND else wind,
               pressure=None if pressure == MISSING_PRESSURE else pressure)


def parse_hurdat2(text: str) -> list[StormRecord]:
    lines = [(k, line) for k, line in enumerate(text.splitlines(), start=1) if line.strip()]
    records: list[StormRecord] = []
    pos = 0
    while pos < len(lines):
        lineno, line = lines[pos]
        head = _fields(line)
        if not _is_header(line):
            raise InputValidationError("expected a storm header line", line=lineno)
        if len(head) < 3:
            raise InputValidationError("header needs ID, NAME and COUNT", line=lineno)
        count = _integer(head[2], "fix count", lineno)

        fixes: list[Fix] = []
        for k in range(count):
            if pos + 1 + k >= len(lines) or _is_header(lines[pos + 1 + k][1]):
                raise InputValidationError(f"count mismatch: header announces {count} fixes, found {k}",
                                           line=lineno)
            data_no, data_line = lines[pos + 1 + k]
            fix = parse_fix(data_line, data_no)
            if fixes and fix.time < fixes[-1].time:
                raise InputValidationError("timestamps are not monotone", line=data_no)
            fixes.append(fix)
        records.append(StormRecord(id=head[0], name=head[1], fixes=tuple(fixes)))
        pos += 1 + count

    log.debug("прочитано штормов: %d", len(records))
    return records


def read_hurdat2(path: str | Path) -> list[StormRecord]:
    return parse_hurdat2(Path(path).read_text(encoding="utf-8"))


def _format_coordinate(value: float, positive: str, negative: str, width: int) -> str:
    hemi = negative if value < 0 else positive
    return f"{abs(value):{width}.1f}{hemi}"


def format_fix(fix: Fix) -> str:
    wind = MISSING_WIND if fix.wind is None else fix.wind
    pressure = MISSING_PRESSURE if fix.pressure is None else fix.pressure
    return (f"{fix.time:%Y%m%d}, {fix.time:%H%M}, {fix.record_id:>1}, {fix.status:>2}, "
            f"{_format_coordinate(fix.lat, 'N', 'S', 4)}, {_format_coordinate(fix.lon, 'E', 'W', 5)}, "
            f"{wind:>3}, {pressure:>4},")


def serialize_hurdat2(records: list[StormRecord]) -> str:
    out = []
    for rec in records:
        out.append(f"{rec.id},{rec.name:>19},{len(rec.fixes):>7},")
        out.extend(format_fix(fix) for fix in rec.fixes)
    return "\n".join(out) + ("\n" if out else "")


if __name__ == "__main__":
    try:
        for rec in parse_hurdat2(SAMPLE):
            print(f"SUCCESS {rec.id} {rec.name}: {len(rec.fixes)} fixes, peak {rec.peak_wind} kt")
    except Exception as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        sys.exit(1)
