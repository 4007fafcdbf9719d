# -*- coding: utf-8 -*-
"""
Записи базы HURDAT2: шторм (id, имя) и его фиксации каждые 6 часов.
Отсутствующие значения (ветер -99, давление -999) хранятся как None.
"""

from dataclasses import dataclass
from datetime import datetime


@dataclass(frozen=True)
class Fix:
    time: datetime
    record_id: str
    status: str
    lat: float
    lon: float
    wind: int | None
    pressure: int | None = None


@dataclass(frozen=True)
class StormRecord:
    id: str
    name: str
    fixes: tuple[Fix, ...]

    @property
    def year(self) -> int:
        """Год первой фиксации (для штормов на стыке лет id несёт тот же год)."""
        return self.fixes[0].time.year if self.fixes else int(self.id[4:8])

    @property
    def peak_wind(self) -> int | None:
        winds = [f.wind for f in self.fixes if f.wind is not None]
        return max(winds) if winds else None

    def meta(self) -> dict:
        return {"id": self.id, "name": self.name, "year": self.year}
