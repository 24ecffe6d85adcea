# -*- coding: utf-8 -*-
"""
analysis/grid_sampler.py
Auswertung von q auf rechteckigen (x, t)-Gittern.

Zeilen (feste t) werden parallel berechnet; die Reihenfolge der Ergebnisse
ist immer t außen, x innen.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from core.config_manager import DEFAULT_SETTINGS, worker_count
from core.exceptions import GridSpecError
from core.logging_config import get_logger
from core.soliton_engine import FieldSample, evaluate
from core.spectral_config import SpectralConfiguration, validate_config
from core.validators import GridSpecValidator

logger = get_logger(__name__)


@dataclass(frozen=True)
class GridSpec:
    """Gleichmäßiges Gitter mit eingeschlossenen Endpunkten."""
    x_min: float
    x_max: float
    nx: int
    t_min: float
    t_max: float
    nt: int

    def __post_init__(self):
        GridSpecValidator.validate(self.x_min, self.x_max, self.nx, self.t_min, self.t_max, self.nt)

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """
        Liest "X0,X1,NX,T0,T1,NT".

        Raises:
            GridSpecError: bei falscher Feldanzahl oder nicht lesbaren Zahlen
        """
        parts = [p.strip() for p in str(text).split(",")]
        if len(parts) != 6:
            raise GridSpecError(f"Gitter '{text}' muss 6 Werte haben: X0,X1,NX,T0,T1,NT", {"grid": text})
        try:
            x_min, x_max, t_min, t_max = (float(parts[i]) for i in (0, 1, 3, 4))
            nx, nt = int(parts[2]), int(parts[5])
        except ValueError as e:
            raise GridSpecError(f"Gitter '{text}' nicht lesbar: {e}", {"grid": text}) from e
        return cls(x_min, x_max, nx, t_min, t_max, nt)

    @property
    def xs(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.nx)

    @property
    def ts(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.nt)

    @property
    def size(self) -> int:
        return self.nx * self.nt

    def to_dict(self) -> Dict[str, Any]:
        return {
            "x_min": self.x_min, "x_max": self.x_max, "nx": self.nx,
            "t_min": self.t_min, "t_max": self.t_max, "nt": self.nt,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GridSpec":
        try:
            return cls(float(data["x_min"]), float(data["x_max"]), int(data["nx"]),
                       float(data["t_min"]), float(data["t_max"]), int(data["nt"]))
        except (KeyError, TypeError, ValueError) as e:
            raise GridSpecError(f"Ungültige Gitterbeschreibung: {e}") from e


@dataclass
class GridSample:
    """Werte in Zeilenreihenfolge: t außen, x innen."""
    grid: GridSpec
    values: List[FieldSample]
    config_digest: str = ""

    def q_table(self) -> np.ndarray:
        """q als (nt, nx)-Array."""
        return np.array([v.q for v in self.values], dtype=complex).reshape(self.grid.nt, self.grid.nx)

    def abs_table(self) -> np.ndarray:
        return np.abs(self.q_table())

    @property
    def singular_count(self) -> int:
        return sum(1 for v in self.values if v.singular_flag)


def sample_grid(cfg: SpectralConfiguration, grid: GridSpec, config_digest: str = "",
                singular_threshold: float = DEFAULT_SETTINGS["singular_threshold"],
                workers: Optional[int] = None) -> GridSample:
    """
    Wertet q an allen Gitterpunkten aus (einfacher oder Hochordnungs-Pfad nach maximaler Ordnung).

    Singuläre Punkte werden markiert, nicht ausgelassen.
    """
    cfg = cfg if cfg.validated else validate_config(cfg)
    xs = [float(x) for x in grid.xs]
    workers = workers or worker_count()

    def row(t: float) -> List[FieldSample]:
        return [evaluate(cfg, x, t, singular_threshold) for x in xs]

    logger.info(f"Gitter {grid.nx}x{grid.nt} mit {workers} Worker(n), N0={cfg.total_order}")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(row, [float(t) for t in grid.ts]))

    sample = GridSample(grid=grid, values=[v for r in rows for v in r], config_digest=config_digest)
    if sample.singular_count:
        logger.warning(f"{sample.singular_count} von {grid.size} Punkten singulär markiert")
    return sample
