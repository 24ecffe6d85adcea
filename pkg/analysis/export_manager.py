#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
analysis/export_manager.py
Export-Manager für Gitterauswertungen
Unterstützt: CSV, JSON, SVG-Heatmap von |q|
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, Union

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

from analysis.grid_sampler import GridSample, GridSpec
from core.exceptions import IoFailure, SpecFormatError
from core.logging_config import get_logger
from core.soliton_engine import FieldSample

logger = get_logger(__name__)

CSV_HEADER = ["x", "t", "re_q", "im_q", "abs_q", "singular"]
FORMATS = ("csv", "json")
HEATMAP_COLORMAP = "viridis"


def _real(value: float) -> str:
    # 17 signifikante Stellen: verlustfreie Rundreise für float64
    return format(float(value), ".17g")


class ExportManager:
    """Manager für Datenexporte in verschiedene Formate."""

    @staticmethod
    def export_csv(sample: GridSample) -> bytes:
        """
        CSV mit Kopfzeile x,t,re_q,im_q,abs_q,singular; Zeilen t außen, x innen.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for v in sample.values:
            writer.writerow([
                _real(v.x), _real(v.t), _real(v.q.real), _real(v.q.imag), _real(abs(v.q)),
                1 if v.singular_flag else 0,
            ])
        return buffer.getvalue().encode("utf-8")

    @staticmethod
    def export_json(sample: GridSample) -> bytes:
        """JSON mit Gitter, Prüfsumme und allen FieldSample-Feldern in derselben Reihenfolge."""
        export_data = {
            "grid": sample.grid.to_dict(),
            "config_digest": sample.config_digest,
            "values": [v.to_dict() for v in sample.values],
        }
        return json.dumps(export_data, indent=2, ensure_ascii=False).encode("utf-8")

    @staticmethod
    def export_grid(sample: GridSample, fmt: str = "csv") -> bytes:
        """
        Args:
            sample: ausgewertetes Gitter
            fmt: "csv" oder "json"

        Returns:
            Bytes der Ausgabe
        """
        if fmt == "csv":
            return ExportManager.export_csv(sample)
        if fmt == "json":
            return ExportManager.export_json(sample)
        raise ValueError(f"Unbekanntes Format '{fmt}', erlaubt: {FORMATS}")

    @staticmethod
    def write_grid(sample: GridSample, file_path: Union[str, Path], fmt: str = "csv") -> Path:
        """
        Schreibt den Export nach file_path.

        Raises:
            IoFailure: wenn die Datei nicht geschrieben werden kann
        """
        data = ExportManager.export_grid(sample, fmt)
        path = Path(file_path)
        try:
            path.write_bytes(data)
        except OSError as e:
            logger.error(f"Export nach {path} fehlgeschlagen: {e}")
            raise IoFailure(f"Export nach {path} fehlgeschlagen: {e}", {"path": str(path)}) from e
        logger.info(f"{len(sample.values)} Punkte als {fmt.upper()} nach {path} geschrieben")
        return path

    @staticmethod
    def grid_from_json(data: Union[bytes, str, Dict[str, Any]]) -> GridSample:
        """
        Liest einen JSON-Export wieder ein.

        Raises:
            SpecFormatError: bei fehlerhaftem Inhalt
        """
        try:
            document = json.loads(data) if isinstance(data, (bytes, str)) else data
            values = [
                FieldSample(
                    x=float(v["x"]),
                    t=float(v["t"]),
                    q=complex(float(v["q"][0]), float(v["q"][1])),
                    abs_det_M=float(v["abs_det_M"]),
                    singular_flag=bool(v["singular_flag"]),
                    log_abs_det_M=float(v.get("log_abs_det_M", 0.0)),
                    cond_estimate=float(v.get("cond_estimate", 1.0)),
                )
                for v in document["values"]
            ]
            grid = GridSpec.from_dict(document["grid"])
            digest = str(document.get("config_digest", ""))
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise SpecFormatError(f"Ungültiger Gitter-Export: {e}") from e
        if len(values) != grid.size:
            raise SpecFormatError(
                f"Gitter-Export hat {len(values)} Werte, erwartet {grid.size}",
                {"values": len(values), "expected": grid.size},
            )
        return GridSample(grid=grid, values=values, config_digest=digest)

    @staticmethod
    def heatmap_svg(sample: GridSample, title: str = "|q(x,t)|") -> bytes:
        """SVG-Heatmap von |q| (feste Farbskala viridis, deterministische Ausgabe)."""
        grid = sample.grid
        with plt.rc_context({"svg.hashsalt": "ngss-heatmap", "svg.fonttype": "none"}):
            fig, ax = plt.subplots(figsize=(8, 5))
            image = ax.imshow(
                sample.abs_table(),
                origin="lower",
                extent=[grid.x_min, grid.x_max, grid.t_min, grid.t_max],
                aspect="auto",
                cmap=HEATMAP_COLORMAP,
            )
            ax.set_xlabel("x")
            ax.set_ylabel("t")
            ax.set_title(title)
            fig.colorbar(image, ax=ax, label="|q|")
            plt.tight_layout()

            buf = io.BytesIO()
            fig.savefig(buf, format="svg", metadata={"Date": None})
            plt.close(fig)
        return buf.getvalue()

    @staticmethod
    def export_heatmap_svg(sample: GridSample, file_path: Union[str, Path], title: str = "|q(x,t)|") -> Path:
        """
        Raises:
            IoFailure: wenn die Datei nicht geschrieben werden kann
        """
        path = Path(file_path)
        try:
            path.write_bytes(ExportManager.heatmap_svg(sample, title))
        except OSError as e:
            logger.error(f"SVG-Export nach {path} fehlgeschlagen: {e}")
            raise IoFailure(f"SVG-Export nach {path} fehlgeschlagen: {e}", {"path": str(path)}) from e
        return path
