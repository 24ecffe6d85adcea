# -*- coding: utf-8 -*-
"""
main.py
Kommandozeile der ngSS-Soliton-Bibliothek.

    python main.py sample --spec F --grid X0,X1,NX,T0,T1,NT --out F2 [--format csv|json] [--svg F3]
    python main.py verify --spec F [--points N] [--h H] [--seed S] [--suites a,b]
    python main.py asymptotics --spec F [--fit] [--t-fit T]
    python main.py preset --name figK [--emit-spec]

Statt --spec kann überall --preset figK verwendet werden.
Maschinenlesbare Ausgaben (JSON) gehen nach stdout, Logmeldungen nach stderr.

Exit-Codes: 0 Erfolg, 1 Verifikation fehlgeschlagen, 2 Eingabe-/Bedienfehler, 3 E/A-Fehler.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple

# Zentrales Logging-System
from core.logging_config import SolitonLogger, get_logger
logger = get_logger(__name__)

# --- CORE ---
from core.config_manager import ConfigManager, worker_count
from core.exceptions import IoFailure, NgssError, UsageError, VerificationError
from core.spectral_config import SpectralConfiguration, dump_spec, load_spec_file

# --- ANALYSIS ---
from analysis.asymptotics import (
    FUTURE,
    PAST,
    CaseTag,
    asymptotic_profile,
    classify_case,
    collision_amplitudes,
    fitted_profiles,
    position_shift,
)
from analysis.export_manager import FORMATS, ExportManager
from analysis.figure_presets import figure_preset, preset_names
from analysis.grid_sampler import GridSpec, sample_grid
from analysis.verification import SUITES, run_verification_suite

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class CliArgumentParser(argparse.ArgumentParser):
    """argparse-Parser, der Bedienfehler als UsageError meldet statt zu beenden."""

    def error(self, message):
        raise UsageError(message, {"usage": self.format_usage().strip()})


def _json_default(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, CaseTag):
        return value.value
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"Nicht serialisierbar: {type(value).__name__}")


def _emit(document: Any) -> None:
    print(json.dumps(document, indent=2, ensure_ascii=False, default=_json_default))


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(prog="ngss", description="Solitonlösungen der nichtlokalen verallgemeinerten Sasa-Satsuma-Gleichung")
    parser.add_argument("--settings", help="JSON-Einstellungsdatei (Toleranzen, Seed, Threads)")
    parser.add_argument("--verbose", action="store_true", help="DEBUG-Logging aktivieren")
    commands = parser.add_subparsers(dest="command", parser_class=CliArgumentParser)
    commands.required = True

    def add_source(sub):
        group = sub.add_mutually_exclusive_group()
        group.add_argument("--spec", help="Spec-Datei (JSON)")
        group.add_argument("--preset", help=f"Preset ({preset_names()[0]} ... {preset_names()[-1]})")

    sample = commands.add_parser("sample", help="q auf einem Gitter auswerten und exportieren")
    add_source(sample)
    sample.add_argument("--grid", help="X0,X1,NX,T0,T1,NT (bei --preset optional)")
    sample.add_argument("--out", required=True, help="Zieldatei")
    sample.add_argument("--format", choices=FORMATS, default="csv")
    sample.add_argument("--svg", help="zusätzliche SVG-Heatmap von |q|")

    verify = commands.add_parser("verify", help="Prüfungen ausführen")
    add_source(verify)
    verify.add_argument("--points", type=int)
    verify.add_argument("--h", type=float)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--suites", help=f"Kommagetrennt aus {', '.join(SUITES)}")

    asymptotics = commands.add_parser("asymptotics", help="Asymptotik des Ein-Solitons")
    add_source(asymptotics)
    asymptotics.add_argument("--fit", action="store_true", help="zusätzlich numerische Anpassung bei t = +-t_fit")
    asymptotics.add_argument("--t-fit", type=float, dest="t_fit")

    preset = commands.add_parser("preset", help="Preset anzeigen")
    preset.add_argument("--name", required=True)
    preset.add_argument("--emit-spec", action="store_true", help="nur das Spec-Dokument ausgeben")
    return parser


def _load_source(args) -> Tuple[SpectralConfiguration, str, Optional[GridSpec]]:
    if args.spec:
        cfg, digest = load_spec_file(args.spec)
        return cfg, digest, None
    if args.preset:
        preset = figure_preset(args.preset)
        return preset.config, preset.digest, preset.grid
    raise UsageError("Entweder --spec oder --preset angeben")


def _command_sample(args, settings: ConfigManager) -> int:
    cfg, digest, preset_grid = _load_source(args)
    if args.grid:
        grid = GridSpec.parse(args.grid)
    elif preset_grid is not None:
        grid = preset_grid
    else:
        raise UsageError("--grid ist ohne --preset erforderlich")

    sample = sample_grid(cfg, grid, digest, settings.get("singular_threshold"), worker_count(settings))
    ExportManager.write_grid(sample, args.out, args.format)
    if args.svg:
        ExportManager.export_heatmap_svg(sample, args.svg)

    _emit({
        "command": "sample",
        "out": args.out,
        "format": args.format,
        "points": len(sample.values),
        "singular": sample.singular_count,
        "config_digest": digest,
    })
    return EXIT_OK


def _command_verify(args, settings: ConfigManager) -> int:
    cfg, digest, _ = _load_source(args)
    suites = [s.strip() for s in args.suites.split(",") if s.strip()] if args.suites else None
    if suites:
        unknown = [s for s in suites if s not in SUITES]
        if unknown:
            raise UsageError(f"Unbekannte Prüfungen: {unknown}", {"available": list(SUITES)})
    report = run_verification_suite(cfg, settings, suites, args.points, args.h, args.seed)
    report["config_digest"] = digest
    _emit(report)
    return EXIT_OK if report["passed"] else EXIT_VERIFICATION_FAILED


def _command_asymptotics(args, settings: ConfigManager) -> int:
    cfg, digest, _ = _load_source(args)
    a, _, c, _ = cfg.amplitudes(0)
    case = classify_case(a, c)
    document = {
        "config_digest": digest,
        "case": case.value,
        "profiles": {direction: asymptotic_profile(cfg, direction).to_dict() for direction in (PAST, FUTURE)},
        "collision": collision_amplitudes(cfg).to_dict(),
        "position_shift": position_shift(cfg) if case != CaseTag.CASE1 else None,
    }
    if args.fit:
        t_fit = args.t_fit if args.t_fit is not None else settings.get("fit_time")
        fits = fitted_profiles(cfg, t_fit)
        document["fits"] = {direction: fit.to_dict() for direction, fit in fits.items()}
        if case != CaseTag.CASE1:
            document["fitted_position_shift"] = fits[FUTURE].delta - fits[PAST].delta
    _emit(document)
    return EXIT_OK


def _command_preset(args, settings: ConfigManager) -> int:
    preset = figure_preset(args.name)
    spec_document = dump_spec(preset.config)
    if args.emit_spec:
        _emit(spec_document)
    else:
        _emit({
            "name": preset.name,
            "note": preset.note,
            "grid": preset.grid.to_dict(),
            "config_digest": preset.digest,
            "spec": spec_document,
        })
    return EXIT_OK


def _load_settings(path: Optional[str]) -> ConfigManager:
    if path is None:
        return ConfigManager()
    if not Path(path).is_file():
        raise IoFailure(f"Einstellungsdatei {path} nicht gefunden", {"path": path})
    return ConfigManager(path)


COMMANDS = {
    "sample": _command_sample,
    "verify": _command_verify,
    "asymptotics": _command_asymptotics,
    "preset": _command_preset,
}


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    """
    Führt ein Kommando aus und liefert den Exit-Code.

    Fehler werden als {"error", "message", "details"} auf stdout ausgegeben.
    """
    argv: List[str] = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            SolitonLogger.enable_debug()
        settings = _load_settings(args.settings)
        return COMMANDS[args.command](args, settings)
    except SystemExit as e:
        # --help
        return int(e.code or 0) if not isinstance(e.code, str) else EXIT_USAGE
    except IoFailure as e:
        _emit(e.to_dict())
        return EXIT_IO
    except VerificationError as e:
        _emit(e.to_dict())
        return EXIT_VERIFICATION_FAILED
    except NgssError as e:
        logger.warning(f"{e.code}: {e.message}")
        _emit(e.to_dict())
        return EXIT_USAGE
    except ValueError as e:
        _emit({"error": "ValueError", "message": str(e), "details": {}})
        return EXIT_USAGE


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
