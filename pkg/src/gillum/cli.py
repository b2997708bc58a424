"""Command-line front end: ``gillum figure <preset> [options]``.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
Options may also come from a ``key=value`` config file; flags win.
"""

from __future__ import annotations

import argparse
import sys

from .channels import NoiseModel
from .emit import emit, to_csv, to_json, to_svg
from .figures import FIGURE_NAMES, ConfigError, NumericalError, SweepConfig, run_figure

_RENDER = {"csv": to_csv, "json": to_json, "svg": to_svg}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gillum",
        description="Gaussian-illumination receiver sweeps and comparison figures.")
    sub = parser.add_subparsers(dest="command", required=True)
    fig = sub.add_parser("figure", help="run a figure preset")
    fig.add_argument("name", choices=FIGURE_NAMES, help="figure preset")
    fig.add_argument("--kappa", type=float, help="target reflectance")
    fig.add_argument("--nb", type=float, help="background mean photon number")
    fig.add_argument("--ns-min", type=float, help="sweep lower edge (N_S, or kappa for fig5a)")
    fig.add_argument("--ns-max", type=float, help="sweep upper edge")
    fig.add_argument("--points", type=int, help="sweep point count")
    fig.add_argument("--modes", type=float, help="number of mode pairs M")
    fig.add_argument("--noise", choices=["constant", "nonconstant"],
                     help="background noise convention")
    fig.add_argument("--receivers", help="comma-separated curve label subset")
    fig.add_argument("--format", dest="fmt", choices=["csv", "json", "svg"])
    fig.add_argument("--out", help="output path (default: stdout)")
    fig.add_argument("--config", help="key=value option file (flags win)")
    return parser


def _read_config_file(path: str) -> dict:
    opts = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(
                        f"{path}:{lineno}: expected key=value, got {line!r}")
                key, value = line.split("=", 1)
                opts[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return opts


_FILE_KEYS = {
    "kappa": float, "nb": float, "ns_min": float, "ns_max": float,
    "points": int, "modes": float, "noise": str, "receivers": str,
    "format": str, "out": str,
}


def _merge(args: argparse.Namespace) -> dict:
    merged = {}
    if args.config:
        raw = _read_config_file(args.config)
        for key, value in raw.items():
            if key not in _FILE_KEYS:
                raise ConfigError(f"unknown config key {key!r}")
            try:
                merged[key] = _FILE_KEYS[key](value)
            except ValueError as exc:
                raise ConfigError(f"bad value for {key!r}: {value!r}") from exc
    flag_map = {
        "kappa": args.kappa, "nb": args.nb, "ns_min": args.ns_min,
        "ns_max": args.ns_max, "points": args.points, "modes": args.modes,
        "noise": args.noise, "receivers": args.receivers,
    }
    for key, value in flag_map.items():
        if value is not None:
            merged[key] = value
    if args.out is not None:
        merged["out"] = args.out
    if args.fmt is not None:
        merged["format"] = args.fmt
    return merged


def _sweep_config(name: str, merged: dict) -> SweepConfig:
    noise = merged.get("noise")
    if isinstance(noise, str):
        try:
            noise = NoiseModel(noise)
        except ValueError as exc:
            raise ConfigError(f"unknown noise model {merged['noise']!r}") from exc
    receivers = merged.get("receivers") or ""
    receivers = tuple(r.strip() for r in receivers.split(",") if r.strip()) \
        if isinstance(receivers, str) else tuple(receivers)
    kwargs = dict(figure=name)
    if "kappa" in merged:
        kwargs["kappa"] = merged["kappa"]
    if "nb" in merged:
        kwargs["n_b"] = merged["nb"]
    if "modes" in merged:
        kwargs["m_modes"] = merged["modes"]
    if "ns_min" in merged:
        kwargs["sweep_min"] = merged["ns_min"]
    if "ns_max" in merged:
        kwargs["sweep_max"] = merged["ns_max"]
    if "points" in merged:
        kwargs["points"] = merged["points"]
    if noise is not None:
        kwargs["noise"] = noise
    if receivers:
        kwargs["receivers"] = receivers
    return SweepConfig(**kwargs)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        merged = _merge(args)
        config = _sweep_config(args.name, merged)
        curves = run_figure(config)
        fmt = merged.get("format", "csv")
        out = merged.get("out")
        if out:
            emit(curves, fmt, out)
        else:
            if fmt not in _RENDER:
                raise ConfigError(f"unknown format {fmt!r}")
            sys.stdout.write(_RENDER[fmt](curves))
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:  # ConfigError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
