"""Parameter sweeps producing labeled curve sets for the standard comparisons.

Each preset fixes a sweep axis and a set of receiver curves; defaults follow
the canonical working point kappa = 0.01, N_B = 30, M = 1e7 with 200
log-spaced sweep points.  Sweep evaluation is deterministic; points may be
evaluated concurrently (set GILLUM_THREADS) since every computation is pure.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channels import NoiseModel, ScenarioParams, SourceKind, hypothesis_pair
from .chernoff import coherent_qcb_closed, qcb
from .receivers import (
    ReceiverKind,
    ReceiverSpec,
    optimal_beta_closed,
    optimize_alpha_beta_nonconstant,
    snr_bound_constant,
    snr_cct,
    snr_closed_dh,
    snr_closed_opa,
    snr_closed_pc,
    snr_coherent_hd,
    snr_generic,
    snr_nearly_bound,
)

FIGURE_NAMES = ("fig1", "fig2", "fig3", "fig4", "fig5a", "fig5b", "s1", "s2")


class ConfigError(ValueError):
    """Invalid sweep configuration."""


class NumericalError(RuntimeError):
    """A sweep produced a non-finite value."""


@dataclass(frozen=True)
class Curve:
    label: str
    x: np.ndarray
    y: np.ndarray


@dataclass(frozen=True)
class CurveSet:
    x_label: str
    y_label: str
    curves: tuple

    def __post_init__(self):
        if not self.curves:
            raise ConfigError("curve set must contain at least one curve")
        for c in self.curves:
            if c.x.size != c.y.size or c.x.size < 1:
                raise ConfigError(f"curve {c.label!r} has mismatched points")
            if not (np.all(np.isfinite(c.x)) and np.all(np.isfinite(c.y))):
                raise NumericalError(f"curve {c.label!r} contains non-finite values")
            if np.any(np.diff(c.x) <= 0):
                raise ConfigError(f"curve {c.label!r} x values must increase")


@dataclass(frozen=True)
class SweepConfig:
    """Figure preset selection plus overrides."""

    figure: str
    kappa: float = 0.01
    n_b: float = 30.0
    m_modes: float = 1e7
    sweep_min: float | None = None
    sweep_max: float | None = None
    points: int = 200
    noise: NoiseModel | None = None
    receivers: tuple = ()

    def __post_init__(self):
        if self.figure not in FIGURE_NAMES:
            raise ConfigError(
                f"unknown figure {self.figure!r}; expected one of {FIGURE_NAMES}")
        if self.points < 2:
            raise ConfigError("points must be >= 2")
        if self.sweep_min is not None and self.sweep_max is not None:
            if not (0 < self.sweep_min < self.sweep_max):
                raise ConfigError("sweep range must be positive and ordered")


def _sweep_axis(config: SweepConfig, default_min: float, default_max: float) -> np.ndarray:
    lo = config.sweep_min if config.sweep_min is not None else default_min
    hi = config.sweep_max if config.sweep_max is not None else default_max
    if not (0 < lo < hi):
        raise ConfigError("sweep range must be positive and ordered")
    return np.logspace(math.log10(lo), math.log10(hi), config.points)


def _map_points(fn, xs):
    threads = int(os.environ.get("GILLUM_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, xs))
    return [fn(x) for x in xs]


def _params(config: SweepConfig, noise: NoiseModel, **overrides) -> ScenarioParams:
    base = dict(kappa=config.kappa, n_s=0.0, n_b=config.n_b,
                m_modes=max(1, int(config.m_modes)), noise_model=noise)
    base.update(overrides)
    return ScenarioParams(**base)


def _coherent_baseline_snr(params: ScenarioParams) -> float:
    """Coherent-probe bound as an equivalent SNR (M times the QCB exponent)."""
    if params.noise_model is NoiseModel.CONSTANT:
        return coherent_qcb_closed(params).exponent
    pair = hypothesis_pair(SourceKind.COHERENT, params)
    return qcb(pair, params.m_modes).exponent


def _qi_receiver_values(config: SweepConfig, noise: NoiseModel, ns: float) -> dict:
    params = _params(config, noise, n_s=ns)
    values = {"Coh": _coherent_baseline_snr(params)}
    if noise is NoiseModel.CONSTANT:
        values["OB"] = snr_bound_constant(params).snr
    else:
        values["OB"] = optimize_alpha_beta_nonconstant(params)[2].snr
    values["nOB"] = snr_nearly_bound(params).snr
    values["PC"] = snr_closed_pc(params).snr
    values["OPA"] = snr_closed_opa(params).snr
    values["DH"] = snr_closed_dh(params).snr
    return values


def _select(labels, config: SweepConfig):
    if not config.receivers:
        return list(labels)
    unknown = [r for r in config.receivers if r not in labels]
    if unknown:
        raise ConfigError(
            f"unknown receivers {unknown}; available: {sorted(labels)}")
    return [l for l in labels if l in config.receivers]


def _curves_from_rows(xs, rows, labels) -> tuple:
    return tuple(
        Curve(label, np.asarray(xs, dtype=float),
              np.array([row[label] for row in rows], dtype=float))
        for label in labels)


def _fig_receivers(config: SweepConfig, noise: NoiseModel) -> CurveSet:
    xs = _sweep_axis(config, 1e-2, 10.0)
    rows = _map_points(lambda ns: _qi_receiver_values(config, noise, ns), xs)
    labels = _select(["Coh", "OB", "nOB", "PC", "OPA", "DH"], config)
    return CurveSet("N_S", "SNR", _curves_from_rows(xs, rows, labels))


def _fig_differences(config: SweepConfig) -> CurveSet:
    xs = _sweep_axis(config, 1e-2, 10.0)
    def row(ns):
        vals = _qi_receiver_values(config, NoiseModel.CONSTANT, ns)
        return {"OB-Coh": vals["OB"] - vals["Coh"],
                "PC-Coh": vals["PC"] - vals["Coh"]}
    rows = _map_points(row, xs)
    labels = _select(["OB-Coh", "PC-Coh"], config)
    return CurveSet("N_S", "SNR difference", _curves_from_rows(xs, rows, labels))


def _fig_heterodyne(config: SweepConfig) -> CurveSet:
    xs = _sweep_axis(config, 1e-2, 10.0)
    def row(ns):
        params = _params(config, NoiseModel.CONSTANT, n_s=ns)
        pair = hypothesis_pair(SourceKind.TMSV, params)
        m = params.m_modes
        return {
            "Coh&HD": snr_coherent_hd(params).snr,
            "dHTD after BS": snr_generic(ReceiverSpec(ReceiverKind.DOUBLE_HTD), pair, m).snr,
            "separate HTD": snr_generic(ReceiverSpec(ReceiverKind.SEPARATE_HTD), pair, m).snr,
            "HD product": snr_generic(ReceiverSpec(ReceiverKind.HD_PRODUCT), pair, m).snr,
        }
    rows = _map_points(row, xs)
    labels = _select(["Coh&HD", "dHTD after BS", "separate HTD", "HD product"], config)
    return CurveSet("N_S", "SNR", _curves_from_rows(xs, rows, labels))


def _fig_cct_kappa(config: SweepConfig) -> CurveSet:
    xs = _sweep_axis(config, 1e-3, 0.1)
    noise = config.noise or NoiseModel.CONSTANT
    combos = [(1.0, 1.0), (1.0, 2.0)]
    def row(kappa):
        out = {}
        for ns, ni in combos:
            params = ScenarioParams(kappa=kappa, n_s=ns, n_i=ni, n_b=config.n_b,
                                    m_modes=max(1, int(config.m_modes)),
                                    noise_model=noise)
            pair = hypothesis_pair(SourceKind.CCT, params)
            out[f"QCB N_S={ns:g} N_I={ni:g}"] = qcb(pair, params.m_modes).exponent
            out[f"O_off N_S={ns:g} N_I={ni:g}"] = snr_cct(params).snr
        return out
    rows = _map_points(row, xs)
    labels = _select([f"{kind} N_S={ns:g} N_I={ni:g}"
                      for ns, ni in combos for kind in ("QCB", "O_off")], config)
    return CurveSet("kappa", "SNR", _curves_from_rows(xs, rows, labels))


def _fig_cct_ns(config: SweepConfig) -> CurveSet:
    xs = _sweep_axis(config, 1e-2, 10.0)
    noise = config.noise or NoiseModel.CONSTANT
    def row(ns):
        params = ScenarioParams(kappa=config.kappa, n_s=ns, n_i=ns, n_b=config.n_b,
                                m_modes=max(1, int(config.m_modes)),
                                noise_model=noise)
        pair = hypothesis_pair(SourceKind.CCT, params)
        return {
            "CCT QCB": qcb(pair, params.m_modes).exponent,
            "CCT O_off": snr_cct(params).snr,
            "Coh QCB": _coherent_baseline_snr(params),
        }
    rows = _map_points(row, xs)
    labels = _select(["CCT QCB", "CCT O_off", "Coh QCB"], config)
    return CurveSet("N_S", "SNR", _curves_from_rows(xs, rows, labels))


def _fig_optimal_beta(config: SweepConfig) -> CurveSet:
    xs = _sweep_axis(config, 1e-2, 10.0)
    ys = [optimal_beta_closed(_params(config, NoiseModel.CONSTANT, n_s=ns))
          for ns in xs]
    return CurveSet("N_S", "|beta|",
                    (Curve("|beta|", np.asarray(xs), np.array(ys)),))


def _fig_optimal_alpha_beta(config: SweepConfig) -> CurveSet:
    xs = _sweep_axis(config, 1e-2, 10.0)
    def row(ns):
        alpha, beta, _ = optimize_alpha_beta_nonconstant(
            _params(config, NoiseModel.NONCONSTANT, n_s=ns))
        return {"alpha": alpha, "beta": beta}
    rows = _map_points(row, xs)
    labels = _select(["alpha", "beta"], config)
    return CurveSet("N_S", "optimal weight", _curves_from_rows(xs, rows, labels))


_BUILDERS = {
    "fig1": lambda c: _fig_receivers(c, c.noise or NoiseModel.CONSTANT),
    "fig2": _fig_differences,
    "fig3": lambda c: _fig_receivers(c, c.noise or NoiseModel.NONCONSTANT),
    "fig4": _fig_heterodyne,
    "fig5a": _fig_cct_kappa,
    "fig5b": _fig_cct_ns,
    "s1": _fig_optimal_beta,
    "s2": _fig_optimal_alpha_beta,
}


def run_figure(config: SweepConfig) -> CurveSet:
    """Run one figure preset and return its deterministic curve set."""
    return _BUILDERS[config.figure](config)
