"""
Configuration
=============

Experiment settings of a sweep. Defaults live in an INI string; a user
file, given explicitly or through the ``DUALITY_CONFIG`` environment
variable, is layered on top, and command line flags override both.
"""

import configparser
import logging
import os
from typing import Mapping
import numpy as np

logger = logging.getLogger("Config")

CONFIG_ENV = "DUALITY_CONFIG"
SECTION = "sweep"

DEFAULT_CONFIG = """# pyduality sweep settings
[sweep]
# detector angles in degrees
theta_start=0
theta_end=45
theta_steps=19
# photons per second and setting, seconds per setting
flux=5000
exposure=10
mc_samples=100
seed=0
n_paths=2
# csv or json
format=csv
# 0 means all available cores
workers=1
"""

OUTPUT_FORMATS = ("csv", "json")


class ConfigError(ValueError):
    pass


class ExperimentConfig:
    """
    Settings of a simulated sweep.

    Parameters
    ----------
    theta_start, theta_end: float
        First and last detector angle in degrees, within [0, 90].
    theta_steps: int
        Number of grid points, at least 1. With a single point only
        ``theta_start`` is used.
    flux: float
        Photons per second entering each measurement setting.
    exposure: float
        Exposure time per setting in seconds.
    mc_samples: int
        Monte-Carlo resamples per quantity, at least 2.
    seed: int
        Non-negative run seed.
    n_paths: int
        Number of interferometer paths, at least 2.
    output_format: str
        ``csv`` or ``json``.
    workers: int
        Worker threads; 0 uses all available cores.
    """

    def __init__(self,
                 theta_start: float = 0.0,
                 theta_end: float = 45.0,
                 theta_steps: int = 19,
                 flux: float = 5000.0,
                 exposure: float = 10.0,
                 mc_samples: int = 100,
                 seed: int = 0,
                 n_paths: int = 2,
                 output_format: str = "csv",
                 workers: int = 1):
        self.theta_start = float(theta_start)
        self.theta_end = float(theta_end)
        self.theta_steps = int(theta_steps)
        self.flux = float(flux)
        self.exposure = float(exposure)
        self.mc_samples = int(mc_samples)
        self.seed = int(seed)
        self.n_paths = int(n_paths)
        self.output_format = str(output_format).lower()
        self.workers = int(workers)
        self.validate()

    def validate(self):
        for name in ("theta_start", "theta_end"):
            value = getattr(self, name)
            if not 0 <= value <= 90:
                raise ConfigError(
                    f"{name}={value} is outside [0, 90] degrees.")
        if self.theta_steps < 1:
            raise ConfigError(
                f"theta_steps={self.theta_steps}: need at least one point.")
        if self.theta_steps > 1 and self.theta_end < self.theta_start:
            raise ConfigError(
                f"theta_end={self.theta_end} lies below "
                f"theta_start={self.theta_start}.")
        if not self.flux > 0:
            raise ConfigError(f"flux={self.flux}: must be positive.")
        if not self.exposure > 0:
            raise ConfigError(f"exposure={self.exposure}: must be positive.")
        if self.mc_samples < 2:
            raise ConfigError(
                f"mc_samples={self.mc_samples}: need at least 2 samples "
                f"for a standard deviation.")
        if self.seed < 0:
            raise ConfigError(f"seed={self.seed}: must be non-negative.")
        if self.n_paths < 2:
            raise ConfigError(
                f"n_paths={self.n_paths}: need at least two paths.")
        widest = float(np.max(self.thetas))
        lowest_overlap = -1 / (self.n_paths - 1)
        if self.n_paths > 2 and \
                np.cos(np.deg2rad(2 * widest)) < lowest_overlap - 1e-12:
            raise ConfigError(
                f"theta={widest:g} is beyond the widest angle for "
                f"n_paths={self.n_paths}: cos(2 theta) must be at least "
                f"-1/{self.n_paths - 1}.")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"format={self.output_format}: choose one of "
                f"{', '.join(OUTPUT_FORMATS)}.")
        if self.workers < 0:
            raise ConfigError(f"workers={self.workers}: must be >= 0.")

    @property
    def thetas(self) -> np.ndarray:
        """
        The detector angle grid in ascending order.
        """
        if self.theta_steps == 1:
            return np.array([self.theta_start])
        return np.linspace(self.theta_start, self.theta_end,
                           self.theta_steps)

    def to_dict(self) -> dict:
        return {"theta_start": self.theta_start,
                "theta_end": self.theta_end,
                "theta_steps": self.theta_steps,
                "flux": self.flux,
                "exposure": self.exposure,
                "mc_samples": self.mc_samples,
                "seed": self.seed,
                "n_paths": self.n_paths,
                "format": self.output_format,
                "workers": self.workers}

    def __repr__(self):
        fields = ", ".join(f"{k}={v}" for k, v in self.to_dict().items())
        return f"ExperimentConfig({fields})"


def get_config(path: str = None) -> configparser.ConfigParser:
    """
    The default settings, overlaid with the file at ``path`` or, if not
    given, at ``$DUALITY_CONFIG``.
    """
    config = configparser.ConfigParser()
    config.read_string(DEFAULT_CONFIG)

    if path is None:
        path = os.environ.get(CONFIG_ENV)
    if path is not None:
        if not os.path.isfile(path):
            raise ConfigError(f"Config file {path} does not exist.")
        try:
            config.read(path)
        except configparser.Error as e:
            raise ConfigError(f"Config file {path} is malformed: {e}")
        logger.debug(f"Read config file {path}.")
    return config


_CONVERTERS = {
    "theta_start": float,
    "theta_end": float,
    "theta_steps": int,
    "flux": float,
    "exposure": float,
    "mc_samples": int,
    "seed": int,
    "n_paths": int,
    "format": str,
    "workers": int,
}


def load_experiment_config(path: str = None,
                           overrides: Mapping = None) -> ExperimentConfig:
    """
    Build an :class:`ExperimentConfig` from defaults, the config file and
    ``overrides`` (e.g. command line flags; ``None`` values are ignored).
    """
    section = get_config(path)[SECTION]
    unknown = set(section.keys()) - set(_CONVERTERS)
    if unknown:
        raise ConfigError(
            f"Unknown keys in [{SECTION}]: {', '.join(sorted(unknown))}.")
    values = {}
    for key, convert in _CONVERTERS.items():
        try:
            values[key] = convert(section[key])
        except ValueError:
            raise ConfigError(
                f"[{SECTION}] {key}={section[key]!r} is not a valid "
                f"{convert.__name__}.")
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
    values["output_format"] = values.pop("format")
    return ExperimentConfig(**values)
