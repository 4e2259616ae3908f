"""
Command line
============

``duality sweep`` runs an angle sweep and writes the figure data,
``duality verify`` re-checks written figure data, ``duality tomo``
reconstructs a state from a count record file and ``duality counts``
simulates such a file.

Exit codes: 0 success, 1 a duality relation is violated, 2 invalid input,
3 the computation failed.
"""

import logging
import sys
from typing import Dict, List, Sequence

import click
import numpy as np

from .coherence import coherence_report
from .config import ConfigError, load_experiment_config
from .duality import (DualityVerdict, ideal_sweep, simulated_sweep,
                      verify_all, wave_pipeline, particle_pipeline,
                      state_pipeline, joint_from_records, wave_records,
                      particle_records)
from .optics import CircuitMode
from .sampler import sampler_for_workers
from .storage import (FigureDataError, dict_to_json, read_figure_data,
                      save_dict_to_json, verify_figure_data,
                      write_figure_data)
from .tomo import (CountRecord, DISCRIMINATION_LABELS, EmptyCountsError,
                   IncompleteTomographyError, MonteCarloError,
                   RecordSchemaError, group_branches, load_records_csv,
                   mle_reconstruct, monte_carlo_error, save_records_csv,
                   weighted_two_branch_reconstruct)
from .version import __version__

logger = logging.getLogger("CLI")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_PIPELINE = 3

PIPELINE_ERRORS = (ValueError, RuntimeError, ArithmeticError,
                   np.linalg.LinAlgError)


def _fail(message: str, code: int):
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


def _report(verdicts: Sequence[DualityVerdict]) -> int:
    violated = [v for v in verdicts if not v.satisfied]
    for v in verdicts:
        status = "ok" if v.satisfied else "VIOLATED"
        click.echo(f"theta={v.theta:9.4f} {v.source:9s} {v.relation:9s} "
                   f"lhs={v.lhs:.9g} bound={v.bound:.9g} "
                   f"slack={v.slack:.3g} {status}")
    click.echo(f"{len(verdicts) - len(violated)}/{len(verdicts)} "
               f"verdicts satisfied.")
    return EXIT_VIOLATION if violated else EXIT_OK


@click.group()
@click.version_option(__version__, prog_name="duality")
def main():
    """
    Simulate and check wave-particle duality relations of a two-path
    which-way experiment.
    """


@main.command()
@click.option("--config", "config_file", type=click.Path(),
              help="INI file with a [sweep] section. Defaults to "
                   "$DUALITY_CONFIG.")
@click.option("--theta-start", type=float,
              help="First detector angle in degrees.")
@click.option("--theta-end", type=float,
              help="Last detector angle in degrees.")
@click.option("--theta-steps", type=int, help="Number of angles.")
@click.option("--flux", type=float,
              help="Photons per second and measurement setting.")
@click.option("--exposure", type=float,
              help="Seconds per measurement setting.")
@click.option("--mc-samples", type=int,
              help="Monte-Carlo samples per error bar.")
@click.option("--seed", type=int, help="Run seed.")
@click.option("--n-paths", type=int,
              help="Number of paths. Only two paths are simulated; more "
                   "paths give ideal values only.")
@click.option("--format", "output_format", type=str,
              help="csv or json.")
@click.option("--out-dir", default=".", show_default=True,
              type=click.Path(file_okay=False),
              help="Directory for fig2 and fig3 data.")
@click.option("--workers", type=int,
              help="Worker threads, 0 for all cores.")
def sweep(config_file, theta_start, theta_end, theta_steps, flux, exposure,
          mc_samples, seed, n_paths, output_format, out_dir, workers):
    """
    Sweep the detector angle and write the figure data.
    """
    overrides = {"theta_start": theta_start, "theta_end": theta_end,
                 "theta_steps": theta_steps, "flux": flux,
                 "exposure": exposure, "mc_samples": mc_samples,
                 "seed": seed, "n_paths": n_paths, "format": output_format,
                 "workers": workers}
    try:
        config = load_experiment_config(config_file, overrides)
    except ConfigError as e:
        _fail(str(e), EXIT_INPUT)
    logger.info(f"Running {config}.")

    sampler = sampler_for_workers(config.workers)
    try:
        if config.n_paths == 2:
            records = simulated_sweep(config, sampler)
        else:
            logger.warning(f"Only two paths are simulated; writing ideal "
                           f"values for n_paths={config.n_paths}.")
            records = ideal_sweep(config.thetas, config.n_paths, sampler)
        verdicts = [v for r in records for v in verify_all(r)]
        verdicts += [v for r in records if r.has_simulation
                     for v in verify_all(r, "simulated")]
        paths = write_figure_data(records, out_dir, config.output_format)
    except PIPELINE_ERRORS as e:
        logger.error(f"Sweep failed: {e}")
        _fail(str(e), EXIT_PIPELINE)
    except OSError as e:
        _fail(str(e), EXIT_INPUT)

    for path in paths:
        click.echo(f"Wrote {path}")
    sys.exit(_report(verdicts))


@main.command()
@click.argument("files", nargs=-1, required=True, type=click.Path())
def verify(files):
    """
    Re-check the duality relations on fig2 or fig3 data files.
    """
    verdicts = []
    for path in files:
        try:
            figure, data = read_figure_data(path)
        except FigureDataError as e:
            _fail(f"{path}: {e}", EXIT_INPUT)
        click.echo(f"{path}: {figure}, {len(data)} rows")
        verdicts += verify_figure_data(figure, data)
    sys.exit(_report(verdicts))


def _two_branch_pipeline(records: List[CountRecord]) -> Dict[str, float]:
    values = wave_pipeline(records)
    values["offdiag_abs"] = values["V"] / 2
    return values


def _matrix_to_dict(m: np.ndarray) -> dict:
    return {"real": np.real(m).tolist(), "imag": np.imag(m).tolist()}


def _check_branches(records: Sequence[CountRecord], allowed: Sequence[int]):
    for position, r in enumerate(records):
        if r.branch not in allowed:
            raise RecordSchemaError(
                f"branch {r.branch} outside {sorted(allowed)}",
                position + 2)


def tomo_report(records: Sequence[CountRecord], mc_samples: int, seed: int,
                sampler=None) -> dict:
    """
    The reconstruction of ``records`` with Monte-Carlo error bars.

    Discrimination settings give the joint outcome table; Pauli settings
    on a single branch give the polarization state; Pauli settings on two
    branches give the weighted two-branch reconstruction of the path
    state.

    Raises
    ------
    RecordSchemaError
        If discrimination or two-branch records name a branch other than
        1 or 2. The line number counts the records as rows of a file with
        a header line.
    """
    labels = {r.setting_label for r in records}
    if labels <= set(DISCRIMINATION_LABELS):
        _check_branches(records, (1, 2))
        mode, pipeline = CircuitMode.PARTICLE.value, particle_pipeline
        report = {"joint": joint_from_records(records).tolist()}
    else:
        branches = sorted({r.branch for r in records})
        if len(branches) == 1:
            mode, pipeline = "state", state_pipeline
            rho = mle_reconstruct(records).rho_hat
        else:
            _check_branches(records, (1, 2))
            mode, pipeline = CircuitMode.WAVE.value, _two_branch_pipeline
            rho = weighted_two_branch_reconstruct(
                group_branches(records, 2))
        report = {"rho": _matrix_to_dict(rho.matrix),
                  "coherence": coherence_report(rho, rho.dim).to_dict()}
    report["mode"] = mode
    report["values"] = pipeline(list(records))
    estimates = monte_carlo_error(pipeline, records, mc_samples, seed,
                                  sampler)
    report["monte_carlo"] = {k: v.to_dict() for k, v in estimates.items()}
    return report


@main.command()
@click.argument("csv_file", type=click.Path())
@click.option("--mc-samples", default=100, show_default=True, type=int,
              help="Monte-Carlo samples per error bar.")
@click.option("--seed", default=0, show_default=True, type=int,
              help="Seed of the Monte-Carlo resampling.")
@click.option("--workers", default=1, show_default=True, type=int,
              help="Worker threads, 0 for all cores.")
@click.option("--out", type=click.Path(dir_okay=False),
              help="Write the JSON report here instead of stdout.")
def tomo(csv_file, mc_samples, seed, workers, out):
    """
    Reconstruct the state behind a count record CSV file.
    """
    if mc_samples < 2:
        _fail(f"--mc-samples={mc_samples}: need at least 2.", EXIT_INPUT)
    if seed < 0:
        _fail(f"--seed={seed}: must be non-negative.", EXIT_INPUT)
    try:
        records = load_records_csv(csv_file)
    except (RecordSchemaError, OSError) as e:
        _fail(f"{csv_file}: {e}", EXIT_INPUT)
    try:
        report = tomo_report(records, mc_samples, seed,
                             sampler_for_workers(workers))
    except RecordSchemaError as e:
        _fail(f"{csv_file}: {e}", EXIT_INPUT)
    except (IncompleteTomographyError, EmptyCountsError,
            MonteCarloError) as e:
        _fail(str(e), EXIT_PIPELINE)
    except PIPELINE_ERRORS as e:
        logger.error(f"Reconstruction failed: {e}")
        _fail(str(e), EXIT_PIPELINE)
    if out is None:
        click.echo(dict_to_json(report))
    else:
        save_dict_to_json(report, out)
        click.echo(f"Wrote {out}")


@main.command()
@click.option("--theta", required=True, type=float,
              help="Detector angle in degrees.")
@click.option("--mode", type=click.Choice([m.value for m in CircuitMode]),
              default=CircuitMode.WAVE.value, show_default=True)
@click.option("--flux", default=5000.0, show_default=True, type=float,
              help="Photons per second and measurement setting.")
@click.option("--exposure", default=10.0, show_default=True, type=float,
              help="Seconds per measurement setting.")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--exact", is_flag=True,
              help="Write expected counts instead of Poisson draws.")
@click.option("--out", required=True, type=click.Path(dir_okay=False),
              help="Count record CSV file to write.")
def counts(theta, mode, flux, exposure, seed, exact, out):
    """
    Simulate the count records of one detector angle.
    """
    try:
        wave = CircuitMode.parse(mode) is CircuitMode.WAVE
        simulate = wave_records if wave else particle_records
        records = simulate(theta, flux, exposure, seed, exact=exact)
    except ValueError as e:
        _fail(str(e), EXIT_INPUT)
    save_records_csv(records, out)
    click.echo(f"Wrote {len(records)} records to {out}")


__all__ = ["main", "tomo_report"]
