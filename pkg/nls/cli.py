"""
Command line interface.

    nls run --dim D --n N --s S --eps E --gamma G --method M --tau T --t-end TEND --lambda ±1
            [--out state.nlsf] [--observe-every K]
    nls convergence --config FILE [--out results.csv]
    nls oracle --out oracle.csv

Exit codes: 0 success, 2 blow-up, 3 reference cross-validation failure,
4 configuration error.
"""

import argparse
import logging
import sys
import time

from . import __version__
from .config_loader import load_app_config, load_convergence_config
from .errors import BlowUpError, ConfigError, NLSError
from .experiments import (
    RoughDataSpec,
    convergence_study,
    format_convergence_csv,
    format_oracle_csv,
    parse_tau,
    rough_initial_data,
    steps_for,
    write_text,
)
from .integrators import MethodId, evolve, mass
from .phi import oracle_table
from .spectral import SobolevWeight, hgamma_norm, make_grid, transforms, write_snapshot
from .utils import Colors, banner, configure_logging, display_study, display_summary, error_banner

logger = logging.getLogger(__name__)

EXIT_OK = 0


def _sign(text: str) -> int:
    value = int(text)
    if value not in (-1, 1):
        raise argparse.ArgumentTypeError(f"lambda must be +1 or -1, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nls",
        description="Low-regularity integrators for the cubic NLS on the torus",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Override NLS_LOG_LEVEL")
    parser.add_argument("--env-file", default=None, help="Load settings from this .env file")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Evolve rough initial data and report norms")
    run.add_argument("--dim", type=int, default=2)
    run.add_argument("--n", type=int, default=128)
    run.add_argument("--s", type=float, default=4.0, help="Data regularity exponent")
    run.add_argument("--eps", type=float, default=0.0)
    run.add_argument("--gamma", type=float, default=2.0, help="Reported H^gamma index")
    run.add_argument("--weight", choices=[w.value for w in SobolevWeight], default="linear")
    run.add_argument("--method", choices=[m.value for m in MethodId], default="lri2")
    run.add_argument("--tau", type=parse_tau, default=2.0**-6, help="Step size, e.g. 0.01 or 2^-6")
    run.add_argument("--t-end", type=float, default=1.0)
    run.add_argument("--lambda", dest="lam", type=_sign, default=1)
    run.add_argument("--out", default=None, help="Write the final state as a snapshot")
    run.add_argument("--observe-every", type=int, default=0, help="Log norms every K steps")

    conv = sub.add_parser("convergence", help="Run a convergence study from a config file")
    conv.add_argument("--config", required=True)
    conv.add_argument("--out", default=None, help="CSV path (default: stdout)")
    conv.add_argument("--workers", type=int, default=None, help="Override NLS_STUDY_WORKERS")
    conv.add_argument("--no-timing", action="store_true", help="Write wall times as 0")
    conv.add_argument("--no-cache", action="store_true", help="Do not read or write reference snapshots")

    oracle = sub.add_parser("oracle", help="Tabulate the phase-approximation remainder")
    oracle.add_argument("--out", default=None, help="CSV path (default: stdout)")
    oracle.add_argument("--samples", type=_positive, default=20)
    oracle.add_argument("--seed", type=int, default=2022)
    oracle.add_argument("--with-r1", action="store_true", help="Append the two-term remainder")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        write_text(out, text)


def cmd_run(args, config) -> int:
    grid = make_grid(args.dim, args.n)
    u0 = rough_initial_data(RoughDataSpec(grid=grid, s=args.s, epsilon=args.eps)).to_physical()
    n_steps = steps_for(args.t_end, args.tau)
    banner(f"Running {args.method}: d={args.dim}, N={args.n}, tau={args.tau:g}, steps={n_steps}")

    observer = None
    if args.observe_every > 0:

        def observer(n, t_n, field):
            if n % args.observe_every == 0:
                logger.info(
                    "step %d t=%.6g mass=%.12e H^%g=%.12e",
                    n, t_n, mass(field), args.gamma, hgamma_norm(field, args.gamma, args.weight),
                )

    started = time.perf_counter()
    u = evolve(u0, args.method, args.tau, n_steps, args.lam, observer=observer, progress=True)
    elapsed = time.perf_counter() - started

    if args.out:
        write_snapshot(args.out, u)
    display_summary(
        {
            "result": {
                "hgamma_norm": hgamma_norm(u, args.gamma, args.weight),
                "mass": mass(u),
            },
            "stats": {
                "initial_mass": mass(u0),
                "steps": n_steps,
                "wall_time_seconds": elapsed,
            },
            "additional_info": {"snapshot": args.out} if args.out else {},
        }
    )
    return EXIT_OK


def cmd_convergence(args, config) -> int:
    spec = load_convergence_config(args.config)
    workers = args.workers if args.workers is not None else config.study_workers
    banner(f"Convergence study: methods={[m.value for m in spec.methods]}, d={spec.d}, N={spec.N}")
    result = convergence_study(
        spec,
        workers=workers,
        cache_dir=None if args.no_cache else config.cache_dir,
        timing=not args.no_timing,
    )
    _emit(format_convergence_csv(result), args.out)
    display_study(result)
    if result.blowups:
        error_banner(f"{len(result.blowups)} run(s) blew up")
        return BlowUpError.exit_code
    return EXIT_OK


def cmd_oracle(args, config) -> int:
    rows = oracle_table(samples=args.samples, seed=args.seed, with_r1=args.with_r1)
    _emit(format_oracle_csv(rows), args.out)
    worst = max(row["abs_r2"] / (row["tau"] ** 3 * row["beta"] ** 2) for row in rows)
    print(f"{Colors.GREEN}max |R2|/(tau^3 beta^2) = {worst:.4f}{Colors.RESET}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {"run": cmd_run, "convergence": cmd_convergence, "oracle": cmd_oracle}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_app_config(args.env_file)
        configure_logging(args.log_level or config.log_level)
        transforms.set_workers(config.fft_workers)
        return COMMANDS[args.command](args, config)
    except NLSError as e:
        error_banner(str(e))
        return e.exit_code
    except ValueError as e:
        # invalid command-line parameters (odd N, tau not dividing T, ...)
        error_banner(str(e))
        return ConfigError.exit_code


if __name__ == "__main__":
    sys.exit(main())
