"""
Command-line interface for the Dual Complex Eigen Toolkit.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel

from dual_complex_eigen import __version__
from dual_complex_eigen.config import use_tolerances
from dual_complex_eigen.dcmat import DCMatrix, DCVector, mat_inverse, verify_eigenpair_detail
from dual_complex_eigen.dcnum import DualComplex
from dual_complex_eigen.eigsolve import Regime, eig_all, hermitian_eig, is_diagonalizable
from dual_complex_eigen.errors import (
    ConfigError,
    DualComplexError,
    MathematicalNegative,
    NoJordanForm,
    ParseError,
)
from dual_complex_eigen.jordan import jordan_form
from dual_complex_eigen.report import (
    diag_payload,
    dumps,
    eig_payload,
    error_payload,
    hermitian_payload,
    invert_payload,
    jordan_payload,
    render_text,
    verify_payload,
)

console = Console()
logger = logging.getLogger("dual_complex_eigen")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

VERBS = ("eig", "jordan", "diag", "invert", "verify", "hermitian")


@dataclass(frozen=True)
class Command:
    verb: str
    input_path: Path
    output_format: str = "text"
    tol_abs: Optional[float] = None
    tol_rank: Optional[float] = None
    tol_cluster: Optional[float] = None
    out: Optional[Path] = None


def load_payload(path: Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e.strerror or e}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}") from None


def load_matrix(payload: Any) -> DCMatrix:
    matrix = DCMatrix.from_json(payload)
    if not matrix.is_square:
        raise ParseError(f"Expected a square matrix, got {matrix.rows}x{matrix.cols}")
    return matrix


def load_candidate(payload: Any) -> Tuple[DCMatrix, DualComplex, DCVector]:
    """Decode {"matrix": ..., "lambda": [re_s, im_s, re_d, im_d], "vector": ...}."""
    if not isinstance(payload, dict) or not {"matrix", "lambda", "vector"} <= set(payload):
        raise ParseError("verify input needs 'matrix', 'lambda' and 'vector'")
    matrix = load_matrix(payload["matrix"])
    vector = DCVector.from_json(payload["vector"])
    if vector.dim != matrix.rows:
        raise ParseError(f"Vector of length {vector.dim} for a {matrix.rows}x{matrix.rows} matrix")
    return matrix, DualComplex.from_json(payload["lambda"]), vector


def _dispatch(verb: str, payload: Any) -> Tuple[int, Dict[str, Any]]:
    if verb == "verify":
        matrix, lam, vector = load_candidate(payload)
        check = verify_eigenpair_detail(matrix, lam, vector)
        return (EXIT_OK if check.ok else EXIT_NEGATIVE), verify_payload(check)

    matrix = load_matrix(payload)
    if verb == "eig":
        report = eig_all(matrix)
        return (EXIT_NEGATIVE if report.regime is Regime.NONE else EXIT_OK), eig_payload(report)
    if verb == "jordan":
        try:
            return EXIT_OK, jordan_payload(jordan_form(matrix))
        except NoJordanForm as e:
            logger.info("%s", e)
            report = eig_all(matrix)
            code = EXIT_NEGATIVE if report.regime is Regime.NONE else EXIT_OK
            return code, jordan_payload(None, report, note=str(e))
    if verb == "diag":
        result = is_diagonalizable(matrix)
        return (EXIT_OK if result.diagonalizable else EXIT_NEGATIVE), diag_payload(result)
    if verb == "invert":
        return EXIT_OK, invert_payload(mat_inverse(matrix))
    if verb == "hermitian":
        return EXIT_OK, hermitian_payload(hermitian_eig(matrix))
    raise ValueError(f"Unknown verb {verb!r}")


def run(cmd: Command) -> Tuple[int, Dict[str, Any]]:
    """
    Execute one command.

    Returns:
        (exit status, report payload). Status 0 is success, 1 a mathematical
        negative, 2 an input error and 3 a numerical failure.
    """
    try:
        payload = load_payload(cmd.input_path)
        with use_tolerances(abs=cmd.tol_abs, rank=cmd.tol_rank, cluster=cmd.tol_cluster):
            return _dispatch(cmd.verb, payload)
    except (ParseError, ConfigError) as e:
        logger.error("Input error: %s", e)
        return EXIT_INPUT, error_payload(cmd.verb, e)
    except MathematicalNegative as e:
        return EXIT_NEGATIVE, error_payload(cmd.verb, e)
    except DualComplexError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_NUMERICAL, error_payload(cmd.verb, e)
    except (np.linalg.LinAlgError, ArithmeticError) as e:
        logger.error("Numerical failure in %s: %s", cmd.verb, e)
        return EXIT_NUMERICAL, error_payload(cmd.verb, e)


def emit(payload: Dict[str, Any], output_format: str, out: Optional[Path] = None) -> None:
    if output_format == "json":
        text = dumps(payload)
        if out is None:
            sys.stdout.write(text)
        else:
            Path(out).write_text(text, encoding="utf-8")
        return
    if out is None:
        render_text(payload, console)
        return
    with open(out, "w", encoding="utf-8") as fh:
        render_text(payload, Console(file=fh, width=120, color_system=None))


def setup_logging(verbose: bool) -> None:
    handler = RichHandler(console=Console(stderr=True), show_path=False)
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[handler],
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dual-complex-eigen",
        description="Eigenvalues, Jordan forms and diagonalizability of dual complex matrices",
    )
    parser.add_argument("verb", choices=VERBS, help="Operation to run")
    parser.add_argument("input", type=Path, help="JSON file holding the matrix (or verify candidate)")
    parser.add_argument("--format", "-f", choices=["text", "json"], default="text", help="Report format")
    parser.add_argument("--tol-abs", type=float, help="Absolute tolerance for scalar comparisons")
    parser.add_argument("--tol-rank", type=float, help="Relative singular value cutoff for rank decisions")
    parser.add_argument("--tol-cluster", type=float, help="Relative radius for merging close eigenvalues")
    parser.add_argument("--out", "-o", type=Path, help="Write the report to this file instead of stdout")
    parser.add_argument("--verbose", "-v", action="store_true", help="Log solver decisions")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the Dual Complex Eigen Toolkit"""
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    cmd = Command(
        verb=args.verb,
        input_path=args.input,
        output_format=args.format,
        tol_abs=args.tol_abs,
        tol_rank=args.tol_rank,
        tol_cluster=args.tol_cluster,
        out=args.out,
    )
    if cmd.output_format == "text" and cmd.out is None:
        console.print(
            Panel.fit(
                f"[bold green]Dual Complex Eigen Toolkit[/bold green] · {cmd.verb} {cmd.input_path}",
                border_style="blue",
            )
        )
    code, payload = run(cmd)
    emit(payload, cmd.output_format, cmd.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
