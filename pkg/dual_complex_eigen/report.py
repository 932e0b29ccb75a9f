"""
Rendering of solver results.

Every result is first turned into a plain JSON payload; the json format dumps
it with sorted keys, the text format draws rich tables from the same payload,
so both modes always report the same thing.
"""

import json
from typing import Any, Dict, List, Optional

from rich.box import ROUNDED
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from dual_complex_eigen.dcmat import DCMatrix, EigenpairCheck
from dual_complex_eigen.dcnum import DualComplex, DualNumber, format_complex
from dual_complex_eigen.eigsolve import (
    Diagonalization,
    EigenReport,
    FiniteEigenvalues,
    HermitianEigen,
    InfiniteFamily,
    NoEigenvalue,
)
from dual_complex_eigen.jordan import DualJordanForm

# Define status constants
STATUS_SUCCESS = "✅ SUCCESS"
STATUS_WARNING = "⚠️ WARNING"
STATUS_ERROR = "❌ ERROR"
STATUS_INFO = "ℹ️ INFO"


def _complex(z: complex) -> List[float]:
    return [float(z.real), float(z.imag)]


def _structure(c) -> Dict[str, Any]:
    return c.structure.to_json()


def eig_payload(report: EigenReport) -> Dict[str, Any]:
    classes = []
    for c in report.classes:
        entry: Dict[str, Any] = {
            "lambda_s": _complex(c.lambda_s),
            "blocks": _structure(c),
            "classification": c.regime.value,
        }
        if isinstance(c, FiniteEigenvalues):
            entry["eigenpairs"] = [p.to_json() for p in c.eigenpairs]
        elif isinstance(c, NoEigenvalue):
            entry["witness"] = {"determinant": _complex(c.determinant), "sigma_min": c.sigma_min}
        elif isinstance(c, InfiniteFamily):
            entry["lambda_d"] = "free"
            entry["representative"] = c.representative.to_json()
        classes.append(entry)
    return {
        "verb": "eig",
        "n": report.n,
        "summary": {
            "finite_count": report.finite_count,
            "any_infinite": report.any_infinite,
            "any_none": report.any_none,
            "regime": report.regime.value,
        },
        "classes": classes,
    }


def jordan_payload(
    form: Optional[DualJordanForm], fallback: Optional[EigenReport] = None, note: str = ""
) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"verb": "jordan", "note": note}
    if form is not None:
        payload["form"] = form.to_json()
    if fallback is not None:
        payload["eigen"] = eig_payload(fallback)
    return payload


def diag_payload(result: Diagonalization) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "verb": "diag",
        "diagonalizable": result.diagonalizable,
        "reason": result.reason,
        "eigen": eig_payload(result.report),
    }
    if result.diagonalizable:
        payload["P"] = result.P.to_json()
        payload["D"] = result.D.to_json()
        payload["residual"] = result.residual
    return payload


def invert_payload(inverse: DCMatrix) -> Dict[str, Any]:
    return {"verb": "invert", "inverse": inverse.to_json()}


def verify_payload(check: EigenpairCheck) -> Dict[str, Any]:
    return {
        "verb": "verify",
        "eigenpair": check.ok,
        "appreciable": check.appreciable,
        "standard_residual": check.standard_residual,
        "dual_residual": check.dual_residual,
        "threshold": check.threshold,
        "detail": check.describe(),
    }


def hermitian_payload(result: HermitianEigen) -> Dict[str, Any]:
    return {
        "verb": "hermitian",
        "eigenvalues": [lam.to_json() for lam in result.eigenvalues],
        "eigenvectors": [x.to_json() for x in result.eigenvectors],
        "definiteness": result.definiteness.value,
    }


def error_payload(verb: str, error: Exception) -> Dict[str, Any]:
    return {"verb": verb, "error": type(error).__name__, "message": str(error)}


def dumps(payload: Dict[str, Any]) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _dual(values: List[float]) -> str:
    return str(DualComplex.from_json(values))


def _matrix_table(title: str, payload: Dict[str, Any]) -> Table:
    matrix = DCMatrix.from_json(payload)
    table = Table(title=title, box=ROUNDED, show_header=False)
    for _ in range(matrix.cols):
        table.add_column(justify="right")
    for i in range(matrix.rows):
        table.add_row(*(str(matrix.entry(i, j)) for j in range(matrix.cols)))
    return table


def _vector_text(payload: Dict[str, Any]) -> str:
    std = [format_complex(complex(re, im)) for re, im in payload["standard"]]
    dual = [format_complex(complex(re, im)) for re, im in payload["dual"]]
    return f"[{', '.join(std)}] + [{', '.join(dual)}]·eps"


def _render_eig(payload: Dict[str, Any], console: Console) -> None:
    summary = payload["summary"]
    table = Table(title="Eigenvalue Classification", box=ROUNDED)
    table.add_column("λ_s", style="cyan")
    table.add_column("Blocks", style="dim")
    table.add_column("Regime", style="green")
    table.add_column("Details")
    for entry in payload["classes"]:
        lambda_s = format_complex(complex(*entry["lambda_s"]))
        blocks = entry["blocks"]
        shape = f"n0={blocks['n0']}" + "".join(f", J{s}" for s in blocks["sizes"])
        if entry["classification"] == "finite":
            details = "\n".join(
                f"{_dual(p['lambda'])}  x = {_vector_text(p['vector'])}" for p in entry["eigenpairs"]
            )
        elif entry["classification"] == "none":
            witness = entry["witness"]
            details = f"no eigenvalue: det M = {format_complex(complex(*witness['determinant']))}"
        else:
            details = f"{lambda_s} + λ_d·eps for every λ_d"
        table.add_row(lambda_s, shape, entry["classification"], details)
    console.print(table)

    if summary["regime"] == "none":
        status = f"{STATUS_WARNING}: no eigenvalue"
    elif summary["any_infinite"]:
        status = f"{STATUS_SUCCESS}: infinitely many eigenvalues"
    else:
        status = f"{STATUS_SUCCESS}: {summary['finite_count']} eigenvalue(s)"
    console.print(Panel.fit(status, border_style="blue"))


def _render_hermitian(payload: Dict[str, Any], console: Console) -> None:
    table = Table(title="Hermitian Eigenvalues", box=ROUNDED)
    table.add_column("#", style="cyan")
    table.add_column("λ", style="green")
    table.add_column("Eigenvector")
    for k, (lam, x) in enumerate(zip(payload["eigenvalues"], payload["eigenvectors"]), start=1):
        table.add_row(str(k), str(DualNumber.from_json(lam)), _vector_text(x))
    console.print(table)
    console.print(Panel.fit(f"{STATUS_INFO}: {payload['definiteness']}", border_style="blue"))


def _render_jordan(payload: Dict[str, Any], console: Console) -> None:
    if "form" in payload:
        form = payload["form"]
        console.print(f"[bold]Jordan form[/bold] ({form['kind']}), residual {form['residual']:.3e}")
        console.print(_matrix_table("J", form["J"]))
        console.print(_matrix_table("P", form["P"]))
        for pair in form["eigenpairs"]:
            console.print(f"  eigenvalue {_dual(pair['lambda'])}  x = {_vector_text(pair['vector'])}")
    if payload.get("note"):
        console.print(f"[yellow]{payload['note']}[/yellow]")
    if "eigen" in payload:
        _render_eig(payload["eigen"], console)


def _render_diag(payload: Dict[str, Any], console: Console) -> None:
    _render_eig(payload["eigen"], console)
    if payload["diagonalizable"]:
        console.print(_matrix_table("P", payload["P"]))
        console.print(_matrix_table("D", payload["D"]))
        status = f"{STATUS_SUCCESS}: diagonalizable (residual {payload['residual']:.3e})"
    else:
        status = f"{STATUS_WARNING}: not diagonalizable ({payload['reason']})"
    console.print(Panel.fit(status, border_style="blue"))


def _render_verify(payload: Dict[str, Any], console: Console) -> None:
    status = STATUS_SUCCESS if payload["eigenpair"] else STATUS_WARNING
    console.print(Panel.fit(f"{status}: {payload['detail']}", border_style="blue"))


def render_text(payload: Dict[str, Any], console: Console) -> None:
    """Print a payload as rich tables and panels."""
    verb = payload["verb"]
    if "error" in payload:
        message = f"{STATUS_ERROR}: {payload['error']}: {payload['message']}"
        console.print(Panel.fit(message, border_style="red"))
    elif verb == "eig":
        _render_eig(payload, console)
    elif verb == "jordan":
        _render_jordan(payload, console)
    elif verb == "diag":
        _render_diag(payload, console)
    elif verb == "invert":
        console.print(_matrix_table("Inverse", payload["inverse"]))
    elif verb == "verify":
        _render_verify(payload, console)
    elif verb == "hermitian":
        _render_hermitian(payload, console)
    else:
        raise ValueError(f"Unknown verb {verb!r}")
