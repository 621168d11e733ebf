"""Measurement reports for a single state"""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from rich.table import Table

from genbell.core.state import PureState
from genbell.core.io import format_float
from genbell.entanglement import f_value, mw_measure, schmidt_spectra, is_product

SCHMIDT_MAX_QUBITS = 12
"""Schmidt spectra are only reported up to this many qubits"""

Q_TOL = 1e-10
F_TOL = 1e-12


@dataclass
class ReportRecord:
    """Everything measured on one state"""

    descriptor: str
    n: int
    q: float
    f: complex
    schmidt: Dict[int, List[float]] = field(default_factory=dict)
    product: Optional[bool] = None
    product_cut: Optional[int] = None

    def __post_init__(self) -> None:
        if not -Q_TOL <= self.q <= 1 + Q_TOL:
            raise ValueError(f"Q = {self.q!r} is outside [0, 1]")
        if abs(self.f) > 1 + F_TOL:
            raise ValueError(f"|F| = {abs(self.f)!r} is above 1")

    @classmethod
    def measure(cls, s: PureState, descriptor: str) -> ReportRecord:
        """Measure a state

        Args:
            s (PureState): State on n >= 2 qubits
            descriptor (str): How the state was obtained

        Returns:
            ReportRecord: The report
        """
        record = cls(descriptor, s.n, mw_measure(s), f_value(s))
        if s.n <= SCHMIDT_MAX_QUBITS:
            record.schmidt = {data.cut: [float(c) for c in data.coefficients] for data in schmidt_spectra(s)}
            verdict = is_product(s)
            record.product = verdict.is_product
            record.product_cut = verdict.cut
        return record

    def verdicts(self) -> Dict[str, str]:
        out = {
            "maximal": _kv_bool(abs(self.q - 1.0) <= Q_TOL),
            "witness_maximal": _kv_bool(abs(abs(self.f) - 1.0) <= F_TOL),
        }
        if self.product is not None:
            out["product"] = _kv_bool(self.product)
        if self.product_cut is not None:
            out["product_cut"] = str(self.product_cut)
        return out

    def to_kv(self) -> List[str]:
        """Flat key=value records, one per line

        Returns:
            List[str]: The summary line followed by one line per Schmidt cut
        """
        fields = {
            "record": "measure",
            "state": _kv_token(self.descriptor),
            "n": str(self.n),
            "q": format_float(self.q),
            "f_re": format_float(self.f.real),
            "f_im": format_float(self.f.imag),
            "f_abs": format_float(abs(self.f)),
        }
        fields.update(self.verdicts())
        lines = [" ".join(f"{k}={v}" for k, v in fields.items())]
        for cut, coeffs in self.schmidt.items():
            spectrum = ",".join(format_float(c) for c in coeffs)
            lines.append(f"record=schmidt state={_kv_token(self.descriptor)} cut={cut} coefficients={spectrum}")
        return lines

    def to_table(self) -> Table:
        table = Table(title=self.descriptor, show_header=True)
        table.add_column("quantity")
        table.add_column("value")
        table.add_row("qubits", str(self.n))
        table.add_row("Q", format_float(self.q))
        table.add_row("F", f"{format_float(self.f.real)} {format_float(self.f.imag)}i")
        table.add_row("|F|", format_float(abs(self.f)))
        for k, v in self.verdicts().items():
            table.add_row(k, v)
        for cut, coeffs in self.schmidt.items():
            table.add_row(f"schmidt cut {cut}", " ".join(f"{c:.6g}" for c in coeffs))
        return table


def _kv_bool(b: bool) -> str:
    return "true" if b else "false"


def _kv_token(s: str) -> str:
    return "_".join(s.split())
