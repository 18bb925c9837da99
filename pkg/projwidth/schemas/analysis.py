from decimal import Decimal
from typing import Optional, Union

from pydantic import BaseModel

CSV_VERSION_LINE = "# projwidth-csv v1"
CSV_COLUMNS = [
    "family", "k", "n", "m",
    "edge_width", "ew_bound", "face_width", "fw_bound",
    "oct_min", "alpha",
    "single_edge_size", "single_edge_bound",
    "all_checks_pass",
]

OracleCell = Union[int, str, None]


class AnalysisRow(BaseModel):
    family: str
    k: Optional[int] = None
    n: int
    m: int
    edge_width: Optional[int] = None
    ew_bound: Decimal
    face_width: Optional[int] = None
    fw_bound: Decimal
    oct_min: OracleCell = None
    alpha: OracleCell = None
    single_edge_size: Optional[int] = None
    single_edge_bound: Decimal
    all_checks_pass: bool
    embedded: bool = True

    def csv_cells(self) -> list:
        def cell(value):
            if value is None:
                return ""
            if isinstance(value, bool):
                return "true" if value else "false"
            return str(value)

        def width(value):
            return "inf" if value is None else str(value)

        return [
            self.family,
            cell(self.k),
            str(self.n),
            str(self.m),
            width(self.edge_width),
            str(self.ew_bound),
            width(self.face_width) if self.embedded else "",
            str(self.fw_bound),
            cell(self.oct_min),
            cell(self.alpha),
            cell(self.single_edge_size),
            str(self.single_edge_bound),
            cell(self.all_checks_pass),
        ]

    def summary(self) -> str:
        ew = "inf" if self.edge_width is None else self.edge_width
        fw = "inf" if self.face_width is None else self.face_width
        if not self.embedded:
            fw = "n/a"
        verdict = "PASS" if self.all_checks_pass else "FAIL"
        return (
            f"{self.family}: n={self.n} m={self.m} edge-width={ew} (bound {self.ew_bound}) "
            f"face-width={fw} (bound {self.fw_bound}) {verdict}"
        )
