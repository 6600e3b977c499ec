"""LaTeX longtable generation for a range of Noll indices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, TextIO

from .indexing import _check_j, j_to_nm
from .symbolic import emit_normalization, emit_unnormalized_zernike

DEFAULT_CAPTION = r"Zernike Circular Polynomials $Z_j(\rho,\theta)=N^m_n R^m_n(\rho)\Theta_m(\theta)$"
DEFAULT_ATTRIB_NAMES = (
    "$j$",
    "$n$",
    "$m$",
    "$N^m_n$",
    r"$R^m_n(\rho)\Theta_m(\theta)$",
)
DEFAULT_ALIGN = r"ccrcp{0.55\textwidth}"
DEFAULT_TITLE = "Table of Zernike Circular Polynomials"


@dataclass(frozen=True)
class TableSpec:
    j_min: int = 1
    j_max: int = 465
    caption: str = DEFAULT_CAPTION
    caption_continue: str | None = None
    attrib_names: tuple[str, ...] = DEFAULT_ATTRIB_NAMES
    align_ctrl: str = DEFAULT_ALIGN
    n_cols: int = 5

    def __post_init__(self):
        if self.n_cols != len(self.attrib_names):
            raise ValueError(f"n_cols={self.n_cols} but {len(self.attrib_names)} attribute names")
        _check_j(self.j_min)
        if self.j_min > self.j_max:
            raise ValueError(f"empty range: j_min={self.j_min} > j_max={self.j_max}")
        if self.caption_continue is None:
            object.__setattr__(self, "caption_continue", f"{self.caption} (continued)")

    @property
    def n_rows(self) -> int:
        return self.j_max - self.j_min + 1


def gen_table_line(sink: TextIO, j: int) -> None:
    """One row ``j & n & m & N & R*Theta`` terminated by ``\\\\``."""
    n, m = j_to_nm(j)
    sink.write(f" ${j}$  & ${n}$  & ${m}$  &$")
    emit_normalization(sink, (n, m))
    sink.write("$  &$")
    emit_unnormalized_zernike(sink, (n, m))
    sink.write("$\\\\\n")


def _hline(sink):
    sink.write("\\hline\n")


def _head(sink, spec):
    sink.write(" & ".join(spec.attrib_names) + " \\\\\n")


def gen_long_table(
    sink: TextIO,
    spec: TableSpec,
    line_writer: Callable[[TextIO, int], None] = gen_table_line,
) -> None:
    """Write the longtable environment with first/continued heads and feet.

    ``line_writer(sink, i)`` produces the row for index i and may be swapped
    out for tables other than the Zernike one.
    """
    sink.write("\\begin{center}\n")
    sink.write(f"\\begin{{longtable}}{{{spec.align_ctrl}}}\n")
    sink.write(f"\\caption{{{spec.caption}}} \\\\\n")
    _hline(sink)
    _head(sink, spec)
    _hline(sink)
    sink.write("\\endfirsthead\n")
    sink.write(f"\\caption[]{{{spec.caption_continue}}} \\\\\n")
    _hline(sink)
    _head(sink, spec)
    _hline(sink)
    sink.write("\\endhead\n")
    _hline(sink)
    sink.write("\\endfoot\n")
    _hline(sink)
    sink.write("\\endlastfoot\n")
    for i in range(spec.j_min, spec.j_max + 1):
        line_writer(sink, i)
    _hline(sink)
    sink.write("\\end{longtable}\n")
    sink.write("\\end{center}\n")


def gen_main_body(sink: TextIO, spec: TableSpec) -> None:
    # TableSpec rejects empty ranges at construction, before anything is written
    sink.write("\\begin{document}\n\n")
    sink.write("\\maketitle\n\n")
    sink.write("\n")
    gen_long_table(sink, spec)
    sink.write("\n")
    sink.write("\\end{document}\n")


def gen_preamble(sink: TextIO, title: str = DEFAULT_TITLE, author: str = "", date: str = "") -> None:
    sink.write("\\documentclass[11pt,a4paper]{article}\n")
    sink.write("\\usepackage{longtable}\n")
    sink.write("\n")
    sink.write(f"\\title{{{title}}}\n")
    sink.write(f"\\author{{{author}}}\n")
    sink.write(f"\\date{{{date}}}\n")
    sink.write("\n")


def gen_document(sink: TextIO, spec: TableSpec, standalone: bool = True) -> None:
    """Standalone file (preamble + body) or only the longtable fragment."""
    if standalone:
        gen_preamble(sink)
        gen_main_body(sink, spec)
    else:
        gen_long_table(sink, spec)
