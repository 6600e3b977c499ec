import re

import pytest

# Rows of the reference table, copied verbatim (j = 1..15, 46, 47, 464, 465).
GOLDEN_ROWS = r"""
 $1$  & $0$  & $0$  &$\sqrt{1}$  &$1 $\\
 $2$  & $1$  & $-1$  &$\sqrt{4}$  &$\rho \cos(\theta)$\\
 $3$  & $1$  & $1$  &$\sqrt{4}$  &$\rho \sin(\theta)$\\
 $4$  & $2$  & $0$  &$\sqrt{3}$  &$2\rho^{2} -1 $\\
 $5$  & $2$  & $-2$  &$\sqrt{6}$  &$\rho^{2} \sin(2\theta)$\\
 $6$  & $2$  & $2$  &$\sqrt{6}$  &$\rho^{2} \cos(2\theta)$\\
 $7$  & $3$  & $-1$  &$\sqrt{8}$  &$(3\rho^{3} -2\rho )\sin(\theta)$\\
 $8$  & $3$  & $1$  &$\sqrt{8}$  &$(3\rho^{3} -2\rho )\cos(\theta)$\\
 $9$  & $3$  & $-3$  &$\sqrt{8}$  &$\rho^{3} \sin(3\theta)$\\
 $10$  & $3$  & $3$  &$\sqrt{8}$  &$\rho^{3} \cos(3\theta)$\\
 $11$  & $4$  & $0$  &$\sqrt{5}$  &$6\rho^{4} -6\rho^{2} +1 $\\
 $12$  & $4$  & $-2$  &$\sqrt{10}$  &$(4\rho^{4} -3\rho^{2} )\cos(2\theta)$\\
 $13$  & $4$  & $2$  &$\sqrt{10}$  &$(4\rho^{4} -3\rho^{2} )\sin(2\theta)$\\
 $14$  & $4$  & $-4$  &$\sqrt{10}$  &$\rho^{4} \cos(4\theta)$\\
 $15$  & $4$  & $4$  &$\sqrt{10}$  &$\rho^{4} \sin(4\theta)$\\
$46$  & $9$  & $-1$  &$\sqrt{20}$  &$(126\rho^{9} -280\rho^{7} +210\rho^{5} -60\rho^{3} +5\rho )\cos(\theta)$\\
 $47$  & $9$  & $1$  &$\sqrt{20}$  &$(126\rho^{9} -280\rho^{7} +210\rho^{5} -60\rho^{3} +5\rho )\sin(\theta)$\\
  $464$  & $29$  & $-29$  &$\sqrt{60}$  &$\rho^{29} \cos(29\theta)$\\
 $465$  & $29$  & $29$  &$\sqrt{60}$  &$\rho^{29} \sin(29\theta)$\\
"""


def normalize_ws(text):
    return re.sub(r"\s+", " ", text).strip()


def split_row(row):
    """Cells of a table row with '$' delimiters and surrounding whitespace removed."""
    row = row.strip()
    if row.endswith("\\\\"):
        row = row[:-2]
    cells = []
    for cell in row.split("&"):
        cell = cell.strip()
        assert cell.startswith("$") and cell.endswith("$"), cell
        cells.append(normalize_ws(cell[1:-1]))
    return cells


def golden_cells():
    out = {}
    for line in GOLDEN_ROWS.strip("\n").splitlines():
        cells = split_row(line)
        out[int(cells[0])] = cells
    return out


GOLDEN = golden_cells()


@pytest.fixture(scope="session")
def golden():
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(RESULTS):
        ok, detail = RESULTS[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
