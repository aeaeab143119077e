"""TextFormatter - plain-text rendering of traces, reports and point lists."""

from typing import Iterable, List, Sequence

from utils.constants import (
    ASCII_BOX_OF_I,
    ASCII_EMPTY_BOX,
    ASCII_SHADED_BOX,
    ASCII_SHADED_BOX_OF_I,
)
from utils.data_structures import (
    DeletionRun,
    Permutation,
    RowStrictTableau,
    TwoColumnTraceStep,
    VerificationReport,
    Witness,
)
from utils.logging_config import get_logger
from weyl.factorization import reduced_word

logger = get_logger(__name__)

CASE_NAMES = {1: 'case 1 (commute)', 2: 'case 2 (glue)', 3: 'case 3 (absorb)', 4: 'case 4 (shift)'}


class TextFormatter:
    """Formats library values for terminal output."""

    def __init__(self, max_line_length: int = 100):
        self.max_line_length = max_line_length

    def truncate(self, text: str) -> str:
        """Cuts a progress line to max_line_length, ending with an ellipsis.

        Report records (witnesses, point lists) are never cut.
        """
        if len(text) <= self.max_line_length:
            return text
        return text[:self.max_line_length - 3] + '...'

    def diagram_lines(self, step: TwoColumnTraceStep, rewritten: bool = False) -> List[str]:
        """One line per row of lambda[i] (or lambda'[i]), boxes marked by role.

        The marked box is the last box of the row holding i; shading only
        applies to the original shape.
        """
        shape = step.rewritten_shape if rewritten else step.shape
        box_row = step.rewritten_box_row if rewritten else step.box_row
        shaded = () if rewritten else step.shaded_rows
        lines = []
        for r, length in enumerate(shape.rows, start=1):
            cells = []
            for c in range(1, length + 1):
                is_box_of_i = r == box_row and c == length
                if r in shaded:
                    cells.append(ASCII_SHADED_BOX_OF_I if is_box_of_i else ASCII_SHADED_BOX)
                else:
                    cells.append(ASCII_BOX_OF_I if is_box_of_i else ASCII_EMPTY_BOX)
            label = 'e' if r == 1 else f"s{step.index - r + 1}"
            lines.append(f"{label:>4} " + ''.join(cells))
        return lines

    def format_trace(self, steps: Sequence[TwoColumnTraceStep]) -> str:
        if not steps:
            return "(no star to propagate)"
        blocks = []
        for step in steps:
            header = (f"i={step.index}  {CASE_NAMES.get(step.case, step.case)}  "
                      f"c={step.c}  c'={step.c_prime}")
            left = self.diagram_lines(step)
            right = self.diagram_lines(step, rewritten=True)
            width = max(len(line) for line in left)
            height = max(len(left), len(right))
            left += [''] * (height - len(left))
            right += [''] * (height - len(right))
            body = [f"{a:<{width}}   {b}".rstrip() for a, b in zip(left, right)]
            blocks.append("\n".join([header] + body))
        return "\n\n".join(blocks)

    def format_run(self, run: DeletionRun) -> str:
        """Intermediate words of a deletion, one per step."""
        lines = [f"delete s{run.letter} (position {run.position} of w_{run.string_index}) "
                 f"from {run.original}"]
        for state in run.states:
            star = f"  star={state.star}" if not state.star.is_empty else ""
            lines.append(self.truncate(f"  i={state.index}: {state.word()}{star}"))
        lines.append(f"  {run.termination} -> {run.result}")
        return "\n".join(lines)

    def format_witness(self, witness: Witness) -> str:
        parts = [f"{witness.kind}: {witness.permutation} = {witness.word}",
                 f"ell=({','.join(map(str, witness.ell))})"]
        if witness.source is not None:
            parts.append(f"below {witness.source}")
        if witness.site is not None:
            parts.append(f"at w_{witness.site[0]} position {witness.site[1]}")
        return "  ".join(parts)

    def format_report(self, report: VerificationReport) -> str:
        title = f"({report.shape})"
        if report.versus is not None:
            title += f" >= ({report.versus})"
        lines = [f"{title} {report.claim}: {report.verdict}"]
        for name, poly in report.polynomials.items():
            lines.append(f"  {name}: {poly}")
        for witness in report.witnesses:
            lines.append("  " + self.format_witness(witness))
        return "\n".join(lines)

    def format_reports(self, reports: Iterable[VerificationReport]) -> str:
        return "\n".join(self.format_report(report) for report in reports)

    def format_points(self, points: dict) -> str:
        """Permutation -> tableau map as aligned columns."""
        rows = [(str(w), str(reduced_word(w)), str(tableau)) for w, tableau in points.items()]
        if not rows:
            return ""
        first = max(len(row[0]) for row in rows)
        second = max(len(row[1]) for row in rows)
        return "\n".join(f"{a:<{first}}  {b:<{second}}  {c}" for a, b, c in rows)

    def format_tableaux(self, tableaux: Iterable[RowStrictTableau]) -> str:
        return "\n".join(str(t) for t in tableaux)


def render_trace_ascii(steps: Sequence[TwoColumnTraceStep]) -> str:
    """lambda[i] next to lambda'[i] for every step; [#] shaded, [*] box of i."""
    return TextFormatter().format_trace(steps)


def format_permutation(w: Permutation) -> str:
    return f"{w}  {reduced_word(w)}"
