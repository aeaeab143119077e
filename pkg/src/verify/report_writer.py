"""Serialise verification reports to JSON or text."""

import json
from pathlib import Path
from typing import Iterable, Union

from utils.constants import DEFAULT_FORMAT, JSON_INDENT, OUTPUT_FORMATS
from utils.data_structures import VerificationReport
from utils.errors import ParseError
from utils.logging_config import get_logger
from visualization.text_formatter import TextFormatter

logger = get_logger(__name__)


def reports_to_json(reports: Iterable[VerificationReport]) -> str:
    """JSON list of report objects; key order is fixed by to_dict."""
    return json.dumps([report.to_dict() for report in reports], indent=JSON_INDENT, ensure_ascii=False)


def reports_to_text(reports: Iterable[VerificationReport]) -> str:
    return TextFormatter().format_reports(reports)


def render_reports(reports: Iterable[VerificationReport], fmt: str = DEFAULT_FORMAT) -> str:
    """
    Raises:
        ParseError: Unknown format
    """
    if fmt not in OUTPUT_FORMATS:
        raise ParseError(f"unknown output format {fmt!r} (choose from {', '.join(OUTPUT_FORMATS)})")
    reports = list(reports)
    return reports_to_json(reports) if fmt == 'json' else reports_to_text(reports)


def write_report(reports: Iterable[VerificationReport], path: Union[str, Path],
                 fmt: str = DEFAULT_FORMAT) -> Path:
    """Write reports to path, creating parent directories.

    Returns:
        The path written
    """
    text = render_reports(reports, fmt)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text + "\n")
    logger.info(f"report written to {path} ({fmt})")
    return path
