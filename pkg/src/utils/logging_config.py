"""
Centralizované nastavení logování pro schubert-points

Dva soubory ve složce nastavení:
    schubert-points.log - běžný log všech modulů
    verdicts.log        - jeden řádek za každý ověřený výrok (verify, scan)

Scan s více procesy předává nastavení do workerů přes init_worker_logging.
"""
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Tuple

from utils.constants import (
    LOG_FILE_NAME,
    LOG_FORMAT,
    LOG_DATE_FORMAT,
    LOGGER_NAME,
    SETTINGS_DIR_NAME,
    VERDICT_FORMAT,
    VERDICT_LOG_FILE_NAME,
    VERDICT_LOGGER_NAME,
)


def get_log_file_path(file_name: str = LOG_FILE_NAME) -> Path:
    """
    Určí cestu k log souboru podle OS.

    Args:
        file_name: Název souboru ve složce ~/.schubert-points/

    Returns:
        Path k log souboru, při chybě v aktuální složce
    """
    if os.name == 'nt':  # Windows
        config_dir = Path(os.environ.get('USERPROFILE', '~')) / SETTINGS_DIR_NAME
    else:  # Linux/Mac
        config_dir = Path.home() / SETTINGS_DIR_NAME

    try:
        config_dir.mkdir(parents=True, exist_ok=True)
    except Exception:
        return Path(file_name)

    return config_dir / file_name


def level_from_name(name: Optional[str], default: int = logging.WARNING) -> int:
    """'DEBUG' / 'info' / ... na číselnou úroveň; neznámé jméno dá default."""
    if not name:
        return default
    level = logging.getLevelName(str(name).upper())
    return level if isinstance(level, int) else default


def _file_handler(path: Path, level: int, formatter: logging.Formatter) -> Optional[logging.FileHandler]:
    try:
        handler = logging.FileHandler(path, encoding='utf-8')
    except Exception as e:
        print(f"Warning: Nelze vytvořit log soubor {path}: {e}", file=sys.stderr)
        return None
    handler.setLevel(level)
    handler.setFormatter(formatter)
    return handler


def _setup_verdict_log(path: Path):
    """Verdikty jdou jen do vlastního souboru, ne do hlavního logu."""
    verdicts = logging.getLogger(VERDICT_LOGGER_NAME)
    verdicts.setLevel(logging.INFO)
    verdicts.propagate = False
    if verdicts.handlers:
        return
    handler = _file_handler(path, logging.INFO, logging.Formatter(VERDICT_FORMAT, datefmt=LOG_DATE_FORMAT))
    if handler is not None:
        verdicts.addHandler(handler)


def setup_logging(log_file: Optional[str] = None, level: int = logging.WARNING) -> logging.Logger:
    """
    Nastaví logování pro celý balíček.

    Args:
        log_file: Cesta k log souboru (pokud None, použije se ~/.schubert-points/schubert-points.log).
            Log verdiktů vzniká ve stejné složce.
        level: Úroveň logování (logging.DEBUG, INFO, WARNING, ERROR)

    Returns:
        Kořenový logger balíčku
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)

    # Opakované volání (--verbose, worker po forku) - jen nová úroveň
    if logger.handlers:
        for handler in logger.handlers:
            if isinstance(handler, logging.FileHandler):
                handler.setLevel(level)
        return logger

    log_file_path = get_log_file_path() if log_file is None else Path(log_file)
    formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

    file_handler = _file_handler(log_file_path, level, formatter)
    if file_handler is not None:
        logger.addHandler(file_handler)
        _setup_verdict_log(log_file_path.with_name(VERDICT_LOG_FILE_NAME))

    # Console handler - pouze ERROR a výše, výstup příkazů jde na stdout
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.ERROR)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    return logger


def worker_logging_args() -> Tuple[int, Optional[str]]:
    """(úroveň, cesta k logu) aktuálního procesu pro initargs process poolu.

    Cesta je None, když logování do souboru není zapnuté.
    """
    logger = logging.getLogger(LOGGER_NAME)
    for handler in logger.handlers:
        if isinstance(handler, logging.FileHandler):
            return logger.level, handler.baseFilename
    return logger.level, None


def init_worker_logging(level: int, log_file: Optional[str]):
    """Initializer workeru: stejné soubory jako hlavní proces (i při spawn)."""
    if log_file is None:
        return
    setup_logging(log_file=log_file, level=level)


def get_logger(name: str) -> logging.Logger:
    """
    Získá logger pro daný modul.

    Args:
        name: Název modulu (např. __name__)

    Returns:
        Logger instance
    """
    return logging.getLogger(f'{LOGGER_NAME}.{name}')


def get_verdict_logger() -> logging.Logger:
    """Logger pro verdikty výroků (verify, scan)."""
    return logging.getLogger(VERDICT_LOGGER_NAME)
