#!/usr/bin/env python3

import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli.arguments import build_parser
from cli.commands import EXIT_ERROR, run_command
from utils.constants import DEBUG_ENV_VAR
from utils.errors import SchubertPointsError
from utils.logging_config import get_logger, level_from_name, setup_logging
from utils.settings_manager import get_settings_manager

logger = get_logger(__name__)


def configure_logging(verbose: bool):
    """
    Zapne logování, pokud není vypnuto proměnnou SCHUBERT_POINTS_NOLOG=1.

    Úroveň: --verbose > log_level v nastavení > WARNING.
    """
    if os.environ.get(DEBUG_ENV_VAR) == '1':
        return
    if verbose:
        level = logging.DEBUG
    else:
        try:
            level = level_from_name(get_settings_manager().get('log_level'))
        except Exception:
            level = logging.WARNING
    setup_logging(level=level)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse sám ukončí s kódem 2 při chybě použití

    configure_logging(args.verbose)
    logger.debug(f"command {args.command}: {vars(args)}")

    try:
        return run_command(args)
    except SchubertPointsError as e:
        logger.warning(f"{args.command} failed: {e}")
        print(f"schubert-points: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except KeyboardInterrupt:
        print("\nPřerušeno uživatelem.", file=sys.stderr)
        return 130
    except Exception as e:
        logger.exception(f"Neočekávaná chyba v příkazu {args.command}")
        print(f"schubert-points: unexpected error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
