"""
Konstanty pro schubert-points
"""

# Settings constants - utils/settings_manager.py, utils/logging_config.py
SETTINGS_DIR_NAME = '.schubert-points'  # Složka s nastavením v domovském adresáři
SETTINGS_FILE_NAME = 'settings.json'  # Soubor s uživatelským nastavením
LOG_FILE_NAME = 'schubert-points.log'  # Log soubor ve složce nastavení
LOGGER_NAME = 'schubertpoints'  # Kořenový logger balíčku
VERDICT_LOGGER_NAME = 'schubertpoints.verdicts'  # Jeden řádek za každý verdikt
VERDICT_LOG_FILE_NAME = 'verdicts.log'  # Vedle hlavního logu
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
VERDICT_FORMAT = '%(asctime)s %(message)s'
DEBUG_ENV_VAR = 'SCHUBERT_POINTS_NOLOG'  # =1 vypne logování do souboru

# Output constants - cli/commands.py, verify/report_writer.py
OUTPUT_FORMATS = ('text', 'json')
DEFAULT_FORMAT = 'text'  # Výchozí formát výstupu
JSON_INDENT = 2  # Odsazení JSON reportů
DEFAULT_JOBS = 1  # Počet procesů pro scan (1 = bez process poolu)

# Claim and family identifiers - verify/verifiers.py, verify/scanner.py
CLAIM_THEOREM1 = 'theorem1'
CLAIM_CLOSURE = 'closure'
CLAIM_DELETION = 'deletion'
CLAIM_MAXIMALITY = 'maximality'
CLAIM_MONOMIALS = 'monomials'
CLAIM_DISSOLVING = 'dissolving'
CLAIM_DOMINANCE = 'dominance'
SHAPE_CLAIMS = (CLAIM_THEOREM1, CLAIM_CLOSURE, CLAIM_DELETION, CLAIM_MAXIMALITY,
                CLAIM_MONOMIALS, CLAIM_DISSOLVING)

FAMILY_THREE_ROW = 'three-row'
FAMILY_TWO_COLUMN = 'two-column'
FAMILY_ALL = 'all'
FAMILY_INVALID_ONLY = 'invalid-only'
FAMILIES = (FAMILY_THREE_ROW, FAMILY_TWO_COLUMN, FAMILY_ALL, FAMILY_INVALID_ONLY)

MAX_ROWS_VALID = 3  # Tvary s nejvýše 3 řádky splňují hlavní větu
MAX_COLUMNS_VALID = 2  # ... nebo s nejvýše 2 sloupci
MAX_WITNESSES = 10  # Maximální počet protipříkladů v jednom reportu

# Poincaré polynomial keys - verify/verifiers.py
POLY_SPRINGER = 'springer'
POLY_SCHUBERT_ALL = 'schubert_all'
POLY_SCHUBERT_STANDARD = 'schubert_standard'

# Trace rendering constants - visualization/trace_renderer.py
CELL_SIZE = 28  # Velikost jednoho boxu diagramu (px)
CELL_MARGIN = 12  # Okraj kolem diagramu (px)
DIAGRAM_SPACING = 24  # Mezera mezi diagramy jednotlivých kroků (px)
HEADER_HEIGHT = 36  # Výška záhlaví s indexem kroku a případem (px)
COLOR_BACKGROUND = '#ffffff'
COLOR_OUTLINE = '#000000'
COLOR_SHADED = '#b0b0b0'  # Stínované řádky (hvězdička)
COLOR_BOX_OF_I = '#4A90E2'  # Box obsahující i
COLOR_TEXT = '#000000'

# ASCII trace constants - visualization/text_formatter.py
ASCII_EMPTY_BOX = '[ ]'
ASCII_SHADED_BOX = '[#]'
ASCII_BOX_OF_I = '[*]'
ASCII_SHADED_BOX_OF_I = '[@]'

# Version - main.py, setup.py
VERSION = '1.0.0'
