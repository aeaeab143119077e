import re
from pathlib import Path

from setuptools import setup, find_packages


def read_version() -> str:
    """VERSION from src/utils/constants.py, without importing the package."""
    constants = Path(__file__).parent / 'src' / 'utils' / 'constants.py'
    match = re.search(r"^VERSION = '([^']+)'", constants.read_text(encoding='utf-8'), re.MULTILINE)
    if not match:
        raise RuntimeError("VERSION not found in src/utils/constants.py")
    return match.group(1)


setup(
    name="schubert-points",
    version=read_version(),
    description="Springer fibers, Schubert points and Bruhat-closure checks for type A",
    author="Schubert Points Team",
    packages=find_packages(where='src'),
    package_dir={'': 'src'},
    py_modules=['main'],
    install_requires=[
        "numpy>=1.24",
        "sympy>=1.12",
        "Pillow==11.0.0",
    ],
    entry_points={
        'console_scripts': [
            'schubert-points=main:main',
        ],
    },
    python_requires='>=3.9',
)
