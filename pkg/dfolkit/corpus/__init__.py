"""Example theories, vocabularies, proofs and models shipped with dfolkit."""

from pathlib import Path
from typing import List

CORPUS_DIR = Path(__file__).parent

SUFFIXES = (".th", ".voc", ".prf", ".model")


def corpus_path(name: str) -> Path:
    """Path of a shipped corpus file such as ``semigroup.th``.

    Raises:
        FileNotFoundError: If no such file ships with the package
    """
    path = CORPUS_DIR / name
    if not path.is_file():
        raise FileNotFoundError(f"no corpus file named {name}")
    return path


def corpus_files(suffix: str) -> List[Path]:
    return sorted(CORPUS_DIR.glob(f"*{suffix}"))
