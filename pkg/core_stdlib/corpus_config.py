"""
Corpus configuration for core_stdlib.
Ships the worked examples replayed by ``uptrans replay``.
"""
from pathlib import Path

# App metadata
APP_NAME = "Standard library"
APP_EMOJI = "📚"
APP_DESCRIPTION = "Arithmetic, integers and the transport examples"
APP_ORDER = 1  # Replay order (lower = earlier)

CORPUS_DIR = Path(__file__).with_name('corpus')


def get_corpus_files():
    """Declaration files in replay order."""
    return sorted(CORPUS_DIR.glob('*.upt'))
