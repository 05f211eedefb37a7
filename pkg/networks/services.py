from pathlib import Path
from typing import Optional, Union
from django.conf import settings
from django.core.cache import cache
import logging

from core.exceptions import DocumentError

from .documents import NetworkDocument, parse, print_document

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class NetworkFileService:
    """
    Service for loading and saving open network documents on disk.
    Parsed documents are cached by path and modification time.
    """

    BASE_DIR = Path(__file__).resolve().parent.parent
    FIXTURES_DIR = BASE_DIR / 'networks' / 'fixtures'
    SCHEMA_FILE = BASE_DIR / 'networks' / 'schemas' / 'open_network.schema.json'

    @classmethod
    def _cache_key(cls, path: Path) -> Optional[str]:
        try:
            stat = path.stat()
        except OSError:
            return None
        return f"network_document_{path}_{stat.st_mtime_ns}_{stat.st_size}"

    @classmethod
    def load(cls, path: PathLike) -> NetworkDocument:
        """
        Read and parse a document.

        Raises:
            DocumentError: if the file cannot be read or does not parse
        """
        path = Path(path).resolve()
        cache_key = cls._cache_key(path)
        if cache_key:
            try:
                cached = cache.get(cache_key)
                if cached is not None:
                    return cached
            except Exception:
                # Cache not available, continue with file load
                pass

        try:
            text = path.read_text(encoding='utf-8')
        except (OSError, UnicodeDecodeError) as e:
            logger.error(f"Could not read network document {path}: {e}")
            raise DocumentError(f"cannot read {path}: {e}", code='malformed-json')

        try:
            document = parse(text)
        except DocumentError as e:
            logger.warning(f"Rejected network document {path}: {e}")
            raise

        if cache_key:
            try:
                cache_timeout = getattr(settings, 'COSPAN_CACHE_TIMEOUT', 300)
                cache.set(cache_key, document, cache_timeout)
            except Exception:
                # Cache not available, continue without caching
                pass

        logger.info(f"Loaded {document.instance} document from {path}")
        return document

    @classmethod
    def save(cls, document: NetworkDocument, path: PathLike) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(print_document(document), encoding='utf-8')
        logger.info(f"Wrote {document.instance} document to {path}")
        return path

    @classmethod
    def fixture(cls, name: str) -> NetworkDocument:
        """Load one of the shipped example networks by file stem."""
        return cls.load(cls.FIXTURES_DIR / f"{name}.json")

    @classmethod
    def list_fixtures(cls):
        if not cls.FIXTURES_DIR.exists():
            logger.warning(f"Fixtures directory not found: {cls.FIXTURES_DIR}")
            return []
        return sorted(p.stem for p in cls.FIXTURES_DIR.glob('*.json'))
