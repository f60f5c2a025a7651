import os

from loguru import logger

from src.core.errors import UsageError


class FileReader:
    """Chunked reader for artifact files."""

    def __init__(self, file_path: str, chunk_size: int = 1024):
        self.file_path = file_path
        self.chunk_size = chunk_size

    def read(self):
        """Yield the file contents chunk by chunk.

        Raises:
            UsageError: If the file does not exist or cannot be read
        """
        if not os.path.isfile(self.file_path):
            logger.error(f"Input file not found: {self.file_path}")
            raise UsageError(f"input file not found: {self.file_path}")
        try:
            with open(self.file_path, "rb") as f:
                while chunk := f.read(self.chunk_size):
                    yield chunk
        except OSError as e:
            logger.error(f"Error reading {self.file_path}: {e}")
            raise UsageError(f"cannot read {self.file_path}: {e}") from e

    def read_all(self) -> bytes:
        """The whole file as bytes."""
        return b"".join(self.read())
