import json
from typing import Any

from loguru import logger

from src.core.errors import UsageError


class JSONDecoder:
    """Decode artifact files into JSON values."""

    @staticmethod
    def decode(text_data: bytes, encoding: str = "utf-8") -> Any:
        """Parse bytes as JSON.

        Raises:
            UsageError: If the bytes are not valid JSON in the given encoding
        """
        try:
            return json.loads(text_data.decode(encoding))
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            logger.error(f"Error decoding JSON: {e}")
            raise UsageError(f"invalid JSON input: {e}") from e
