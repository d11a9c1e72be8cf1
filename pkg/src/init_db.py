"""Initialize the database schema."""

import logging

from src.config import configure_logging, get_settings
from src.storage import DatabaseManager

logger = logging.getLogger(__name__)


def main():
    """Create the coefficient cache and verification run tables."""
    configure_logging()
    settings = get_settings()
    logger.info("Initializing database at: %s", settings.duckdb_path)

    db = DatabaseManager()
    db.init_schema()
    logger.info("%d cached coefficients", db.count_coefficients())
    db.close()

    logger.info("Database initialized successfully!")


if __name__ == "__main__":
    main()
