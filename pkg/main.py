"""Розв'язувач параболічних задач з розривною конвекцією на сітці Шишкіна."""
import sys

from src.domain.exceptions import UsageError
from src.infrastructure.logging.logging_factory import LoggingFactory
from src.presentation.cli import parse_config, run
from src.presentation.cli.runner import EXIT_USAGE


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_config(argv)
    except UsageError as e:
        LoggingFactory.get_logger(__name__).error(f"Невірні параметри ({e.flag}): {e}")
        return EXIT_USAGE

    LoggingFactory.configure_for_cli(config.log_file, config.verbose)

    logger = LoggingFactory.get_logger(__name__)
    logger.info("=" * 50)
    logger.info("Запуск розв'язувача")
    logger.info("=" * 50)

    exit_code = run(config)

    logger.info(f"Завершено з кодом: {exit_code}")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
