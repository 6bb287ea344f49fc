"""The logging system that helps track what the calculator does"""

import logging
from pathlib import Path
from typing import Optional

from selfdeg.config import Config
from selfdeg.types.base_types import PathLike

LOG_FORMAT = "%(asctime)s (%(levelname)s): %(message)s"


class Logger:
    """The logging system that helps track what the calculator does"""

    @staticmethod
    def _attach_handlers(
        logger: logging.Logger,
        log_file: Optional[PathLike],
        level: int,
    ) -> logging.Logger:
        """Replaces the handlers of `logger` with a stderr handler and, optionally, a file handler

        Parameters
        ----------
        logger : Logger
            The logger to configure
        log_file: Optional[PathLike]
            The file that the log will reference, if any
        level:
            The output level of the log, INFO, ERROR etc, which describes which what will be logged.
        Returns
        -------
        logger: Logger
            The logging object with the appropriate handlers
        """
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()

        formatter = logging.Formatter(LOG_FORMAT)
        streamHandler = logging.StreamHandler()
        streamHandler.setFormatter(formatter)
        logger.addHandler(streamHandler)
        if log_file is not None:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            fileHandler = logging.FileHandler(log_file, mode="a+")
            fileHandler.setFormatter(formatter)
            logger.addHandler(fileHandler)

        logger.setLevel(level)
        logger.propagate = False
        return logger

    @staticmethod
    def get_logger(
        log_name: str,
        log_dir: Optional[PathLike] = None,
        log_level: int = logging.INFO,
    ) -> logging.Logger:
        """Finds the logger with the given name and (re)configures its handlers

        Parameters
        ----------
        log_name : str
            The name that will refer to this unique logger
        log_dir: Optional[PathLike]
            Directory for `<log_name>.log`; no file handler if None
        log_level:
            The output level of the log, INFO, ERROR etc, which describes which what will be logged.
        Returns
        -------
        logger: Logger
            The logging object with the appropriate handlers
        """
        log_file = None if log_dir is None else Path(log_dir) / f"{log_name}.log"
        return Logger._attach_handlers(logging.getLogger(log_name), log_file, log_level)

    @staticmethod
    def get_engine_logger() -> logging.Logger:
        """The logger used by the degree engine, at the configured level"""
        return Logger.get_logger(
            "selfdeg.engine",
            Config.log_directory,
            log_level=Config.log_level,
        )

    @staticmethod
    def get_cli_logger() -> logging.Logger:
        """The logger used by the command line front end, at the configured level"""
        return Logger.get_logger(
            "selfdeg.cli",
            Config.log_directory,
            log_level=Config.log_level,
        )
