"""
Custom logging module with predefined config.
"""

# standard library
import logging
import socket
from logging.handlers import RotatingFileHandler

APP_NAME = "fiblucas-matrix"
APP_VERSION = "0.1"


def get_custom_logger(log_file=None, level=20):
    """Create logger with predefined config.

    Diagnostics go to standard error (and to a rotating file when log_file is given), so that
    standard output only carries command results.

    Parameters
    ----------
    log_file : Path or None
    level : int
        use logging.DEBUG, logging.INFO, ... or 10, 20, ... respectively

    Returns
    -------
    logger : logging.Logger
    """

    # create logger, dropping handlers installed by a previous call
    logger = logging.getLogger()
    logger.setLevel(level)
    for handler in list(logger.handlers):
        if handler.get_name() == APP_NAME:
            logger.removeHandler(handler)
            handler.close()
    formatter = logging.Formatter(
        fmt="%(asctime)s.%(msecs)03d {} {} {} [%(process)d]: [%(levelname).1s] %(message)s".format(
            socket.gethostname(),
            APP_NAME,
            APP_VERSION,
        ),
        datefmt="%Y-%m-%dT%H:%M:%S",
    )

    # create file handler
    if log_file is not None:
        log_file.parent.mkdir(exist_ok=True, parents=True)
        file_handler = RotatingFileHandler(  # redirect logs to rotating file
            log_file,
            maxBytes=1000000,
            backupCount=100,  # create new files when maxbytes reached (up to 100 * 1 MB files)
        )
        file_handler.set_name(APP_NAME)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    # create stream handler (stderr)
    stream_handler = logging.StreamHandler()
    stream_handler.set_name(APP_NAME)
    stream_handler.setLevel(level)
    logger.addHandler(stream_handler)

    return logger
