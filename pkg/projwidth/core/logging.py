import logging
import sys

from projwidth.core.config import get_settings


def get_logger(name: str):
    logger = logging.getLogger(name)
    logger.setLevel(get_settings().log_level.upper())
    # stdout carries CSV and PQ1 output, so logs go to stderr
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    logger.propagate = False
    return logger
