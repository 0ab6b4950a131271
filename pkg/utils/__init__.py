from .logging import setup_logging, setup_json_logging

__all__ = [
    "setup_logging",
    "setup_json_logging",
]
