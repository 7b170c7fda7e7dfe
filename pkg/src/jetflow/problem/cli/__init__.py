from .run import register_run

__all__ = ["register_run"]
