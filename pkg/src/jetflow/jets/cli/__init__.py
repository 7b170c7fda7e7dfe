from .linearize import register_linearize

__all__ = ["register_linearize"]
