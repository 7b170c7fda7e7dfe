from .embed import register_embed

__all__ = ["register_embed"]
