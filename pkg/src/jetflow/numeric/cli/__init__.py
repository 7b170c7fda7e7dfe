from .torsion import register_torsion

__all__ = ["register_torsion"]
