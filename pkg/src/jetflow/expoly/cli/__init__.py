from .flow import register_flow
from .power import register_power

__all__ = ["register_flow", "register_power"]
