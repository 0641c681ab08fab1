from typing import Any

from app.enums import SchemeId

from .base import BaseScheme


class SymmetrizedEuler(BaseScheme):
    """Euler step followed by reflection, i.e. the SMS without the Milstein term."""

    scheme_id = SchemeId.SES

    def raw_increment(self, dt: float, x: Any, dW: Any) -> Any:
        return self.euler_increment(dt, x, dW)
