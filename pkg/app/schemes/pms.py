from typing import Any

import numpy as np

from app.enums import SchemeId

from .base import BaseScheme


class ProjectedMilstein(BaseScheme):
    """Milstein step followed by projection: X_next = max(z, 0)."""

    scheme_id = SchemeId.PMS

    def project(self, z: Any) -> Any:
        return np.maximum(z, 0.0)
