from app.enums import SchemeId

from .base import BaseScheme


class SymmetrizedMilstein(BaseScheme):
    """Milstein step followed by reflection: X_next = |z|."""

    scheme_id = SchemeId.SMS
