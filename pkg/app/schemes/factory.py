from typing import Dict, Type

from app.enums import SchemeId
from app.model import CevModel

from .ais import DriftImplicitSquareRoot
from .base import BaseScheme
from .pms import ProjectedMilstein
from .ses import SymmetrizedEuler
from .sms import SymmetrizedMilstein

_REGISTRY: Dict[SchemeId, Type[BaseScheme]] = {
    SchemeId.SMS: SymmetrizedMilstein,
    SchemeId.PMS: ProjectedMilstein,
    SchemeId.SES: SymmetrizedEuler,
    SchemeId.AIS: DriftImplicitSquareRoot,
}


class SchemeFactory:
    """Factory for step schemes keyed by ``SchemeId``."""

    @staticmethod
    def build_scheme(scheme: SchemeId | str, model: CevModel) -> BaseScheme:
        """Build the scheme instance for a model.

        Args:
            scheme: Scheme identifier or its string value.
            model: Model the scheme discretizes.

        Returns:
            A ready-to-use ``BaseScheme`` subclass instance.

        Raises:
            UnsupportedParameters: If the scheme cannot be applied to the model.
            NotImplementedError: If the identifier is unknown.
        """
        try:
            scheme_id = SchemeId(scheme)
        except ValueError as e:
            raise NotImplementedError(
                f"Scheme {scheme} has not been yet implemented"
            ) from e
        return _REGISTRY[scheme_id](model)

    @staticmethod
    def is_applicable(scheme: SchemeId, model: CevModel) -> bool:
        try:
            SchemeFactory.build_scheme(scheme, model)
        except ValueError:
            return False
        return True
