import importlib
import inspect
import logging
import pkgutil

import monoid_checks
from app.config import analysis_config
from app.exceptions import InvalidInputError
from app.ktheory.monoid import ClassSpace, MonoidPresentation
from monoid_checks.base import BaseMonoidPropertyCheck, MonoidPropertyResult


def discover_checks() -> dict[str, type[BaseMonoidPropertyCheck]]:
    """Dynamically discovers all property checks in the monoid_checks package."""
    discovered = {}
    package_path = monoid_checks.__path__
    package_name = monoid_checks.__name__

    for _, name, _ in pkgutil.iter_modules(package_path, prefix=f"{package_name}."):
        try:
            module = importlib.import_module(name)
            for _, member_obj in inspect.getmembers(module):
                if (
                    inspect.isclass(member_obj)
                    and issubclass(member_obj, BaseMonoidPropertyCheck)
                    and member_obj is not BaseMonoidPropertyCheck
                ):
                    logging.debug(f"Discovered property check: {member_obj.__name__}")
                    discovered[member_obj.name] = member_obj
        except Exception as e:
            logging.error(f"Failed to import or inspect module {name}: {e}")

    return discovered


def monoid_property_search(
    p: MonoidPresentation, property_name: str, bound: int | None = None
) -> MonoidPropertyResult:
    """
    Looks for a counterexample to the property among all elements with
    coefficient sum up to the bound.
    """
    bound = analysis_config.MONOID_SEARCH_BOUND if bound is None else bound
    if bound < 1:
        raise InvalidInputError(f"Search bound must be at least 1, got {bound}")
    checks = discover_checks()
    if property_name not in checks:
        raise InvalidInputError(
            f"Unknown monoid property '{property_name}'; expected one of {', '.join(sorted(checks))}"
        )
    result = checks[property_name]().check(ClassSpace(p, bound))
    logging.info(f"Property {property_name}: {result.verdict.value} (bound {bound})")
    return result
