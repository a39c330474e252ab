"""
Factory for creating ERM oracles from their identifiers.

Compression sets store the identifier of the ERM that trained their groups;
this module turns such an identifier back into an ERM instance.
"""

from typing import Dict

from sckit.sckit_core.exceptions import InvalidArgumentError

from .base import BaseERM
from .bounded_variation import BVERM
from .lipschitz import LipschitzERM
from .threshold import ThresholdERM


def _parse_params(identifier: str, body: str) -> Dict[str, str]:
    params: Dict[str, str] = {}
    for item in filter(None, body.split(",")):
        key, sep, value = item.partition("=")
        if not sep or not key or not value:
            raise InvalidArgumentError(f"Malformed ERM identifier: {identifier!r}")
        params[key.strip()] = value.strip()
    return params


def _positive_float(identifier: str, params: Dict[str, str], key: str) -> float:
    if key not in params:
        raise InvalidArgumentError(f"ERM identifier {identifier!r} is missing '{key}='")
    try:
        value = float(params[key])
    except ValueError as e:
        raise InvalidArgumentError(f"ERM identifier {identifier!r}: bad value for {key}") from e
    if not value > 0:
        raise InvalidArgumentError(f"ERM identifier {identifier!r}: {key} must be positive")
    return value


def create_erm(identifier: str) -> BaseERM:
    """
    Create the ERM oracle named by an identifier.

    Supported identifiers:
    - ``lipschitz:L=<val>`` (optionally ``,metric=<name>``)
    - ``bv:v=<val>``
    - ``threshold``

    Args:
        identifier: ERM identifier, as produced by ``BaseERM.identifier``

    Returns:
        ERM instance whose ``identifier`` round-trips to an equivalent string

    Raises:
        InvalidArgumentError: If the identifier is not recognized

    Examples:
        >>> create_erm("bv:v=1.0").variation_bound
        1.0

        >>> create_erm("threshold").identifier
        'threshold'
    """
    kind, _, body = identifier.strip().partition(":")
    kind = kind.lower()

    if kind == "threshold":
        if body:
            raise InvalidArgumentError(f"threshold ERM takes no parameters: {identifier!r}")
        return ThresholdERM()
    elif kind == "bv":
        params = _parse_params(identifier, body)
        return BVERM(_positive_float(identifier, params, "v"))
    elif kind == "lipschitz":
        params = _parse_params(identifier, body)
        return LipschitzERM(
            _positive_float(identifier, params, "L"),
            metric=params.get("metric", "euclidean"),
        )
    else:
        raise InvalidArgumentError(
            f"Unknown ERM: {identifier!r}. "
            "Supported ERMs: lipschitz:L=<val>, bv:v=<val>, threshold"
        )
