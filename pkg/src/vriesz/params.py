"""Model parameters for the Riesz interaction of order alpha.

The interaction potential is c_alpha / |x|^(3-2*alpha) with
c_alpha = Gamma((3-2*alpha)/2) / (pi^(3/2) * 2^(2*alpha) * Gamma(alpha)),
valid for 0 < alpha < 3/2 (Gamma pole at alpha = 3/2).  alpha = 1 is Coulomb.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.special import gammaln

ALPHA_OPEN_INTERVAL = (0.5, 1.5)


def riesz_constant(alpha: float) -> float:
    """Normalization constant of the Riesz kernel.

    Raises ValueError outside 0 < alpha < 3/2 where the Gamma factor has a
    pole or the kernel convention is not defined.
    """
    if not 0.0 < alpha < 1.5:
        raise ValueError(f"riesz constant defined for 0 < alpha < 3/2, got {alpha}")
    # log-space to stay accurate near the alpha = 3/2 pole
    logc = gammaln((3.0 - 2.0 * alpha) / 2.0) - 1.5 * math.log(math.pi) \
        - 2.0 * alpha * math.log(2.0) - gammaln(alpha)
    return math.exp(logc)


@dataclass(frozen=True)
class ModelParams:
    """Interaction parameters: order alpha, sign lambda, kernel constant, softening.

    lam = +1 is the attractive (galactic) case, lam = -1 repulsive (plasma).
    ``softening`` is the Plummer regularization length used in particle-particle
    sums; 0 selects the exact kernel.
    """

    alpha: float
    lam: int = 1
    softening: float = 0.0
    c_alpha: float = field(init=False)

    def __post_init__(self):
        lo, hi = ALPHA_OPEN_INTERVAL
        if not lo < self.alpha < hi:
            raise ValueError(f"alpha must lie in ({lo}, {hi}), got {self.alpha}")
        if self.lam not in (-1, 1):
            raise ValueError(f"lambda must be -1 or +1, got {self.lam}")
        if self.softening < 0:
            raise ValueError("softening must be >= 0")
        object.__setattr__(self, "c_alpha", riesz_constant(self.alpha))

    @property
    def field_constant(self) -> float:
        """Prefactor of the field kernel (2*alpha-3)*c_alpha (negative on our range)."""
        return (2.0 * self.alpha - 3.0) * self.c_alpha

    def with_softening(self, softening: float) -> "ModelParams":
        return ModelParams(self.alpha, self.lam, softening)
