"""Euler classes of irreducible N_{SL_2}-representations.

This is the representation-theoretic route to every local Euler class: a
fixed-point fibre is decomposed into two-dimensional pieces rho_a or
rho_a^-, each piece contributes a degree-two class, and the Whitney formula
multiplies them.  Classes are kept evaluated at numeric weights, so an
:class:`EquivClass` is ``coeff * e**e_pow * etilde**etilde_parity``.

Conventions:

* odd ``a``:            e(rho_a) = eps(a) * a * e
* ``a = 2 mod 4``:      e(rho_a) = (a/2) * etilde
* ``a = 0 mod 4``:      e(rho_a) = -(a/2) * etilde
* e(rho_a^-) = -e(rho_a), and etilde**2 = 4 e**2.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Tuple, Union

from .arith import epsilon
from .errors import DomainError

Number = Union[int, Fraction]


class IrredRep(NamedTuple):
    """``rho_weight`` (twist +1) or ``rho_weight^-`` (twist -1)."""

    weight: int
    twist: int = 1

    def __str__(self):
        return f"rho{'-' if self.twist < 0 else ''}_{self.weight}"

    @classmethod
    def oriented(cls, weight: int, twist: int = 1) -> "IrredRep":
        """Build from a possibly negative weight of the first basis vector.

        A sigma-dual pair listed with its negative-weight vector first is the
        oppositely twisted representation in oriented form, for odd and even
        weights alike.
        """
        if weight < 0:
            return cls(-weight, -twist)
        return cls(weight, twist)

    @property
    def dim(self) -> int:
        return 1 if self.weight == 0 else 2


@dataclass(frozen=True)
class EquivClass:
    coeff: Number = 1
    e_pow: int = 0
    etilde_parity: int = 0

    def __post_init__(self):
        if self.coeff == 0:
            object.__setattr__(self, "e_pow", 0)
            object.__setattr__(self, "etilde_parity", 0)
        elif self.etilde_parity not in (0, 1):
            q, r = divmod(self.etilde_parity, 2)
            object.__setattr__(self, "coeff", self.coeff * 4 ** q)
            object.__setattr__(self, "e_pow", self.e_pow + 2 * q)
            object.__setattr__(self, "etilde_parity", r)

    def __mul__(self, other: "EquivClass") -> "EquivClass":
        return EquivClass(
            self.coeff * other.coeff,
            self.e_pow + other.e_pow,
            self.etilde_parity + other.etilde_parity,
        )

    def __neg__(self):
        return EquivClass(-self.coeff, self.e_pow, self.etilde_parity)

    def __str__(self):
        parts = [str(self.coeff)]
        if self.e_pow:
            parts.append(f"e^{self.e_pow}")
        if self.etilde_parity:
            parts.append("etilde")
        return "*".join(parts)


ONE = EquivClass()


def euler_of_irred(r: IrredRep) -> EquivClass:
    a, twist = r.weight, r.twist
    if a < 0:
        raise DomainError("IrredRep weight must be >= 0; use IrredRep.oriented")
    if a == 0:
        return EquivClass(0)
    if a % 2:
        c = EquivClass(epsilon(a) * a, 1, 0)
    elif a % 4 == 2:
        c = EquivClass(a // 2, 0, 1)
    else:
        c = EquivClass(-(a // 2), 0, 1)
    return -c if twist < 0 else c


def euler_product(reps: Iterable[IrredRep]) -> EquivClass:
    out = ONE
    for r in reps:
        out = out * euler_of_irred(r)
    return out


def total_dim(reps: Iterable[IrredRep]) -> int:
    return sum(r.dim for r in reps)


def as_tuple(c: EquivClass) -> Tuple[Number, int, int]:
    return c.coeff, c.e_pow, c.etilde_parity
