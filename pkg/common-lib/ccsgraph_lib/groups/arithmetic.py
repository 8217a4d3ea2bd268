from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Literal, Optional, Tuple, Union

from sympy import factorint, isprime

from ..exceptions import InvalidInput


class OrderMarker(Enum):
    """Outcome of a prime-power test on 1, which is no prime's positive power."""

    TRIVIAL = "trivial"


TRIVIAL = OrderMarker.TRIVIAL


@dataclass(frozen=True)
class PrimeSet:
    """Sorted set of distinct primes."""

    primes: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if list(self.primes) != sorted(set(self.primes)):
            raise InvalidInput(f"Primes must be sorted and distinct: {self.primes}")
        for p in self.primes:
            if not isprime(p):
                raise InvalidInput(f"{p} is not prime")

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p: object) -> bool:
        return p in self.primes

    def product(self) -> int:
        result = 1
        for p in self.primes:
            result *= p
        return result


def _require_positive(n: int) -> None:
    if n < 1:
        raise InvalidInput(f"Expected a positive integer, got {n}")


def prime_divisors(n: int) -> PrimeSet:
    _require_positive(n)
    return PrimeSet(tuple(sorted(factorint(n))))


def is_prime_power(n: int) -> Union[int, Literal[OrderMarker.TRIVIAL], None]:
    """Return p when n = p**k with k >= 1, TRIVIAL for n = 1, otherwise None."""
    _require_positive(n)
    if n == 1:
        return TRIVIAL
    factors = factorint(n)
    if len(factors) == 1:
        return next(iter(factors))
    return None


def is_p_power(n: int, p: int) -> bool:
    """True when n is a (possibly zeroth) power of p."""
    _require_positive(n)
    while n % p == 0:
        n //= p
    return n == 1


def as_prime(value: Union[int, OrderMarker, None]) -> Optional[int]:
    return value if isinstance(value, int) else None
