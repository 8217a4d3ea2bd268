from dataclasses import dataclass
from typing import Optional

from loguru import logger

from ..groups.base import FiniteGroup
from ..groups.subgroups import (
    Subgroup,
    center,
    normal_subgroups,
    quotient_group,
    subgroup_as_group,
)


@dataclass(frozen=True)
class FrobeniusData:
    """Kernel of a Frobenius group; the complement is isomorphic to G / kernel."""

    kernel: Subgroup
    kernel_abelian: bool
    quotient_abelian: bool


def _is_frobenius_kernel(group: FiniteGroup, kernel: Subgroup) -> bool:
    outside = ~kernel.mask
    for k in kernel.sorted_members:
        if k == group.identity_index:
            continue
        if (group.centralizer_mask(k) & outside).any():
            return False
    return True


def is_frobenius(group: FiniteGroup) -> Optional[FrobeniusData]:
    """Find a proper nontrivial normal K with C_G(k) inside K for every k != 1 in K."""
    for kernel in normal_subgroups(group):
        if kernel.is_trivial() or kernel.is_whole():
            continue
        if _is_frobenius_kernel(group, kernel):
            return FrobeniusData(
                kernel=kernel,
                kernel_abelian=subgroup_as_group(kernel).is_abelian(),
                quotient_abelian=quotient_group(group, kernel).is_abelian(),
            )
    return None


@dataclass(frozen=True)
class QuasiFrobeniusData:
    """Frobenius structure of G / Z(G) together with the preimage of its kernel in G."""

    center: Subgroup
    frobenius: FrobeniusData
    kernel_preimage: Subgroup
    kernel_preimage_abelian: bool

    @property
    def abelian_kernel_and_complement(self) -> bool:
        # An abelian Frobenius complement is cyclic, so its preimage over the
        # central subgroup is abelian exactly when the complement is.
        return self.kernel_preimage_abelian and self.frobenius.quotient_abelian


def quasi_frobenius_data(group: FiniteGroup) -> Optional[QuasiFrobeniusData]:
    """Frobenius data of G / Z(G), or None when that quotient is trivial or not Frobenius."""
    zg = center(group)
    if zg.is_whole():
        return None

    if zg.is_trivial():
        frobenius = is_frobenius(group)
        if frobenius is None:
            return None
        preimage = frobenius.kernel
    else:
        quotient = quotient_group(group, zg)
        frobenius = is_frobenius(quotient)
        if frobenius is None:
            return None
        # Quotient elements are labelled by their cosets in G.
        members = frozenset().union(*(quotient.element(c) for c in frobenius.kernel.members))
        preimage = Subgroup(group, members)

    data = QuasiFrobeniusData(
        center=zg,
        frobenius=frobenius,
        kernel_preimage=preimage,
        kernel_preimage_abelian=subgroup_as_group(preimage).is_abelian(),
    )
    logger.debug(
        "{}: G/Z(G) is Frobenius with kernel of order {} (preimage order {})",
        group.name,
        frobenius.kernel.order,
        preimage.order,
    )
    return data


def is_quasi_frobenius_abelian(group: FiniteGroup) -> bool:
    """G / Z(G) is Frobenius and the kernel and complement of G are abelian."""
    data = quasi_frobenius_data(group)
    return data is not None and data.abelian_kernel_and_complement
