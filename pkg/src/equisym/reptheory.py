"""Exact complex character tables for the two stratum-group families.

Characters are stored as class functions with values in a ring of
cyclotomic integers whose conductor is the group exponent, so inner
products, fixed-space dimensions and isotypic multiplicities are computed
exactly and validated with integer equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime, multiplicative_order
from .cyclotomic import Cyclotomic
from .errors import InvariantError
from .groups import (
    FiniteGroup,
    SubgroupHandle,
    class_index,
    conjugacy_classes,
    dihedral,
    metacyclic,
)

__all__ = [
    "Character",
    "find_root_of_unity",
    "orbit_reps_k",
    "dihedral_characters",
    "metacyclic4_characters",
    "fixed_dim",
    "verify_orthogonality",
]


@dataclass(frozen=True)
class Character:
    """An irreducible complex character, tabulated per conjugacy class."""

    group: FiniteGroup
    name: str
    degree: int
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        classes = conjugacy_classes(self.group)
        if len(self.values) != len(classes):
            raise ValueError(
                f"character {self.name}: {len(self.values)} values for "
                f"{len(classes)} classes"
            )
        if self.values[0] != self.degree:
            raise InvariantError(
                f"character {self.name}: value on the identity class must equal "
                f"the degree {self.degree}"
            )

    @property
    def conductor(self) -> int:
        return self.values[0].conductor

    @property
    def is_trivial(self) -> bool:
        return self.degree == 1 and all(v == 1 for v in self.values)

    def value_on(self, element: int) -> Cyclotomic:
        return self.values[class_index(self.group)[element]]

    def __repr__(self):
        return f"Character({self.name}, degree {self.degree} on {self.group.family_tag})"


def find_root_of_unity(q: int, m: int) -> int:
    """Least residue of multiplicative order exactly ``m`` modulo prime ``q``."""
    if not is_prime(q):
        raise ValueError(f"modulus {q} is not prime")
    if m < 1 or (q - 1) % m != 0:
        raise ValueError(f"order {m} does not divide {q - 1}")
    for u in range(1, q):
        if multiplicative_order(u, q) == m:
            return u
    raise InvariantError(f"no element of order {m} modulo {q}")  # unreachable for prime q


def orbit_reps_k(q: int, u: int) -> tuple[int, ...]:
    """Least representatives of the orbits of ``{+-1, +-u}`` on ``1..q-1``.

    Requires ``u`` of multiplicative order 4 mod the prime ``q`` (so the
    four multipliers form a group and every orbit has size exactly 4);
    certifies that the orbits partition ``1..q-1`` into ``(q-1)/4`` cells.
    """
    if not is_prime(q):
        raise ValueError(f"modulus {q} is not prime")
    if multiplicative_order(u, q) != 4:
        raise ValueError(f"{u} does not have multiplicative order 4 modulo {q}")
    seen = [False] * q
    reps = []
    for k in range(1, q):
        if seen[k]:
            continue
        orbit = {k, (-k) % q, (k * u) % q, (-k * u) % q}
        if len(orbit) != 4 or any(seen[x] for x in orbit):
            raise InvariantError(f"orbit of {k} under {{+-1,+-{u}}} is not a free 4-cell")
        for x in orbit:
            seen[x] = True
        reps.append(k)
    if len(reps) != (q - 1) // 4:
        raise InvariantError("orbit representatives do not partition 1..q-1")
    return tuple(reps)


def _class_reps(G: FiniteGroup) -> list[int]:
    return [cls[0] for cls in conjugacy_classes(G)]


def dihedral_characters(q: int, group: FiniteGroup | None = None) -> list[Character]:
    """The full character table of the dihedral group of order ``4q`` (q odd).

    Rotation generator of order ``2q``; conductor ``2q``.  Four linear
    characters (rotations to ``+-1`` crossed with reflections to ``+-1``)
    and ``q - 1`` characters of degree 2.
    """
    if q < 3 or q % 2 == 0:
        raise ValueError(f"dihedral family needs odd q >= 3, got {q}")
    n = 2 * q
    if group is None:
        group = dihedral(n)
    elif group.family_tag != f"dihedral:{n}":
        raise ValueError(f"group {group.family_tag} is not dihedral:{n}")
    reps = _class_reps(group)
    cond = n  # group exponent lcm(2q, 2) = 2q

    def decomp(idx: int) -> tuple[int, int]:
        return idx % n, idx // n  # (rotation exponent, reflection bit)

    one = Cyclotomic.integer(cond, 1)
    chars: list[Character] = []
    for rot_sign, refl_sign, name in (
        (1, 1, "U1+"),
        (1, -1, "U1-"),
        (-1, 1, "U2+"),
        (-1, -1, "U2-"),
    ):
        vals = []
        for rep in reps:
            i, e = decomp(rep)
            v = (rot_sign ** (i % 2)) * (refl_sign**e)
            vals.append(one * v)
        chars.append(Character(group, name, 1, tuple(vals)))
    zero = Cyclotomic.zero(cond)
    for j in range(1, q):
        vals = []
        for rep in reps:
            i, e = decomp(rep)
            if e:
                vals.append(zero)
            else:
                vals.append(Cyclotomic.root(cond, j * i) + Cyclotomic.root(cond, -j * i))
        chars.append(Character(group, f"V{j}", 2, tuple(vals)))
    return chars


def metacyclic4_characters(
    q: int, u: int | None = None, group: FiniteGroup | None = None
) -> list[Character]:
    """Character table of ``<a,b | a^q, b^4, b a b^-1 = a^u>`` with ``u^2 = -1``.

    Requires prime ``q = 1 mod 4``; conductor ``4q``.  Four linear
    characters factor through ``<b>``; each multiplier orbit
    ``{+-k, +-uk}`` carries one degree-4 character, induced from ``<a>``
    and vanishing off it.
    """
    if not is_prime(q) or q % 4 != 1:
        raise ValueError(f"metacyclic order-4 family needs a prime q = 1 mod 4, got {q}")
    if u is None:
        u = find_root_of_unity(q, 4)
    if group is None:
        group = metacyclic(q, 4, u)
    elif group.family_tag != f"metacyclic:{q},4,{u}":
        raise ValueError(f"group {group.family_tag} is not metacyclic:{q},4,{u}")
    reps = _class_reps(group)
    cond = 4 * q  # group exponent
    w4 = q  # w_(4q)^q is a primitive 4th root

    def decomp(idx: int) -> tuple[int, int]:
        return idx // 4, idx % 4  # (a-exponent, b-exponent)

    chars: list[Character] = []
    for l in range(4):
        vals = []
        for rep in reps:
            _, j = decomp(rep)
            vals.append(Cyclotomic.root(cond, w4 * l * j))
        chars.append(Character(group, f"U{l}", 1, tuple(vals)))
    zero = Cyclotomic.zero(cond)
    for k in orbit_reps_k(q, u):
        vals = []
        for rep in reps:
            i, j = decomp(rep)
            if j != 0:
                vals.append(zero)
            else:
                total = zero
                for s in (k, -k, k * u, -k * u):
                    total = total + Cyclotomic.root(cond, 4 * i * s)
                vals.append(total)
        chars.append(Character(group, f"V{k}", 4, tuple(vals)))
    return chars


def fixed_dim(char: Character, subgroup: SubgroupHandle) -> int:
    """Dimension of the subspace fixed by ``subgroup`` in a module affording ``char``.

    Computes ``(1/|H|) * sum over H of the character`` exactly and insists
    the result is a non-negative integer.
    """
    if subgroup.group.family_tag != char.group.family_tag:
        raise ValueError(
            f"subgroup of {subgroup.group.family_tag} is incompatible with a "
            f"character of {char.group.family_tag}"
        )
    total = Cyclotomic.zero(char.conductor)
    for h in subgroup.elements:
        total = total + char.value_on(h)
    if not total.is_rational():
        raise InvariantError(f"character sum over subgroup is irrational: {total!r}")
    value = total.rational_value()
    if value < 0 or value % subgroup.order != 0:
        raise InvariantError(
            f"character sum {value} is not |H| = {subgroup.order} times a "
            f"non-negative integer"
        )
    return value // subgroup.order


def verify_orthogonality(chars: list[Character]) -> None:
    """Assert both orthogonality relations for a full character table."""
    if not chars:
        raise ValueError("empty character list")
    G = chars[0].group
    classes = conjugacy_classes(G)
    if len(chars) != len(classes):
        raise InvariantError(
            f"{len(chars)} characters against {len(classes)} classes"
        )
    cond = chars[0].conductor
    # First orthogonality: row inner products.
    for a, chi in enumerate(chars):
        for b, psi in enumerate(chars):
            total = Cyclotomic.zero(cond)
            for cls, v_chi, v_psi in zip(classes, chi.values, psi.values):
                total = total + len(cls) * (v_chi * v_psi.conjugate())
            expected = G.order if a == b else 0
            if total != expected:
                raise InvariantError(
                    f"first orthogonality fails for ({chi.name}, {psi.name}): "
                    f"{total!r} != {expected}"
                )
    # Second orthogonality: column inner products.
    for idx_c, cls_c in enumerate(classes):
        for idx_d in range(idx_c, len(classes)):
            total = Cyclotomic.zero(cond)
            for chi in chars:
                total = total + chi.values[idx_c] * chi.values[idx_d].conjugate()
            expected = G.order // len(cls_c) if idx_c == idx_d else 0
            if total != expected:
                raise InvariantError(
                    f"second orthogonality fails for classes {idx_c}, {idx_d}"
                )
