"""Exact isotypic decomposition data for the two family Jacobians.

The group action on holomorphic one-forms splits the Jacobian up to
isogeny; the dimension of each isotypic factor is computed from the
character table and the fixed-space dimensions of the cyclic subgroups
generated by the vector entries.  Quotient genera are computed twice, by
independent routes - a coset-orbit Riemann-Hurwitz count and a
character-sum - and must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime
from .errors import InvariantError
from .classify import f1_vector, f2_vector
from .genvec import GeneratingVector
from .groups import (
    SubgroupHandle,
    element_order,
    power,
    subgroup_generated,
)
from .reptheory import (
    Character,
    dihedral_characters,
    find_root_of_unity,
    fixed_dim,
    metacyclic4_characters,
)

__all__ = [
    "FactorRow",
    "DecompositionReport",
    "factor_dimension",
    "relevant_reps",
    "is_admissible",
    "quotient_genus",
    "quotient_branching",
    "quotient_genus_character_sum",
    "decomposition_report",
]


def factor_dimension(char: Character, vec: GeneratingVector) -> int:
    """Dimension of the isotypic Jacobian factor attached to ``char``.

    For the trivial character this is the orbit genus ``h``; otherwise
    ``d(h-1) + (1/2) sum_i (d - fixed_dim(char, <v_i>))`` over the elliptic
    entries, which must come out a non-negative integer.
    """
    if char.group.family_tag != vec.group.family_tag:
        raise ValueError("character and vector live on different groups")
    h = vec.signature.h
    if char.is_trivial:
        return h
    d = char.degree
    doubled = 2 * d * (h - 1)
    for v in vec.elliptic:
        doubled += d - fixed_dim(char, subgroup_generated(vec.group, [v]))
    if doubled % 2 != 0 or doubled < 0:
        raise InvariantError(
            f"factor dimension for {char.name} is not a non-negative integer "
            f"(twice the value is {doubled})"
        )
    return doubled // 2


def relevant_reps(vec: GeneratingVector, chars: list[Character]) -> list[Character]:
    """The characters whose isotypic factor is non-trivial for this action."""
    return [char for char in chars if factor_dimension(char, vec) != 0]


def is_admissible(subgroups, vec: GeneratingVector, chars: list[Character]) -> bool:
    """Whether the subgroup collection can split the Jacobian completely:
    for every relevant character the fixed-space dimensions summed over
    the collection may not exceed the degree."""
    for char in relevant_reps(vec, chars):
        total = sum(fixed_dim(char, H) for H in subgroups)
        if total > char.degree:
            return False
    return True


def _coset_space(vec: GeneratingVector, subgroup: SubgroupHandle):
    G = vec.group
    mul = G.mul
    elems = subgroup.elements
    coset_of = [0] * G.order
    for g in range(G.order):
        coset_of[g] = min(mul[g][h] for h in elems)
    reps = sorted(set(coset_of))
    rep_index = {r: i for i, r in enumerate(reps)}
    return coset_of, reps, rep_index


def _orbit_cycles(vec: GeneratingVector, subgroup: SubgroupHandle):
    """For each elliptic entry: the cycle lengths of its left-translation
    action on the coset space ``G / H``."""
    if subgroup.group.family_tag != vec.group.family_tag:
        raise ValueError("subgroup and vector live on different groups")
    G = vec.group
    mul = G.mul
    coset_of, reps, rep_index = _coset_space(vec, subgroup)
    all_cycles = []
    for v in vec.elliptic:
        perm = [rep_index[coset_of[mul[v][r]]] for r in reps]
        seen = [False] * len(reps)
        cycles = []
        for start in range(len(reps)):
            if seen[start]:
                continue
            length = 0
            node = start
            while not seen[node]:
                seen[node] = True
                node = perm[node]
                length += 1
            cycles.append(length)
        all_cycles.append((element_order(G, v), cycles))
    return len(reps), all_cycles


def quotient_genus(vec: GeneratingVector, subgroup: SubgroupHandle) -> int:
    """Genus of the quotient surface by ``subgroup``, via Riemann-Hurwitz
    on the coset space: the intermediate quotient covers the base with
    degree ``[G:H]`` and the branch orders over the i-th branch point are
    read off the cycles of ``v_i`` on ``G/H``."""
    index, data = _orbit_cycles(vec, subgroup)
    doubled = index * (2 * vec.signature.h - 2)
    for _, cycles in data:
        doubled += index - len(cycles)
    if doubled % 2 != 0 or doubled < -2:
        raise InvariantError(f"coset-orbit count gave an impossible value {doubled}")
    genus = doubled // 2 + 1
    if genus < 0:
        raise InvariantError(f"negative quotient genus {genus}")
    return genus


def quotient_branching(vec: GeneratingVector, subgroup: SubgroupHandle) -> tuple[int, ...]:
    """Branch orders of the covering ``surface -> surface/subgroup``.

    Each cycle of length ``d`` of ``v_i`` on ``G/H`` is one point of the
    intermediate quotient; the covering ramifies there with order
    ``period / d``.  Returns the sorted multiset of orders > 1 (empty
    means the covering is unbranched).
    """
    _, data = _orbit_cycles(vec, subgroup)
    marks = []
    for period, cycles in data:
        for d in cycles:
            if period % d != 0:
                raise InvariantError(
                    f"cycle length {d} does not divide the period {period}"
                )
            if period // d > 1:
                marks.append(period // d)
    return tuple(sorted(marks))


def quotient_genus_character_sum(
    vec: GeneratingVector, subgroup: SubgroupHandle, chars: list[Character]
) -> int:
    """Independent computation of the quotient genus: sum over the full
    character table of ``fixed_dim * factor_dimension``."""
    return sum(
        fixed_dim(char, subgroup) * factor_dimension(char, vec) for char in chars
    )


# ---------------------------------------------------------------------------
# family reports


@dataclass(frozen=True)
class FactorRow:
    """One isogeny factor: the quotient by ``subgroup`` (named by its
    generator), its genus, and how many conjugate copies occur."""

    subgroup_name: str
    subgroup: SubgroupHandle
    genus: int
    multiplicity: int


@dataclass(frozen=True)
class DecompositionReport:
    family: str
    q: int
    genus: int
    vector: GeneratingVector
    factors: tuple[FactorRow, ...]
    residual: int
    admissible: bool
    genus_sum_ok: bool


def _checked_quotient_genus(vec, subgroup, chars) -> int:
    direct = quotient_genus(vec, subgroup)
    by_chars = quotient_genus_character_sum(vec, subgroup, chars)
    if direct != by_chars:
        raise InvariantError(
            f"quotient genus mismatch: coset-orbit {direct} vs character sum {by_chars}"
        )
    return direct


def decomposition_report(family: str, q: int) -> DecompositionReport:
    """Isogeny decomposition of the family Jacobian at parameter ``q``.

    ``family="F2"`` (any odd ``q >= 3``): the dihedral action; factors are
    the quotients by ``<r>``, ``<s>`` and ``<sr>`` with genera
    ``1, (q-1)/2, (q+1)/2``.  ``family="F1"`` (prime ``q = 1 mod 4``): the
    metacyclic action; factors are the quotient by ``<a>`` (genus 2) and
    four conjugate copies of the quotient by ``<b>`` (genus ``(q-1)/4``).
    Every genus is computed by both routes; the residual is the genus
    minus the factor dimensions and vanishes exactly when the listed
    factors fill the Jacobian.
    """
    family = family.upper()
    if family == "F2":
        if q < 3 or q % 2 == 0:
            raise ValueError(f"family F2 needs odd q >= 3, got {q}")
        vec = f2_vector(q)
        G = vec.group
        chars = dihedral_characters(q, group=G)
        r, s = G.generator("r"), G.generator("s")
        named = [
            ("<r>", subgroup_generated(G, [r])),
            ("<s>", subgroup_generated(G, [s])),
            ("<sr>", subgroup_generated(G, [G.mul[s][r]])),
        ]
        factors = tuple(
            FactorRow(name, H, _checked_quotient_genus(vec, H, chars), 1)
            for name, H in named
        )
        collection = [H for _, H in named]
    elif family == "F1":
        if not is_prime(q) or q % 4 != 1:
            raise ValueError(f"family F1 needs a prime q = 1 mod 4, got {q}")
        vec = f1_vector(q)
        G = vec.group
        u = find_root_of_unity(q, 4)
        chars = metacyclic4_characters(q, u, group=G)
        a, b = G.generator("a"), G.generator("b")
        H_a = subgroup_generated(G, [a])
        copies = [
            subgroup_generated(G, [G.mul[power(G, a, t)][b]]) for t in range(1, 5)
        ]
        H_b = subgroup_generated(G, [b])
        genus_b = _checked_quotient_genus(vec, H_b, chars)
        for H in copies:
            if not _is_conjugate(G, H, H_b):
                raise InvariantError("expected all <a^t b> to be conjugate to <b>")
            if _checked_quotient_genus(vec, H, chars) != genus_b:
                raise InvariantError("conjugate subgroups gave different genera")
        factors = (
            FactorRow("<a>", H_a, _checked_quotient_genus(vec, H_a, chars), 1),
            FactorRow("<b>", H_b, genus_b, 4),
        )
        collection = [H_a] + copies
    else:
        raise ValueError(f"family must be 'F1' or 'F2', got {family!r}")
    genus = vec.genus()
    total = sum(row.genus * row.multiplicity for row in factors)
    genus_sum = sum(
        char.degree * factor_dimension(char, vec) for char in chars
    )
    return DecompositionReport(
        family=family,
        q=q,
        genus=genus,
        vector=vec,
        factors=factors,
        residual=genus - total,
        admissible=is_admissible(collection, vec, chars),
        genus_sum_ok=genus_sum == genus,
    )


def _is_conjugate(G, H: SubgroupHandle, K: SubgroupHandle) -> bool:
    if H.order != K.order:
        return False
    mul, inv = G.mul, G.inv
    target = set(K.elements)
    for g in range(G.order):
        if {mul[mul[g][x]][inv[g]] for x in H.elements} == target:
            return True
    return False
