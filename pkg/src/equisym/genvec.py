"""Surface-kernel generating vectors and their equivalence classes.

A vector assigns group elements to the canonical generators of a Fuchsian
group of signature ``(h; m_1, ..., m_l)`` so that the long relation maps
to the identity, elliptic images have exactly the prescribed orders, and
the images generate the whole group.  Equivalence is the closure under
product-preserving braid moves on adjacent elliptic entries together with
entrywise group automorphisms; classes correspond to distinct conjugacy
classes of the action, so their count is the number of strata.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .errors import BudgetExceededError, InvariantError
from .fuchsian import Signature, rh_genus
from .groups import (
    FiniteGroup,
    GroupMorphism,
    _closure_indices,
    automorphisms,
    element_order,
    elements_of_order,
)

__all__ = [
    "GeneratingVector",
    "ActionClass",
    "DEFAULT_BUDGET",
    "vector_satisfies",
    "make_vector",
    "enumerate_vectors",
    "braid_move",
    "apply_automorphism",
    "orbit_classes",
    "action_genus",
    "vector_to_json",
]

DEFAULT_BUDGET = 10**9

# ---------------------------------------------------------------------------
# vector container and validation


@dataclass(frozen=True)
class GeneratingVector:
    """Images of the canonical generators: ``h`` handle pairs plus ``l``
    elliptic entries, stored as element indices of ``group``."""

    group: FiniteGroup
    signature: Signature
    hyperbolic: tuple[tuple[int, int], ...] = ()
    elliptic: tuple[int, ...] = ()

    def entries(self) -> tuple[int, ...]:
        flat: list[int] = []
        for a, b in self.hyperbolic:
            flat.extend((a, b))
        flat.extend(self.elliptic)
        return tuple(flat)

    def genus(self) -> int:
        return rh_genus(self.signature, self.group.order)

    def elliptic_labels(self) -> tuple[str, ...]:
        return tuple(self.group.label(v) for v in self.elliptic)

    def __repr__(self):
        parts = [f"({self.group.label(a)}, {self.group.label(b)})" for a, b in self.hyperbolic]
        parts.extend(self.group.label(v) for v in self.elliptic)
        return f"GeneratingVector[{self.signature}]({'; '.join(parts)})"


def _product_of(vec_group: FiniteGroup, hyperbolic, elliptic) -> int:
    mul, inv = vec_group.mul, vec_group.inv
    acc = vec_group.identity
    for a, b in hyperbolic:
        comm = mul[mul[mul[a][b]][inv[a]]][inv[b]]
        acc = mul[acc][comm]
    for v in elliptic:
        acc = mul[acc][v]
    return acc


def vector_satisfies(
    G: FiniteGroup, sig: Signature, hyperbolic, elliptic
) -> tuple[bool, list[str]]:
    """Check the three defining conditions; returns (ok, violation list)."""
    hyperbolic = tuple((int(a), int(b)) for a, b in hyperbolic)
    elliptic = tuple(int(v) for v in elliptic)
    problems: list[str] = []
    if len(hyperbolic) != sig.h:
        problems.append(
            f"expected {sig.h} handle pairs, got {len(hyperbolic)}"
        )
    if len(elliptic) != len(sig.periods):
        problems.append(
            f"expected {len(sig.periods)} elliptic entries, got {len(elliptic)}"
        )
    for x in (e for pair in hyperbolic for e in pair):
        if not 0 <= x < G.order:
            problems.append(f"handle entry {x} out of range")
    for x in elliptic:
        if not 0 <= x < G.order:
            problems.append(f"elliptic entry {x} out of range")
    if problems:
        return False, problems
    got = sorted(element_order(G, v) for v in elliptic)
    if got != list(sig.periods):
        problems.append(
            f"elliptic orders {got} do not match the periods {list(sig.periods)}"
        )
    if _product_of(G, hyperbolic, elliptic) != G.identity:
        problems.append("long relation does not map to the identity")
    seeds = [e for pair in hyperbolic for e in pair] + list(elliptic)
    if len(_closure_indices(G.mul, seeds, G.identity)) != G.order:
        problems.append("entries do not generate the group")
    return not problems, problems


def make_vector(G: FiniteGroup, sig: Signature, hyperbolic, elliptic) -> GeneratingVector:
    """Validated constructor; raises ``ValueError`` listing the violations."""
    ok, problems = vector_satisfies(G, sig, hyperbolic, elliptic)
    if not ok:
        raise ValueError(
            f"not a generating vector for {G.family_tag} with signature {sig}: "
            + "; ".join(problems)
        )
    return GeneratingVector(
        G,
        sig,
        tuple((int(a), int(b)) for a, b in hyperbolic),
        tuple(int(v) for v in elliptic),
    )


# ---------------------------------------------------------------------------
# incremental subgroup tracking for the enumeration


class _ClosureRegistry:
    """Interned subgroup lattice walker.

    Subgroups are bitmasks over element indices; ``extend(sid, x)`` returns
    the id of ``<S, x>`` with memoisation, so the exhaustive search pays a
    dictionary lookup per partial assignment instead of a closure.
    """

    __slots__ = ("G", "_ids", "_masks", "_gens", "_memo", "root", "_full")

    def __init__(self, G: FiniteGroup):
        self.G = G
        self._ids: dict[int, int] = {}
        self._masks: list[int] = []
        self._gens: list[tuple[int, ...]] = []
        self._memo: dict[tuple[int, int], int] = {}
        self._full = (1 << G.order) - 1
        self.root = self._intern(1 << G.identity, ())

    def _intern(self, mask: int, gens: tuple[int, ...]) -> int:
        sid = self._ids.get(mask)
        if sid is None:
            sid = len(self._masks)
            self._ids[mask] = sid
            self._masks.append(mask)
            self._gens.append(gens)
        return sid

    def extend(self, sid: int, x: int) -> int:
        key = (sid, x)
        out = self._memo.get(key)
        if out is None:
            if (self._masks[sid] >> x) & 1:
                out = sid
            else:
                gens = self._gens[sid] + (x,)
                members = _closure_indices(self.G.mul, list(gens), self.G.identity)
                mask = 0
                for m in members:
                    mask |= 1 << m
                out = self._intern(mask, gens)
            self._memo[key] = out
        return out

    def is_full(self, sid: int) -> bool:
        return self._masks[sid] == self._full


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _check_budget(G: FiniteGroup, sig: Signature, budget: int) -> None:
    exponent = len(sig.periods) - 1 + 2 * sig.h
    cost = G.order ** max(exponent, 0)
    if cost > budget:
        raise BudgetExceededError(
            f"enumeration cost |G|^{max(exponent, 0)} = {cost} exceeds the "
            f"budget {budget} for {G.family_tag} with signature {sig}"
        )


def _enumerate_elliptic_tuples(G: FiniteGroup, periods, budget: int) -> list[tuple[int, ...]]:
    """All valid elliptic tuples in the non-decreasing period arrangement,
    in lexicographic order.  The last entry is solved from the long relation."""
    l = len(periods)
    mul, inv = G.mul, G.inv
    ords = [element_order(G, x) for x in range(G.order)]
    cand = [sorted(elements_of_order(G, m)) for m in periods[:-1]]
    if any(not c for c in cand):
        return []
    last_period = periods[-1]
    reg = _ClosureRegistry(G)
    out: list[tuple[int, ...]] = []
    picked: list[int] = []

    def walk(slot: int, prefix: int, sid: int) -> None:
        if slot == l - 1:
            last = inv[prefix]
            if ords[last] == last_period and reg.is_full(reg.extend(sid, last)):
                out.append(tuple(picked) + (last,))
            return
        row_candidates = cand[slot]
        for v in row_candidates:
            picked.append(v)
            walk(slot + 1, mul[prefix][v], reg.extend(sid, v))
            picked.pop()

    walk(0, G.identity, reg.root)
    return out


def _enumerate_genus1(G: FiniteGroup, period: int) -> list[tuple[tuple[int, int], int]]:
    """All ``((a, b), x)`` with ``[a,b] x = 1`` in lexicographic order."""
    mul, inv = G.mul, G.inv
    ords = [element_order(G, x) for x in range(G.order)]
    reg = _ClosureRegistry(G)
    out = []
    for a in range(G.order):
        row_a = mul[a]
        sid_a = reg.extend(reg.root, a)
        for b in range(G.order):
            comm = mul[mul[row_a[b]][inv[a]]][inv[b]]
            x = inv[comm]
            if ords[x] != period:
                continue
            if reg.is_full(reg.extend(sid_a, b)):
                out.append(((a, b), x))
    return out


def enumerate_vectors(
    G: FiniteGroup, sig: Signature, budget: int = DEFAULT_BUDGET
) -> list[GeneratingVector]:
    """Every generating vector for ``(G, sig)``, deterministically ordered.

    Supports orbit genus 0 (any number of periods) and genus 1 with a
    single period.  The search cost ``|G|^(l - 1 + 2h)`` is checked against
    ``budget`` before starting.
    """
    _check_budget(G, sig, budget)
    if sig.h == 0:
        tuples = _enumerate_elliptic_tuples(G, sig.periods, budget)
        return [GeneratingVector(G, sig, (), t) for t in tuples]
    if sig.h == 1 and len(sig.periods) == 1:
        found = _enumerate_genus1(G, sig.periods[0])
        return [GeneratingVector(G, sig, (pair,), (x,)) for pair, x in found]
    raise ValueError(
        f"enumeration supports orbit genus 0, or genus 1 with one period; got {sig}"
    )


# ---------------------------------------------------------------------------
# braid moves and automorphism action


def braid_move(vec: GeneratingVector, i: int, direction: str = "forward") -> GeneratingVector:
    """Product-preserving move on adjacent elliptic entries ``(v_i, v_{i+1})``.

    ``forward`` sends the pair to ``(v_{i+1}, v_{i+1}^-1 v_i v_{i+1})``;
    ``backward`` is its inverse ``(v_i v_{i+1} v_i^-1, v_i)``.  Positions
    are 1-based with ``1 <= i <= l-1``.
    """
    l = len(vec.elliptic)
    if not 1 <= i <= l - 1:
        raise ValueError(f"braid position must satisfy 1 <= i <= {l - 1}, got {i}")
    if direction not in ("forward", "backward"):
        raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")
    mul, inv = vec.group.mul, vec.group.inv
    a, b = vec.elliptic[i - 1], vec.elliptic[i]
    if direction == "forward":
        pair = (b, mul[mul[inv[b]][a]][b])
    else:
        pair = (mul[mul[a][b]][inv[a]], a)
    elliptic = vec.elliptic[: i - 1] + pair + vec.elliptic[i + 1 :]
    return replace(vec, elliptic=elliptic)


def apply_automorphism(morphism: GroupMorphism, vec: GeneratingVector) -> GeneratingVector:
    """Entrywise image of the vector under a group automorphism."""
    if not morphism.is_automorphism:
        raise ValueError("the morphism is not an automorphism")
    if morphism.source.family_tag != vec.group.family_tag:
        raise ValueError(
            f"automorphism of {morphism.source.family_tag} cannot act on a vector "
            f"over {vec.group.family_tag}"
        )
    imgs = morphism.images
    return replace(
        vec,
        hyperbolic=tuple((imgs[a], imgs[b]) for a, b in vec.hyperbolic),
        elliptic=tuple(imgs[v] for v in vec.elliptic),
    )


def _generating_automorphism_images(G: FiniteGroup) -> list[tuple[int, ...]]:
    """A small subset of automorphism image-tables generating the full group
    of automorphisms under composition (closure is certified)."""
    all_images = [tuple(m.images) for m in automorphisms(G)]
    identity = tuple(range(G.order))
    gens: list[tuple[int, ...]] = []
    closed = {identity}
    for imgs in all_images:
        if imgs in closed:
            continue
        gens.append(imgs)
        frontier = list(closed)
        while frontier:
            base = frontier.pop()
            for g in gens:
                composed = tuple(g[x] for x in base)
                if composed not in closed:
                    closed.add(composed)
                    frontier.append(composed)
    if len(closed) != len(all_images):
        raise InvariantError("automorphism generator closure does not match the group")
    return gens


# ---------------------------------------------------------------------------
# orbit classification


def _expand_chunk(chunk, mul, inv, span, aut_images):
    out = []
    for t in chunk:
        for i in range(span):
            a, b = t[i], t[i + 1]
            head, tail = t[:i], t[i + 2 :]
            out.append(head + (b, mul[mul[inv[b]][a]][b]) + tail)
            out.append(head + (mul[mul[a][b]][inv[a]], a) + tail)
        for imgs in aut_images:
            out.append(tuple(imgs[x] for x in t))
    return out


@dataclass(frozen=True)
class ActionClass:
    """One equivalence class of vectors: canonical (lex-least reachable)
    representative, the number of enumerated vectors it absorbs, and the
    total enumerated vector count for context."""

    representative: GeneratingVector
    orbit_size: int
    total_vectors: int


def orbit_classes(
    G: FiniteGroup,
    sig: Signature,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> list[ActionClass]:
    """Partition all generating vectors into braid-plus-automorphism classes.

    Only orbit genus 0 is supported (the braid action is on elliptic
    entries).  The result is schedule-independent: identical for any
    ``workers`` value, sorted by representative.
    """
    if sig.h != 0:
        raise ValueError("orbit classification requires orbit genus 0 signatures")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    _check_budget(G, sig, budget)
    vectors = _enumerate_elliptic_tuples(G, sig.periods, budget)
    if not vectors:
        return []
    mul, inv = G.mul, G.inv
    span = len(sig.periods) - 1
    aut_images = _generating_automorphism_images(G)
    enumerated = set(vectors)
    assigned: set[tuple[int, ...]] = set()
    classes: list[ActionClass] = []
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for seed in vectors:
            if seed in assigned:
                continue
            orbit = {seed}
            frontier = [seed]
            while frontier:
                if pool is not None and len(frontier) > 4096:
                    step = (len(frontier) + workers - 1) // workers
                    chunks = [frontier[k : k + step] for k in range(0, len(frontier), step)]
                    results = pool.map(
                        _expand_chunk,
                        chunks,
                        [mul] * len(chunks),
                        [inv] * len(chunks),
                        [span] * len(chunks),
                        [aut_images] * len(chunks),
                    )
                    successors = [t for part in results for t in part]
                else:
                    successors = _expand_chunk(frontier, mul, inv, span, aut_images)
                frontier = []
                for t in successors:
                    if t not in orbit:
                        orbit.add(t)
                        frontier.append(t)
            members = orbit & enumerated
            if seed not in members:
                raise InvariantError("orbit closure lost its seed")
            if members & assigned:
                raise InvariantError("orbits are not disjoint")
            assigned |= members
            rep = min(orbit)
            classes.append(
                ActionClass(
                    representative=GeneratingVector(G, sig, (), rep),
                    orbit_size=len(members),
                    total_vectors=len(vectors),
                )
            )
    finally:
        if pool is not None:
            pool.shutdown()
    if sum(c.orbit_size for c in classes) != len(vectors):
        raise InvariantError("class sizes do not add up to the vector count")
    classes.sort(key=lambda c: c.representative.elliptic)
    return classes


def action_genus(vec: GeneratingVector) -> int:
    """Genus of the surface the action lives on (Riemann-Hurwitz)."""
    return rh_genus(vec.signature, vec.group.order)


def vector_to_json(vec: GeneratingVector) -> dict:
    """JSON-ready form: signature string plus normal-form element labels."""
    return {
        "signature": str(vec.signature),
        "hyperbolic": [
            [vec.group.label(a), vec.group.label(b)] for a, b in vec.hyperbolic
        ],
        "elliptic": [vec.group.label(v) for v in vec.elliptic],
        "genus": vec.genus(),
    }
