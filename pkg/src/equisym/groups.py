"""Finite groups as dense multiplication tables with named generators.

Elements are indices ``0 .. order-1``.  Every constructor attaches a
normal-form label to each index (``"a^2 b"``, ``"r^5 s"``, ...) so reports
never expose raw indices, and a ``family_tag`` string from which
:func:`build_group` can rebuild the group.

Construction is validated: two-sided identity, Latin-square rows and
columns, two-sided inverses, generation by the named generators, and
associativity via Light's test over the generator set.  Light's test
checks ``(a*s)*b == a*(s*b)`` for every ``a``, ``b`` and every generator
``s``; once the generators generate the table this certifies associativity
for all triples.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

from .arith import multiplicative_order
from .errors import BudgetExceededError, InvariantError

MAX_ORDER = 4096

# Brute-force morphism searches refuse groups above this order.
ISO_ORDER_BUDGET = 512
# ... and candidate-image products above this count.
ISO_CANDIDATE_BUDGET = 5_000_000

__all__ = [
    "FiniteGroup",
    "SubgroupHandle",
    "GroupMorphism",
    "MAX_ORDER",
    "build_group",
    "cyclic",
    "dihedral",
    "metacyclic",
    "q8_times_cyclic",
    "dihedral2_semidirect",
    "direct_product",
    "standard_name",
    "element_order",
    "elements_of_order",
    "exponent",
    "power",
    "subgroup_generated",
    "subgroup_as_group",
    "commutator_subgroup",
    "conjugacy_classes",
    "class_index",
    "automorphisms",
    "make_morphism",
    "are_isomorphic",
    "is_abelian",
]


def _format_word(terms) -> str:
    parts = []
    for symbol, exp in terms:
        if exp == 0:
            continue
        parts.append(symbol if exp == 1 else f"{symbol}^{exp}")
    return " ".join(parts) if parts else "1"


def _closure_indices(mul, seeds, identity: int = 0) -> list[int]:
    """Subgroup generated by ``seeds``: BFS over right multiplication.

    Needs no associativity assumptions beyond the table itself, so it is
    safe to use during construction-time validation.
    """
    n = len(mul)
    seen = bytearray(n)
    seen[identity] = 1
    out = [identity]
    for x in out:
        row = mul[x]
        for g in seeds:
            y = row[g]
            if not seen[y]:
                seen[y] = 1
                out.append(y)
    return out


class FiniteGroup:
    """A finite group given by its full multiplication table.

    Attributes:
        order: number of elements.
        mul: ``mul[a][b]`` is the index of the product ``a * b``.
        inv: ``inv[a]`` is the inverse of ``a``.
        identity: index of the neutral element (0 for all built families).
        generators: mapping ``name -> element index``; the named generators
            provably generate the group.
        element_label: normal-form word for each index (pairwise distinct).
        family_tag: canonical constructor string, e.g. ``"dihedral:22"``.
    """

    __slots__ = (
        "order",
        "mul",
        "inv",
        "identity",
        "generators",
        "element_label",
        "family_tag",
        "_cache",
    )

    def __init__(self, mul, generators, element_label, family_tag, identity=0):
        n = len(mul)
        if n == 0 or n > MAX_ORDER:
            raise ValueError(f"group order {n} outside supported range 1..{MAX_ORDER}")
        self.order = n
        self.mul = mul
        self.identity = identity
        self.generators = dict(generators)
        self.element_label = list(element_label)
        self.family_tag = family_tag
        self._cache = {}
        self._validate()

    # -- validation -------------------------------------------------------

    def _validate(self) -> None:
        n, mul, e = self.order, self.mul, self.identity
        if len(self.element_label) != n or len(set(self.element_label)) != n:
            raise InvariantError("element labels must be pairwise distinct")
        if any(len(row) != n for row in mul):
            raise InvariantError("multiplication table is not square")
        ident_range = list(range(n))
        if mul[e] != ident_range or [row[e] for row in mul] != ident_range:
            raise InvariantError("identity element is not two-sided neutral")
        for a, row in enumerate(mul):
            if sorted(row) != ident_range:
                raise InvariantError(f"row {a} is not a permutation")
        for b in range(n):
            col = [mul[a][b] for a in range(n)]
            if sorted(col) != ident_range:
                raise InvariantError(f"column {b} is not a permutation")
        inv = [0] * n
        for a, row in enumerate(mul):
            b = row.index(e)
            if mul[b][a] != e:
                raise InvariantError(f"element {a} has no two-sided inverse")
            inv[a] = b
        self.inv = inv
        gens = sorted(set(self.generators.values()))
        if not gens and n > 1:
            raise InvariantError("no generators named")
        if len(_closure_indices(mul, gens, e)) != n:
            raise InvariantError("named generators do not generate the group")
        for s in gens:
            row_s = mul[s]
            for a in range(n):
                row_a = mul[a]
                if mul[row_a[s]] != [row_a[x] for x in row_s]:
                    raise InvariantError("multiplication table is not associative")

    # -- basic queries ------------------------------------------------------

    def label(self, a: int) -> str:
        return self.element_label[a]

    def labels(self, elems) -> list[str]:
        return [self.element_label[a] for a in elems]

    def generator(self, name: str) -> int:
        return self.generators[name]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FiniteGroup({self.family_tag}, order={self.order})"


# -- element-level operations ---------------------------------------------


def _orders(G: FiniteGroup) -> list[int]:
    cached = G._cache.get("orders")
    if cached is None:
        mul, e = G.mul, G.identity
        cached = [0] * G.order
        cached[e] = 1
        for a in range(G.order):
            if a == e:
                continue
            k, x = 1, a
            while x != e:
                x = mul[x][a]
                k += 1
            cached[a] = k
        G._cache["orders"] = cached
    return cached


def element_order(G: FiniteGroup, a: int) -> int:
    return _orders(G)[a]


def elements_of_order(G: FiniteGroup, k: int) -> tuple[int, ...]:
    orders = _orders(G)
    return tuple(a for a in range(G.order) if orders[a] == k)


def exponent(G: FiniteGroup) -> int:
    cached = G._cache.get("exponent")
    if cached is None:
        cached = 1
        for k in set(_orders(G)):
            cached = cached * k // math.gcd(cached, k)
        G._cache["exponent"] = cached
    return cached


def power(G: FiniteGroup, a: int, k: int) -> int:
    if k < 0:
        a, k = G.inv[a], -k
    x, mul = G.identity, G.mul
    for _ in range(k % element_order(G, a) if k else 0):
        x = mul[x][a]
    return x


def is_abelian(G: FiniteGroup) -> bool:
    cached = G._cache.get("abelian")
    if cached is None:
        mul = G.mul
        cached = all(
            mul[a][b] == mul[b][a] for a in range(G.order) for b in range(a)
        )
        G._cache["abelian"] = cached
    return cached


# -- subgroups --------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupHandle:
    """A validated subgroup: element set closed under product and inverse."""

    group: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        G = self.group
        elems = self.elements
        if tuple(sorted(set(elems))) != elems:
            raise InvariantError("subgroup elements must be sorted and distinct")
        member = set(elems)
        if G.identity not in member:
            raise InvariantError("subgroup must contain the identity")
        mul, inv = G.mul, G.inv
        for a in elems:
            if inv[a] not in member:
                raise InvariantError("subgroup not closed under inverse")
            row = mul[a]
            for b in elems:
                if row[b] not in member:
                    raise InvariantError("subgroup not closed under product")
        if G.order % len(elems):
            raise InvariantError("subgroup order does not divide the group order")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.group.order // len(self.elements)


def subgroup_generated(G: FiniteGroup, seeds) -> SubgroupHandle:
    elems = _closure_indices(G.mul, sorted(set(seeds)), G.identity)
    return SubgroupHandle(G, tuple(sorted(elems)))


def commutator_subgroup(G: FiniteGroup) -> SubgroupHandle:
    mul, inv = G.mul, G.inv
    comms = {
        mul[mul[a][b]][inv[mul[b][a]]]
        for a in range(G.order)
        for b in range(G.order)
    }
    return subgroup_generated(G, comms)


def subgroup_as_group(H: SubgroupHandle) -> FiniteGroup:
    """Realize a subgroup as a standalone group, reusing parent labels."""
    G = H.group
    elems = H.elements
    pos = {a: i for i, a in enumerate(elems)}
    mul = [[pos[G.mul[a][b]] for b in elems] for a in elems]
    labels = [G.element_label[a] for a in elems]
    # Greedy minimal generating sequence, in element order.
    gens: list[int] = []
    covered = 1
    for i in range(len(elems)):
        if covered == len(elems):
            break
        trial = gens + [i]
        size = len(_closure_indices(mul, trial))
        if size > covered:
            gens = trial
            covered = size
    generators = {labels[i]: i for i in gens} or {labels[0]: 0}
    tag = f"subgroup[{len(elems)}]of({G.family_tag})"
    return FiniteGroup(mul, generators, labels, tag)


# -- conjugacy ---------------------------------------------------------------


def conjugacy_classes(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Conjugacy classes as sorted tuples, ordered by least member."""
    cached = G._cache.get("classes")
    if cached is None:
        n, mul, inv = G.order, G.mul, G.inv
        assigned = [False] * n
        classes = []
        for a in range(n):
            if assigned[a]:
                continue
            orbit = {mul[mul[g][a]][inv[g]] for g in range(n)}
            for x in orbit:
                assigned[x] = True
            classes.append(tuple(sorted(orbit)))
        cached = tuple(classes)
        G._cache["classes"] = cached
    return cached


def class_index(G: FiniteGroup) -> list[int]:
    """Map element index -> index of its conjugacy class."""
    cached = G._cache.get("class_index")
    if cached is None:
        cached = [0] * G.order
        for ci, cls in enumerate(conjugacy_classes(G)):
            for a in cls:
                cached[a] = ci
        G._cache["class_index"] = cached
    return cached


# -- morphisms ---------------------------------------------------------------


@dataclass(frozen=True)
class GroupMorphism:
    """A verified homomorphism given by its full image array.

    Instances are produced by :func:`make_morphism` (or the automorphism
    search), which checks ``f(a*s) == f(a)*f(s)`` for every element ``a``
    and every named generator ``s`` of the source.  Because the named
    generators generate the source, this forces multiplicativity for all
    pairs.
    """

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]
    injective: bool
    surjective: bool

    @property
    def is_automorphism(self) -> bool:
        return self.source is self.target and self.injective and self.surjective

    def __call__(self, a: int) -> int:
        return self.images[a]


def _bfs_tree(G: FiniteGroup):
    """BFS spanning data: (gen index list, [(elem, parent, genpos), ...])."""
    cached = G._cache.get("bfs_tree")
    if cached is None:
        gens = sorted(set(G.generators.values()))
        mul, e = G.mul, G.identity
        seen = bytearray(G.order)
        seen[e] = 1
        order = [e]
        tree = []
        for x in order:
            row = mul[x]
            for gpos, g in enumerate(gens):
                y = row[g]
                if not seen[y]:
                    seen[y] = 1
                    order.append(y)
                    tree.append((y, x, gpos))
        cached = (gens, tree)
        G._cache["bfs_tree"] = cached
    return cached


def _images_from_generators(G: FiniteGroup, H: FiniteGroup, gen_images):
    gens, tree = _bfs_tree(G)
    img = [0] * G.order
    img[G.identity] = H.identity
    hmul = H.mul
    for elem, parent, gpos in tree:
        img[elem] = hmul[img[parent]][gen_images[gpos]]
    return img


def _check_multiplicative(G: FiniteGroup, H: FiniteGroup, img) -> bool:
    gens, _ = _bfs_tree(G)
    mul, hmul, n = G.mul, H.mul, G.order
    for s in gens:
        hs = img[s]
        if [img[mul[a][s]] for a in range(n)] != [hmul[img[a]][hs] for a in range(n)]:
            return False
    return True


def make_morphism(G: FiniteGroup, H: FiniteGroup, images) -> GroupMorphism:
    """Validate an image array and wrap it as a GroupMorphism."""
    images = tuple(images)
    if len(images) != G.order:
        raise ValueError("image array length must equal the source order")
    if images[G.identity] != H.identity:
        raise ValueError("identity must map to identity")
    if not _check_multiplicative(G, H, images):
        raise ValueError("map is not a homomorphism")
    distinct = len(set(images))
    return GroupMorphism(
        G, H, images, injective=distinct == G.order, surjective=distinct == H.order
    )


def _candidate_gen_images(G: FiniteGroup, H: FiniteGroup):
    gens, _ = _bfs_tree(G)
    horders = _orders(H)
    cands = []
    for g in gens:
        k = element_order(G, g)
        cands.append([h for h in range(H.order) if horders[h] == k])
    total = 1
    for c in cands:
        total *= len(c)
        if total > ISO_CANDIDATE_BUDGET:
            raise BudgetExceededError(
                "generator-image search space exceeds the brute-force budget"
            )
    return gens, cands


def automorphisms(G: FiniteGroup) -> list[GroupMorphism]:
    """All automorphisms, by exhaustive generator-image search.

    Deterministic: results are sorted by image array.
    """
    cached = G._cache.get("automorphisms")
    if cached is not None:
        return cached
    if G.order > ISO_ORDER_BUDGET:
        raise BudgetExceededError(
            f"automorphism search limited to order <= {ISO_ORDER_BUDGET}"
        )
    _, cands = _candidate_gen_images(G, G)
    n = G.order
    found = []
    for gen_images in itertools.product(*cands):
        img = _images_from_generators(G, G, gen_images)
        if len(set(img)) != n:
            continue
        if not _check_multiplicative(G, G, img):
            continue
        found.append(tuple(img))
    found.sort()
    result = [
        GroupMorphism(G, G, img, injective=True, surjective=True) for img in found
    ]
    identity_imgs = tuple(range(n))
    if identity_imgs not in set(found):
        raise InvariantError("automorphism search missed the identity map")
    G._cache["automorphisms"] = result
    return result


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Exhaustive isomorphism test with order-profile pruning."""
    if G.order != H.order:
        return False
    if G.order > ISO_ORDER_BUDGET or H.order > ISO_ORDER_BUDGET:
        raise BudgetExceededError(
            f"isomorphism search limited to order <= {ISO_ORDER_BUDGET}"
        )
    if sorted(_orders(G)) != sorted(_orders(H)):
        return False
    if is_abelian(G) != is_abelian(H):
        return False
    _, cands = _candidate_gen_images(G, H)
    n = G.order
    for gen_images in itertools.product(*cands):
        img = _images_from_generators(G, H, gen_images)
        if len(set(img)) != n:
            continue
        if _check_multiplicative(G, H, img):
            return True
    return False


# -- constructors ------------------------------------------------------------


def cyclic(n: int, symbol: str = "g") -> FiniteGroup:
    if n < 1 or n > MAX_ORDER:
        raise ValueError(f"cyclic order must be in 1..{MAX_ORDER}, got {n}")
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = [_format_word([(symbol, a)]) for a in range(n)]
    return FiniteGroup(mul, {symbol: 1 % n}, labels, f"cyclic:{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: <r, s | r^n = s^2 = (sr)^2 = 1>."""
    if n < 2 or 2 * n > MAX_ORDER:
        raise ValueError(f"dihedral parameter must be in 2..{MAX_ORDER // 2}, got {n}")

    def enc(i, e):
        return e * n + i

    mul = []
    for e1 in (0, 1):
        for i1 in range(n):
            row = [0] * (2 * n)
            for e2 in (0, 1):
                for i2 in range(n):
                    i = (i1 + (-i2 if e1 else i2)) % n
                    row[enc(i2, e2)] = enc(i, e1 ^ e2)
            mul.append(row)
    # rows above were appended in (e1, i1) order matching enc
    labels = [
        _format_word([("r", i), ("s", e)]) for e in (0, 1) for i in range(n)
    ]
    gens = {"r": enc(1, 0), "s": enc(0, 1)}
    return FiniteGroup(mul, gens, labels, f"dihedral:{n}")


def metacyclic(q: int, m: int, u: int, symbols=("a", "b")) -> FiniteGroup:
    """Split metacyclic group C_q x| C_m with b a b^-1 = a^u.

    Requires u^m = 1 mod q so that the presentation defines a group of
    order q*m.
    """
    if q < 2 or m < 2:
        raise ValueError("metacyclic parameters require q >= 2 and m >= 2")
    if q * m > MAX_ORDER:
        raise ValueError(f"order {q * m} exceeds {MAX_ORDER}")
    u %= q
    if pow(u, m, q) != 1:
        raise ValueError(f"u={u} violates u^{m} = 1 mod {q}")
    sa, sb = symbols
    upow = [pow(u, j, q) for j in range(m)]

    def enc(i, j):
        return i * m + j

    mul = []
    for i1 in range(q):
        for j1 in range(m):
            uj = upow[j1]
            row = [0] * (q * m)
            for i2 in range(q):
                i = (i1 + uj * i2) % q
                for j2 in range(m):
                    row[enc(i2, j2)] = enc(i, (j1 + j2) % m)
            mul.append(row)
    labels = [
        _format_word([(sa, i), (sb, j)]) for i in range(q) for j in range(m)
    ]
    gens = {sa: enc(1, 0), sb: enc(0, 1)}
    return FiniteGroup(mul, gens, labels, f"metacyclic:{q},{m},{u}")


def q8_times_cyclic(n: int) -> FiniteGroup:
    """Q8 x C_n with generators x, y (quaternion) and z (central, order n)."""
    if n < 1 or 8 * n > MAX_ORDER:
        raise ValueError(f"q8xc parameter must be in 1..{MAX_ORDER // 8}, got {n}")

    def q8mul(i1, e1, i2, e2):
        i = (i1 + (-i2 if e1 else i2) + (2 if e1 and e2 else 0)) % 4
        return i, e1 ^ e2

    def enc(i, e, k):
        return (i * 2 + e) * n + k

    mul = []
    for i1 in range(4):
        for e1 in (0, 1):
            for k1 in range(n):
                row = [0] * (8 * n)
                for i2 in range(4):
                    for e2 in (0, 1):
                        i, e = q8mul(i1, e1, i2, e2)
                        for k2 in range(n):
                            row[enc(i2, e2, k2)] = enc(i, e, (k1 + k2) % n)
                mul.append(row)
    labels = [
        _format_word([("x", i), ("y", e), ("z", k)])
        for i in range(4)
        for e in (0, 1)
        for k in range(n)
    ]
    gens = {"x": enc(1, 0, 0), "y": enc(0, 1, 0)}
    if n > 1:
        gens["z"] = enc(0, 0, 1)
    return FiniteGroup(mul, gens, labels, f"q8xc:{n}")


def dihedral2_semidirect(n: int, m: int) -> FiniteGroup:
    """Order 2^(n+2) group <r,s,t | r^(2^n)=s^2=(sr)^2=t^2=1, trt=r^m, tst=s>.

    Requires m^2 = 1 mod 2^n so that t^2 = 1 is consistent.
    """
    if n < 2 or 2 ** (n + 2) > MAX_ORDER:
        raise ValueError(f"d2semi parameter n must be in 2..10, got {n}")
    N = 2**n
    m %= N
    if (m * m) % N != 1:
        raise ValueError(f"m={m} violates m^2 = 1 mod 2^{n}")

    def enc(i, e, f):
        return (i * 2 + e) * 2 + f

    mul = []
    for i1 in range(N):
        for e1 in (0, 1):
            for f1 in (0, 1):
                scale = m if f1 else 1
                if e1:
                    scale = -scale
                row = [0] * (4 * N)
                for i2 in range(N):
                    i = (i1 + scale * i2) % N
                    for e2 in (0, 1):
                        for f2 in (0, 1):
                            row[enc(i2, e2, f2)] = enc(i, e1 ^ e2, f1 ^ f2)
                mul.append(row)
    labels = [
        _format_word([("r", i), ("s", e), ("t", f)])
        for i in range(N)
        for e in (0, 1)
        for f in (0, 1)
    ]
    gens = {"r": enc(1, 0, 0), "s": enc(0, 1, 0), "t": enc(0, 0, 1)}
    return FiniteGroup(mul, gens, labels, f"d2semi:{n},{m}")


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    """Direct product with lexicographic index pairing (last factor fastest)."""
    if len(factors) < 2:
        raise ValueError("direct_product needs at least two factors")
    order = 1
    for f in factors:
        order *= f.order
    if order > MAX_ORDER:
        raise ValueError(f"product order {order} exceeds {MAX_ORDER}")
    sizes = [f.order for f in factors]
    tuples = list(itertools.product(*[range(s) for s in sizes]))

    def enc(tup):
        idx = 0
        for k, s in zip(tup, sizes):
            idx = idx * s + k
        return idx

    muls = [f.mul for f in factors]
    mul = []
    for a in tuples:
        rows = [muls[k][a[k]] for k in range(len(factors))]
        mul.append([enc(tuple(rows[k][b[k]] for k in range(len(factors)))) for b in tuples])
    labels = [
        "(" + ", ".join(factors[k].element_label[t[k]] for k in range(len(factors))) + ")"
        for t in tuples
    ]
    # Embed each factor's generators; suffix names on collision.
    all_names = [name for f in factors for name in f.generators]
    gens = {}
    for k, f in enumerate(factors):
        for name, idx in f.generators.items():
            tup = tuple(idx if j == k else factors[j].identity for j in range(len(factors)))
            key = name if all_names.count(name) == 1 else f"{name}{k + 1}"
            gens[key] = enc(tup)
    tag = "x".join(f.family_tag for f in factors)
    return FiniteGroup(mul, gens, labels, tag)


# -- spec-string parsing -----------------------------------------------------

_FAMILIES = ("cyclic", "dihedral", "metacyclic", "q8xc", "d2semi")
_SPLIT = re.compile(r"x(?=(?:%s):)" % "|".join(_FAMILIES))


def _build_atom(atom: str) -> FiniteGroup:
    name, sep, argstr = atom.partition(":")
    if not sep or name not in _FAMILIES:
        raise ValueError(f"unknown group spec {atom!r}")
    try:
        args = [int(x) for x in argstr.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad parameters in group spec {atom!r}") from exc
    if name == "cyclic" and len(args) == 1:
        return cyclic(args[0])
    if name == "dihedral" and len(args) == 1:
        return dihedral(args[0])
    if name == "metacyclic" and len(args) == 3:
        return metacyclic(*args)
    if name == "q8xc" and len(args) == 1:
        return q8_times_cyclic(args[0])
    if name == "d2semi" and len(args) == 2:
        return dihedral2_semidirect(*args)
    raise ValueError(f"wrong parameter count in group spec {atom!r}")


def build_group(spec: str) -> FiniteGroup:
    """Build a group from a spec string.

    Atoms: ``cyclic:n``, ``dihedral:n``, ``metacyclic:q,m,u``, ``q8xc:n``,
    ``d2semi:n,m``.  Direct products join atoms with ``x``, e.g.
    ``cyclic:13xcyclic:2xcyclic:2``.
    """
    parts = _SPLIT.split(spec.strip())
    atoms = [_build_atom(p) for p in parts]
    return atoms[0] if len(atoms) == 1 else direct_product(*atoms)


def standard_name(G: FiniteGroup) -> str:
    """Conventional structure name derived from the family tag.

    Note ``dihedral:n`` has order 2n, so ``D26`` below names the dihedral
    group with 52 elements, and ``Cq:kCm`` denotes the split extension of
    C_q by C_m whose action has multiplicative order k.
    """
    parts = _SPLIT.split(G.family_tag)
    names = []
    for part in parts:
        fam, _, argstr = part.partition(":")
        args = [int(x) for x in argstr.split(",")] if argstr else []
        if fam == "cyclic":
            names.append(f"C{args[0]}")
        elif fam == "dihedral":
            names.append(f"D{args[0]}")
        elif fam == "metacyclic":
            q, m, u = args
            if u % q == 1:
                names.append(f"C{q}xC{m}")
            else:
                names.append(f"C{q}:{multiplicative_order(u, q)}C{m}")
        elif fam == "q8xc":
            names.append("Q8" if args[0] == 1 else f"Q8xC{args[0]}")
        elif fam == "d2semi":
            n, m = args
            base = f"D{2 ** n}"
            names.append(f"{base}xC2" if m % 2**n == 1 else f"{base}:C2(m={m})")
        else:
            names.append(part)
    if len(names) == 1:
        return names[0]
    return "x".join(name if ":" not in name else f"({name})" for name in names)
