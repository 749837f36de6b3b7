"""Finite groups as multiplication tables with labeled symmetric generating sets.

Elements are dense integer ids 0..order-1.  Every constructed group is
verified: two-sided identity, two-sided inverses, associativity (full
O(order^3) check up to a size threshold, random spot checks above), a
symmetric generating set, and generation of the whole group by closure.
Generator labels are the letters that words over the group are written in,
so they round-trip through the text formats bit-exactly.
"""

from __future__ import annotations

import random
import string
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .free_words import Alphabet, MonoidWord

__all__ = [
    "FiniteGroup",
    "CapExceeded",
    "DEFAULT_CAP",
    "cyclic",
    "dihedral",
    "sym3_fink",
    "direct_product",
    "abelian_group",
    "evaluate",
    "commutator_set",
    "commutator_subgroup",
    "commutator_width",
    "group_from_spec",
    "group_to_spec",
]

DEFAULT_CAP = 512
# full O(order^3) associativity verification below this size, spot checks above
_FULL_VERIFY_LIMIT = 512
_SPOT_CHECK_TRIPLES = 2000


class CapExceeded(RuntimeError):
    """A construction or search exceeded its configured resource cap."""


@dataclass
class FiniteGroup:
    """Multiplication-table group with a distinguished symmetric generating set.

    ``gens`` is an ordered list of (label, element id); for every generator
    the inverse element is also present, labeled either the same (for
    involutions) or with a ``^-1`` suffix.  Treat instances as immutable.
    """

    table: list[list[int]]
    gens: list[tuple[str, int]]
    name: str = "group"
    identity: int = field(init=False)
    inverse: list[int] = field(init=False)
    labels: dict[str, int] = field(init=False)

    def __post_init__(self) -> None:
        self.order = len(self.table)
        self._verify_table()
        self.labels = {}
        for label, g in self.gens:
            if label in self.labels:
                raise ValueError(f"duplicate generator label {label!r}")
            if not 0 <= g < self.order:
                raise ValueError(f"generator id {g} out of range")
            self.labels[label] = g
        self._verify_gens()

    # -- verification -------------------------------------------------

    def _verify_table(self) -> None:
        n = self.order
        if n == 0:
            raise ValueError("empty multiplication table")
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"table entry {x} out of range")
        ids = [e for e in range(n) if all(self.table[e][g] == g == self.table[g][e] for g in range(n))]
        if len(ids) != 1:
            raise ValueError("table has no unique two-sided identity")
        self.identity = ids[0]
        inverse = [-1] * n
        for g in range(n):
            hs = [h for h in range(n) if self.table[g][h] == self.identity == self.table[h][g]]
            if len(hs) != 1:
                raise ValueError(f"element {g} lacks a unique two-sided inverse")
            inverse[g] = hs[0]
        self.inverse = inverse
        arr = np.asarray(self.table, dtype=np.int64)
        if n <= _FULL_VERIFY_LIMIT:
            for a in range(n):
                if not np.array_equal(arr[arr[a], :], arr[a][arr]):
                    raise ValueError(f"table is not associative (witness a={a})")
        else:
            rng = random.Random(0xA550C)
            for _ in range(_SPOT_CHECK_TRIPLES):
                a, b, c = (rng.randrange(n) for _ in range(3))
                if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                    raise ValueError(f"table is not associative (witness {(a, b, c)})")

    def _verify_gens(self) -> None:
        ids = {g for _, g in self.gens}
        for g in ids:
            if self.inverse[g] not in ids:
                raise ValueError(f"generating set not symmetric: inverse of {g} missing")
        reached = {self.identity}
        queue = deque([self.identity])
        while queue:
            g = queue.popleft()
            for _, a in self.gens:
                h = self.table[g][a]
                if h not in reached:
                    reached.add(h)
                    queue.append(h)
        if len(reached) != self.order:
            raise ValueError("generators do not generate the group")

    # -- arithmetic ----------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def element_order(self, g: int) -> int:
        n, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            n += 1
        return n

    def alphabet(self) -> Alphabet:
        letters = tuple(label for label, _ in self.gens)
        involution = {}
        id_to_label = {g: label for label, g in reversed(self.gens)}
        for label, g in self.gens:
            involution[label] = id_to_label[self.inverse[g]]
        return Alphabet(letters, involution)

    def shortest_label_word(self, g: int) -> str:
        """Canonical product expression for g: '*'-joined generator labels
        of a shortest word (BFS, generators in listed order); '1' for the
        identity."""
        if g == self.identity:
            return "1"
        parent: dict[int, tuple[int, str]] = {self.identity: (-1, "")}
        queue = deque([self.identity])
        while queue:
            h = queue.popleft()
            for label, a in self.gens:
                nxt = self.table[h][a]
                if nxt not in parent:
                    parent[nxt] = (h, label)
                    if nxt == g:
                        queue.clear()
                        break
                    queue.append(nxt)
        if g not in parent:
            raise ValueError(f"element {g} not generated")
        labels: list[str] = []
        cur = g
        while cur != self.identity:
            cur, label = parent[cur]
            labels.append(label)
        return "*".join(reversed(labels))

    def element_from_label_word(self, text: str) -> int:
        text = text.strip()
        if text in ("", "1"):
            return self.identity
        g = self.identity
        for label in text.split("*"):
            if label not in self.labels:
                raise ValueError(f"unknown generator label {label!r}")
            g = self.table[g][self.labels[label]]
        return g


def evaluate(G: FiniteGroup, w: MonoidWord) -> int:
    """The monoid homomorphism from words over G's generator labels to G."""
    g = G.identity
    for letter in w.letters:
        if letter not in G.labels:
            raise ValueError(f"unknown generator label {letter!r}")
        g = G.table[g][G.labels[letter]]
    return g


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def _check_cap(order: int, cap: int, what: str) -> None:
    if order > cap:
        raise CapExceeded(f"{what}: order {order} exceeds cap {cap}")


def _paired_gens(elems: list[tuple[str, int]], inverse: list[int]) -> list[tuple[str, int]]:
    # append ^-1 partners for non-involutions
    out: list[tuple[str, int]] = []
    for label, g in elems:
        out.append((label, g))
        if inverse[g] != g:
            out.append((label + "^-1", inverse[g]))
    return out


def cyclic(m: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Cyclic group of order m, generator label 'a'."""
    if m < 1:
        raise ValueError("order must be positive")
    _check_cap(m, cap, "cyclic")
    table = [[(i + j) % m for j in range(m)] for i in range(m)]
    inverse = [(-i) % m for i in range(m)]
    gens = _paired_gens([("a", 1)], inverse) if m > 1 else []
    return FiniteGroup(table, gens, name=f"C{m}")


def dihedral(m: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Dihedral group of order 2m: rotation 'r' (omitted if trivial) and
    reflection 's'.  Element (i, j) = r^i s^j has id j*m + i."""
    if m < 1:
        raise ValueError("m must be positive")
    _check_cap(2 * m, cap, "dihedral")

    def eid(i: int, j: int) -> int:
        return (j % 2) * m + (i % m)

    table = [[0] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        for j in range(2):
            for k in range(m):
                for l in range(2):
                    # r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
                    table[eid(i, j)][eid(k, l)] = eid(i + (k if j == 0 else -k), j + l)
    inverse = [next(h for h in range(2 * m) if table[g][h] == 0) for g in range(2 * m)]
    seed = ([("r", eid(1, 0))] if m >= 2 else []) + [("s", eid(0, 1))]
    return FiniteGroup(table, _paired_gens(seed, inverse), name=f"D{m}")


def sym3_fink(cap: int = DEFAULT_CAP) -> FiniteGroup:
    """The symmetric group on three points with generating set
    {s1, s2, c, c^-1} where c = s1*s2 in the table."""
    _check_cap(6, cap, "sym3_fink")
    # permutations of (0,1,2); product p*q acts as p after q on points
    def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(q[p[i]] for i in range(3))

    e = (0, 1, 2)
    s1 = (1, 0, 2)
    s2 = (0, 2, 1)
    c = compose(s1, s2)
    elems = [e, s1, s2, c, compose(s2, s1), compose(s1, compose(s2, s1))]
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[compose(p, q)] for q in elems] for p in elems]
    gens = [("s1", 1), ("s2", 2), ("c", 3), ("c^-1", 4)]
    return FiniteGroup(table, gens, name="S3")


_FRESH_LETTERS = string.ascii_lowercase


def _base_label(label: str) -> str:
    return label[:-3] if label.endswith("^-1") else label


def direct_product(G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Direct product; the generating set is the union of the embedded
    factor generating sets, with H's labels relabeled to fresh letters on
    collision."""
    order = G.order * H.order
    _check_cap(order, cap, "direct_product")

    def eid(a: int, b: int) -> int:
        return a * H.order + b

    table = [
        [eid(G.table[a1][a2], H.table[b1][b2]) for a2 in range(G.order) for b2 in range(H.order)]
        for a1 in range(G.order)
        for b1 in range(H.order)
    ]
    used = {_base_label(label) for label, _ in G.gens}
    fresh = iter(l for l in _FRESH_LETTERS if l not in used)
    rename: dict[str, str] = {}
    for label, _ in H.gens:
        base = _base_label(label)
        if base not in rename:
            rename[base] = next(fresh) if base in used else base
            used.add(rename[base])
    gens = [(label, eid(g, H.identity)) for label, g in G.gens]
    gens += [
        (rename[_base_label(label)] + ("^-1" if label.endswith("^-1") else ""), eid(G.identity, h))
        for label, h in H.gens
    ]
    return FiniteGroup(table, gens, name=f"{G.name}x{H.name}")


def abelian_group(moduli: list[int], cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Direct product of cyclic groups, one lettered generator per factor."""
    if not moduli:
        raise ValueError("at least one cyclic factor required")
    G = cyclic(moduli[0], cap=cap)
    for m in moduli[1:]:
        G = direct_product(G, cyclic(m, cap=cap), cap=cap)
    return G


# ---------------------------------------------------------------------------
# commutators
# ---------------------------------------------------------------------------


def commutator_set(G: FiniteGroup) -> set[int]:
    """{[g, h] : g, h in G} with [g, h] = g^-1 h^-1 g h."""
    out = set()
    for g in range(G.order):
        gi = G.inverse[g]
        for h in range(G.order):
            out.add(G.table[G.table[G.table[gi][G.inverse[h]]][g]][h])
    return out


def commutator_subgroup(G: FiniteGroup) -> set[int]:
    """Subgroup generated by all commutators (closure under products)."""
    comms = commutator_set(G)
    sub = {G.identity}
    queue = deque([G.identity])
    while queue:
        g = queue.popleft()
        for c in comms:
            h = G.table[g][c]
            if h not in sub:
                sub.add(h)
                queue.append(h)
    return sub


def commutator_width(G: FiniteGroup) -> int:
    """Exact commutator width by product-set covering of the derived
    subgroup; 0 when the derived subgroup is trivial."""
    comms = commutator_set(G)
    derived = commutator_subgroup(G)
    covered = {G.identity}
    width = 0
    while covered != derived:
        covered = {G.table[g][c] for g in covered for c in comms}
        width += 1
    return width


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> list[int] | None:
    """An isomorphism G -> H as an id permutation, or None.

    Backtracks over images of G's generators among H-elements of equal
    order, extending each partial assignment multiplicatively.  Intended
    for small orders (the sandwich and identification checks).
    """
    if G.order != H.order:
        return None
    if sorted(map(G.element_order, G.elements())) != sorted(map(H.element_order, H.elements())):
        return None
    gen_ids: list[int] = []
    for _, g in G.gens:
        if g not in gen_ids:
            gen_ids.append(g)
    by_order: dict[int, list[int]] = {}
    for h in H.elements():
        by_order.setdefault(H.element_order(h), []).append(h)

    def close(assign: dict[int, int]) -> dict[int, int] | None:
        # close the partial generator map under products; None on clash
        phi = {G.identity: H.identity}
        used = {H.identity}
        queue = deque([G.identity])
        while queue:
            x = queue.popleft()
            for g, h in assign.items():
                xg, yh = G.table[x][g], H.table[phi[x]][h]
                if xg in phi:
                    if phi[xg] != yh:
                        return None
                elif yh in used:
                    return None
                else:
                    phi[xg] = yh
                    used.add(yh)
                    queue.append(xg)
        return phi

    def search(k: int, assign: dict[int, int]) -> list[int] | None:
        phi = close(assign)
        if phi is None:
            return None
        if k == len(gen_ids):
            if len(phi) < G.order:
                return None
            perm = [phi[g] for g in range(G.order)]
            ok = all(
                H.table[perm[a]][perm[b]] == perm[G.table[a][b]]
                for a in range(G.order)
                for b in range(G.order)
            )
            return perm if ok else None
        g = gen_ids[k]
        if g in phi:
            # image already forced by earlier assignments
            assign[g] = phi[g]
            result = search(k + 1, assign)
            del assign[g]
            return result
        for h in by_order[G.element_order(g)]:
            assign[g] = h
            result = search(k + 1, assign)
            if result is not None:
                return result
            del assign[g]
        return None

    return search(0, {})


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


# ---------------------------------------------------------------------------
# JSON group specs (the CLI input contract)
# ---------------------------------------------------------------------------


def group_from_spec(spec: dict, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build a group from its JSON spec.

    Kinds: {"kind": "cyclic", "n": m}, {"kind": "dihedral", "n": m},
    {"kind": "sym3_fink"}, {"kind": "direct_product", "factors": [...]},
    {"kind": "table", "table": [[...]], "gens": [["a", 1], ...]}.
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ValueError("group spec must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "cyclic":
        return cyclic(int(spec["n"]), cap=cap)
    if kind == "dihedral":
        return dihedral(int(spec["n"]), cap=cap)
    if kind == "sym3_fink":
        return sym3_fink(cap=cap)
    if kind == "direct_product":
        factors = spec.get("factors", [])
        if len(factors) < 2:
            raise ValueError("direct_product needs at least two factors")
        G = group_from_spec(factors[0], cap=cap)
        for f in factors[1:]:
            G = direct_product(G, group_from_spec(f, cap=cap), cap=cap)
        return G
    if kind == "table":
        table = [[int(x) for x in row] for row in spec["table"]]
        _check_cap(len(table), cap, "table group")
        gens = [(str(label), int(g)) for label, g in spec["gens"]]
        return FiniteGroup(table, gens, name=str(spec.get("name", "table")))
    raise ValueError(f"unknown group kind {kind!r}")


def group_to_spec(G: FiniteGroup) -> dict:
    """Normalized explicit-table spec; parses back to an identical group."""
    return {
        "kind": "table",
        "name": G.name,
        "table": [list(row) for row in G.table],
        "gens": [[label, g] for label, g in G.gens],
    }
