"""Exact palindromic length and width for finite groups, both notions.

A word palindrome is a word equal to its own letter reversal; an element
is a word palindrome if some representative word is one.  An element is a
group palindrome if some representative word's reversal evaluates to the
same element.  Both element sets fall out of one reachability computation:
the set of pairs (value of w, value of reversed w) over all words w, which
is the least set containing (1, 1) closed under (g, h) -> (g*a, a*h).

Widths are then computed by product-set layering: S_0 = {1} and
S_{k+1} = S_k * P, where P is the palindrome element set.  Every generator
is a one-letter palindrome, so P generates the group and the layering
terminates with all palindromic lengths and the width in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .finite_groups import CapExceeded, FiniteGroup

__all__ = [
    "ReachablePairs",
    "WidthReport",
    "reachable_pairs",
    "palindrome_elements",
    "palindromic_length",
    "palindromic_width",
    "DEFAULT_STATE_CAP",
    "NOTIONS",
]

DEFAULT_STATE_CAP = 4_000_000
NOTIONS = ("word", "group")


def _check_notion(notion: str) -> None:
    if notion not in NOTIONS:
        raise ValueError(f"notion must be one of {NOTIONS}, got {notion!r}")


@dataclass
class ReachablePairs:
    """All pairs (value of w, value of reversed w) over words w in the
    generator letters."""

    group: FiniteGroup
    pairs: set[tuple[int, int]]


def reachable_pairs(G: FiniteGroup, state_cap: int = DEFAULT_STATE_CAP) -> ReachablePairs:
    """BFS closure of {(1, 1)} under (g, h) -> (g*a, a*h) for generators a."""
    n = G.order
    if n * n > state_cap:
        raise CapExceeded(
            f"pair reachability needs order^2 = {n * n} states, cap is {state_cap}; "
            f"raise the cap to proceed"
        )
    table = G.table
    gen_ids = [a for _, a in G.gens]
    e = G.identity
    seen = bytearray(n * n)
    seen[e * n + e] = 1
    frontier = [(e, e)]
    while frontier:
        new: list[tuple[int, int]] = []
        for g, h in frontier:
            row = table[g]
            for a in gen_ids:
                ga, ah = row[a], table[a][h]
                key = ga * n + ah
                if not seen[key]:
                    seen[key] = 1
                    new.append((ga, ah))
        frontier = new
    pairs = {(k // n, k % n) for k, bit in enumerate(seen) if bit}
    return ReachablePairs(G, pairs)


def palindrome_elements(
    G: FiniteGroup, notion: str, pairs: ReachablePairs | None = None
) -> set[int]:
    """Element set of palindromes under the given notion.

    word: values of u*reverse(u) and u*a*reverse(u) (even palindromes and
    palindromes with a center letter); group: elements g with some
    representative whose reversal also evaluates to g.
    """
    _check_notion(notion)
    if pairs is None:
        pairs = reachable_pairs(G)
    if pairs.group is not G:
        raise ValueError("pairs were computed for a different group")
    if notion == "group":
        return {g for g, h in pairs.pairs if g == h}
    table = G.table
    gen_ids = [a for _, a in G.gens]
    out: set[int] = set()
    for g, h in pairs.pairs:
        out.add(table[g][h])
        row = table[g]
        for a in gen_ids:
            out.add(table[row[a]][h])
    return out


@dataclass
class WidthReport:
    """Palindromic lengths of every element plus the width, one notion."""

    notion: str
    palindromes: set[int]
    lengths: dict[int, int]
    width: int
    layers: list[int] = field(default_factory=list)

    def to_json(self, include_lengths: bool = False) -> dict:
        out = {
            "notion": self.notion,
            "width": self.width,
            "palindrome_count": len(self.palindromes),
            "layers": list(self.layers),
        }
        if include_lengths:
            out["lengths"] = {str(g): k for g, k in sorted(self.lengths.items())}
        return out


def palindromic_width(
    G: FiniteGroup, notion: str, state_cap: int = DEFAULT_STATE_CAP
) -> WidthReport:
    """Layered covering of G by products of palindromes; exact lengths."""
    _check_notion(notion)
    pal = palindrome_elements(G, notion, reachable_pairs(G, state_cap))
    table = G.table
    lengths = {G.identity: 0}
    covered = {G.identity}
    layers = [1]
    k = 0
    while len(covered) < G.order:
        k += 1
        new = {table[g][p] for g in covered for p in pal} - covered
        if not new:
            raise AssertionError("palindrome covering stalled before exhausting the group")
        for g in new:
            lengths[g] = k
        covered |= new
        layers.append(len(covered))
    width = max(lengths.values())
    return WidthReport(notion, pal, lengths, width, layers)


def palindromic_length(
    G: FiniteGroup, notion: str, g: int, state_cap: int = DEFAULT_STATE_CAP
) -> int:
    return palindromic_width(G, notion, state_cap).lengths[g]
