"""Words over single-letter generator alphabets.

A word is stored flat (``"raa"``) with the empty string as the identity.
The letters compose right to left: ``"ra"`` is ``r`` after ``a``.
Input also accepts exponents and parentheses, e.g. ``a^2r`` or ``(ra^2)^2``.
"""

from __future__ import annotations

import re
from typing import Callable, Dict, Hashable, Iterable, List, Sequence, Tuple, TypeVar

from .errors import BudgetExceeded

S = TypeVar("S", bound=Hashable)

_TOK = re.compile(r"\s*(?:(?P<letter>[A-Za-z])|(?P<num>\d+)|(?P<op>[()^]))")


def parse_word(text: str, alphabet: Iterable[str] | None = None) -> str:
    """Expand ``text`` to a flat word; ``"1"`` (or the empty string) is the identity."""
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOK.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad word {text!r} at position {pos}")
        toks.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()
    i = 0

    def seq() -> str:
        nonlocal i
        out = ""
        while i < len(toks) and toks[i] != ("op", ")"):
            kind, val = toks[i]
            i += 1
            if kind == "letter":
                atom = val
            elif kind == "num" and val == "1":
                atom = ""
            elif (kind, val) == ("op", "("):
                atom = seq()
                if i >= len(toks) or toks[i] != ("op", ")"):
                    raise ValueError(f"unbalanced parentheses in {text!r}")
                i += 1
            else:
                raise ValueError(f"unexpected {val!r} in word {text!r}")
            if i < len(toks) and toks[i] == ("op", "^"):
                if i + 1 >= len(toks) or toks[i + 1][0] != "num":
                    raise ValueError(f"expected exponent in {text!r}")
                atom *= int(toks[i + 1][1])
                i += 2
            out += atom
        return out

    word = seq()
    if i != len(toks):
        raise ValueError(f"unbalanced parentheses in {text!r}")
    if alphabet is not None:
        bad = sorted(set(word) - set(alphabet))
        if bad:
            raise ValueError(f"word {text!r} uses letters {''.join(bad)} outside the alphabet {''.join(alphabet)}")
    return word


def format_word(word: str) -> str:
    """Pretty form with runs collapsed: ``"raar"`` -> ``"ra^2r"``, ``""`` -> ``"1"``."""
    if not word:
        return "1"
    out = []
    for m in re.finditer(r"(.)\1*", word):
        run = m.group(0)
        out.append(run[0] if len(run) == 1 else f"{run[0]}^{len(run)}")
    return "".join(out)


def shortlex_key(word: str, order: str) -> Tuple[int, Tuple[int, ...]]:
    return len(word), tuple(order.index(c) for c in word)


def shortlex_closure(
    start: S,
    letters: Sequence[str],
    step: Callable[[str, S], S],
    budget: int,
    what: str = "monoid elements",
) -> List[Tuple[str, S]]:
    """Breadth-first closure of ``start`` under left multiplication by letters.

    Returns ``(word, state)`` pairs in shortlex order of the words, each word
    being the least one (letters ranked as given) reaching its state.
    """
    seen: Dict[S, str] = {start: ""}
    out = [("", start)]
    frontier = [("", start)]
    while frontier:
        nxt = []
        for g in letters:
            for w, s in frontier:
                t = step(g, s)
                if t not in seen:
                    seen[t] = g + w
                    nxt.append((g + w, t))
                    if len(seen) > budget:
                        raise BudgetExceeded(what, len(seen), budget)
        out.extend(nxt)
        frontier = nxt
    return out
