"""Reference implementations that share no code with the library.

Strings are handled here as tuples of plain tokens (``"1+"``, ``"2-o"``,
``"0"``, ``"."``) so a bug in the library's Digit or QuString types cannot
leak into the expected values.
"""

from fractions import Fraction
from functools import lru_cache
import random


def tokens(s):
    """Library QuString -> token tuple with the dot spelled out."""
    toks = [d.token for d in s.digits]
    if s.origin is not None:
        toks.insert(s.origin, ".")
    return tuple(toks)


def _split(tok):
    blank = tok.endswith("o")
    body = tok[:-1] if blank else tok
    return int(body[:-1]), (1 if body[-1] == "+" else -1), blank


def _inverse_pair(t, u):
    if t in ("0", ".") or u in ("0", "."):
        return False
    at, st, bt = _split(t)
    au, su, bu = _split(u)
    return at == au and bt == bu and st == -su


def successors(toks):
    """Every string reachable by one elementary reduction."""
    out = set()
    for k, t in enumerate(toks):
        if t == "0":
            out.add(toks[:k] + toks[k + 1 :])
        if k + 1 < len(toks) and _inverse_pair(t, toks[k + 1]):
            out.add(toks[:k] + toks[k + 2 :])
    return out


@lru_cache(maxsize=None)
def terminal_forms(toks):
    """All irreducible strings reachable by applying reductions in any order."""
    nxt = successors(toks)
    if not nxt:
        return frozenset([toks])
    forms = set()
    for s in nxt:
        forms |= terminal_forms(s)
    return frozenset(forms)


def token_alphabet(dim):
    toks = ["0"]
    for axis in range(1, dim + 1):
        for sign in "+-":
            toks += [f"{axis}{sign}", f"{axis}{sign}o"]
    return toks


def walk(toks, dim):
    """(start, end, visited points) of a token string; the dot is the origin."""
    if "." in toks:
        k = toks.index(".")
        before, body = toks[:k], toks[:k] + toks[k + 1 :]
    else:
        before, body = (), toks
    pos = [0] * dim
    for t in before:
        if t != "0":
            a, s, _ = _split(t)
            pos[a - 1] -= s
    start = tuple(pos)
    seen = [start]
    for t in body:
        if t != "0":
            a, s, _ = _split(t)
            pos[a - 1] += s
        seen.append(tuple(pos))
    return start, tuple(pos), seen


def minkowski(p, q, k):
    """d_k(p, q) = (sum |q_i - p_i|^k)^(1/k); exact for k = 1."""
    total = sum(abs(b - a) ** k for a, b in zip(p, q))
    if k == 1:
        return Fraction(total)
    return total ** (1.0 / k)


def atomic_inner(t, u, s):
    """The four-case table <i±, j±> = ±s² δ_ij on single atoms; 0 otherwise."""
    if t in ("0", ".") or u in ("0", "."):
        return Fraction(0)
    at, st, bt = _split(t)
    au, su, bu = _split(u)
    if bt or bu or at != au:
        return Fraction(0)
    return Fraction(s) ** 2 * st * su


def pairwise_inner(a_toks, b_toks, s):
    return sum((atomic_inner(t, u, s) for t in a_toks for u in b_toks), Fraction(0))


def random_tokens(rng, dim, max_len, blanks=True, zeros=True, dot=True):
    pool = [t for t in token_alphabet(dim) if (blanks or not t.endswith("o")) and (zeros or t != "0")]
    toks = [rng.choice(pool) for _ in range(rng.randint(0, max_len))]
    if dot and rng.random() < 0.5:
        toks.insert(rng.randint(0, len(toks)), ".")
    return tuple(toks)


def from_tokens(toks, dim=2):
    """Token tuple -> library QuString, via the public notation parser."""
    from qutaxi import parse

    return parse("".join(toks), dim)


def rng(seed=0):
    return random.Random(seed)
