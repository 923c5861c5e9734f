"""Randomized property suites shared by module tests and the acceptance suite.

Each ``run_*_suite`` function executes ``cases`` independent trials driven by
a seeded random generator and returns the number of trials that ran; any
violated property raises AssertionError on the spot.  The generators build
arbitrary well-formed inputs (presentations, zig-zag words, rewrite
derivations, presentation-editing steps), so the suites probe the engine far
from the hand-picked examples.
"""

from __future__ import annotations

import random

from polygraph import presentations, tietze
from polygraph.model import (
    CancelLeft,
    CancelRight,
    Gen,
    Id,
    Inv,
    Polygraph,
    Vert,
    boundary,
    chain,
    step,
)
from polygraph.rewriting import (
    Converged,
    RewritingSystem,
    complete,
    encode,
    normalize_bytes,
)
from polygraph.words import Letter, Word, format_word, parse_word

# --------------------------------------------------------------- generators

_NAME_POOL = [
    "a", "b", "c", "d", "e", "f", "g", "h",
    "p", "q", "r", "s", "t", "u", "v", "w", "x", "y", "z",
]


def _fresh_names(rng: random.Random, count: int, taken=()) -> list[str]:
    pool = [n for n in _NAME_POOL if n not in taken]
    rng.shuffle(pool)
    names = pool[:count]
    serial = 0
    while len(names) < count:
        candidate = f"n{serial}"
        serial += 1
        if candidate not in taken:
            names.append(candidate)
    return names


def random_polygraph(
    rng: random.Random,
    max_cells: int = 2,
    max_gens: int = 5,
    max_rels: int = 3,
    min_rels: int = 0,
) -> Polygraph:
    """An arbitrary well-formed presentation with parallel relation sides."""
    n_cells = rng.randint(1, max_cells)
    cells = ("*",) if n_cells == 1 else tuple(f"c{i}" for i in range(n_cells))
    n_gens = rng.randint(1, max_gens)
    names = _fresh_names(rng, n_gens + max_rels)
    gens: dict[str, tuple[str, str]] = {}
    for name in names[:n_gens]:
        gens[name] = (rng.choice(cells), rng.choice(cells))
    p = Polygraph(cells0=cells, gens=gens, rels={})
    rels: dict[str, tuple[Word, Word]] = {}
    n_rels = rng.randint(min_rels, max_rels)
    for i, name in enumerate(names[n_gens:n_gens + n_rels]):
        lhs = random_walk(p, rng, max_len=5)
        rhs = _parallel_walk(p, rng, lhs, max_len=5)
        rels[f"{name}{i}"] = (lhs, rhs)
    return Polygraph(cells0=cells, gens=gens, rels=rels)


def random_walk(
    p: Polygraph,
    rng: random.Random,
    max_len: int = 8,
    start: str | None = None,
) -> Word:
    """A random zig-zag word: each letter leaves the cell the previous one hit."""
    moves: dict[str, list[Letter]] = {}
    for name, (src, tgt) in p.gens.items():
        moves.setdefault(src, []).append(Letter(name, 1))
        moves.setdefault(tgt, []).append(Letter(name, -1))
    cur = start if start is not None else rng.choice(p.cells0)
    origin = cur
    letters: list[Letter] = []
    for _ in range(rng.randint(0, max_len)):
        options = moves.get(cur)
        if not options:
            break
        letter = rng.choice(options)
        letters.append(letter)
        cur = letter.endpoints(p.gens)[1]
    return Word.from_letters(letters, p.gens, at=origin)


def _parallel_walk(
    p: Polygraph, rng: random.Random, model: Word, max_len: int, tries: int = 30
) -> Word:
    """A word parallel to ``model`` (same endpoints), by bounded rejection."""
    for _ in range(tries):
        w = random_walk(p, rng, max_len=max_len, start=model.src)
        if w.tgt == model.tgt:
            return w
    return model


def _subword(p: Polygraph, letters, at: str) -> Word:
    return Word.from_letters(letters, p.gens, at=at)


def random_rewrite(
    p: Polygraph, rng: random.Random, max_moves: int = 4
) -> tuple:
    """A derivation rewriting a random start word by whiskered relation moves.

    Returns (derivation, start_word, end_word); the derivation is a vertical
    chain of single-occurrence replacements, or an identity when no relation
    side occurs in the start word.
    """
    start = random_walk(p, rng, max_len=8)
    cur = start
    moves = []
    for _ in range(rng.randint(0, max_moves)):
        options = []
        letters = cur.letters
        for name, (lhs, rhs) in p.rels.items():
            for side, sign, repl in ((lhs, 1, rhs), (rhs, -1, lhs)):
                k = len(side.letters)
                for i in range(len(letters) - k + 1):
                    if letters[i:i + k] == side.letters:
                        if k == 0 and side.src != _cell_at(p, cur, i):
                            continue
                        options.append((i, k, name, sign, repl))
        if not options:
            break
        i, k, name, sign, repl = rng.choice(options)
        prefix = _subword(p, letters[:i], cur.src)
        suffix = _subword(p, letters[i + k:], repl.tgt)
        moves.append(step(p, prefix, Gen(name, sign), suffix))
        cur = prefix * repl * suffix
    return (chain(moves) if moves else Id(start)), start, cur


def _cell_at(p: Polygraph, word: Word, i: int) -> str:
    """The 0-cell reached after the first ``i`` letters of ``word``."""
    if i == 0:
        return word.src
    return word.letters[i - 1].endpoints(p.gens)[1]


def random_tietze_case(
    p: Polygraph, rng: random.Random
) -> tuple[Polygraph, object] | None:
    """A (state, verified-step) pair, covering all six step kinds.

    Removal steps are produced by inverting a fresh addition, which keeps
    the exact-round-trip property meaningful (removing the newest cell and
    re-adding it restores declaration order as well as content).
    """
    kind = rng.choice(["t0", "t1", "t2", "inv_t0", "inv_t1", "inv_t2"])
    taken = set(p.gens) | set(p.rels) | set(p.cells0)
    fresh = _fresh_names(rng, 3, taken)
    if kind.endswith("t0"):
        fwd = tietze.T0(
            at=rng.choice(p.cells0), new_cell=f"cell_{fresh[0]}", new_gen=fresh[1]
        )
    elif kind.endswith("t1"):
        fwd = tietze.T1(
            word=random_walk(p, rng, max_len=5),
            new_gen=fresh[0],
            new_rel=fresh[1],
            gen_on_left=rng.random() < 0.5,
        )
    else:
        if not p.rels:
            return None
        witness, start, end = random_rewrite(p, rng)
        declared = (start, end) if rng.random() < 0.5 else None
        fwd = tietze.T2(witness=witness, new_rel=fresh[0], declared=declared)
    if not kind.startswith("inv"):
        return p, fwd
    return tietze.apply(p, fwd), tietze.inverse(p, fwd)


# ------------------------------------------------------------------- suites


def run_free_reduction_suite(seed: int = 0, cases: int = 1000) -> int:
    """Free reduction is idempotent, endpoint-preserving, and confluent:
    cancelling adjacent inverse pairs in any order reaches the same word."""
    rng = random.Random(seed)
    ran = 0
    for _ in range(cases):
        p = random_polygraph(rng, max_cells=3, max_gens=4, max_rels=0)
        w = random_walk(p, rng, max_len=30)
        r = w.reduce()
        assert r.reduce() == r
        assert (r.src, r.tgt) == (w.src, w.tgt)
        assert _random_order_reduce(p, w, rng) == r
        assert w.invert().reduce() == r.invert()
        ran += 1
    return ran


def _random_order_reduce(p: Polygraph, w: Word, rng: random.Random) -> Word:
    letters = list(w.letters)
    while True:
        sites = [
            i
            for i in range(len(letters) - 1)
            if letters[i] == letters[i + 1].inverse()
        ]
        if not sites:
            return Word.from_letters(letters, p.gens, at=w.src)
        i = rng.choice(sites)
        del letters[i:i + 2]


def run_parser_roundtrip_suite(seed: int = 0, cases: int = 1000) -> int:
    """render -> parse is the identity on presentations (content and order),
    and format -> parse is the identity on words."""
    rng = random.Random(seed)
    ran = 0
    for _ in range(cases):
        p = random_polygraph(rng, max_cells=3, max_gens=5, max_rels=3)
        text = presentations.render(p)
        q = presentations.parse(text)
        assert q == p
        assert q.cells0 == p.cells0
        assert list(q.gens) == list(p.gens)
        assert list(q.rels) == list(p.rels)
        assert presentations.render(q) == text
        w = random_walk(p, rng, max_len=12)
        again = parse_word(format_word(w), p.gens, at=w.src if len(w) == 0 else None)
        assert again == w
        ran += 1
    return ran


def run_boundary_laws_suite(seed: int = 0, cases: int = 1000) -> int:
    """Structural laws of derivation boundaries: identities are idle,
    inversion swaps endpoints, gluings concatenate or chain them, and the
    cancellation units have their declared boundaries."""
    rng = random.Random(seed)
    ran = 0
    while ran < cases:
        p = random_polygraph(rng, max_cells=1, max_gens=4, max_rels=3, min_rels=1)
        d, start, end = random_rewrite(p, rng)
        b = boundary(p, d)
        assert b == (start, end)
        assert boundary(p, Inv(d)) == (end, start)
        assert boundary(p, Vert(d, Inv(d))) == (start, start)
        w = random_walk(p, rng, max_len=6)
        assert boundary(p, Id(w)) == (w, w)
        assert boundary(p, tietze.parse_derivation(tietze.format_derivation(d), p)) == b
        pre = random_walk(p, rng, max_len=4)
        suf = random_walk(p, rng, max_len=4)
        assert boundary(p, step(p, pre, d, suf)) == (pre * start * suf, pre * end * suf)
        g = rng.choice(list(p.gens))
        src, tgt = p.gens[g]
        left_pair = Word.from_letters([Letter(g, -1), Letter(g, 1)], p.gens)
        right_pair = Word.from_letters([Letter(g, 1), Letter(g, -1)], p.gens)
        assert boundary(p, CancelLeft(g)) == (left_pair, Word.identity(tgt))
        assert boundary(p, CancelRight(g)) == (right_pair, Word.identity(src))
        ran += 1
    return ran


def run_tietze_cancellation_suite(seed: int = 0, cases: int = 1000) -> int:
    """Every presentation-editing step verifies, applies, and is undone
    exactly by its computed inverse; inverting twice recovers the step."""
    rng = random.Random(seed)
    ran = 0
    while ran < cases:
        p = random_polygraph(rng, max_cells=2, max_gens=4, max_rels=3)
        case = random_tietze_case(p, rng)
        if case is None:
            continue
        state, s = case
        check = tietze.verify(state, s)
        assert check.ok, check.reason
        after = tietze.apply(state, s)
        back = tietze.inverse(state, s)
        assert tietze.verify(after, back).ok
        assert tietze.apply(after, back) == state
        again = tietze.inverse(after, back)
        assert tietze.apply(state, again) == after
        ran += 1
    return ran


_NF_SYSTEM_SPECS = [
    ("< a | a^5 = 1 >", None, True),
    ("< r, s | r^5 = 1, s^2 = 1, r s r s = 1 >", None, True),
    ("< i, j | i = j i j, j = i j i >", None, True),
    ("< a, b, c | a b a = b a b, c a = b c, a b = c >", ["a", "b", "c"], False),
]
_NF_SYSTEMS: list[RewritingSystem] | None = None


def _nf_systems() -> list[RewritingSystem]:
    global _NF_SYSTEMS
    if _NF_SYSTEMS is None:
        systems = []
        for text, precedence, with_inverses in _NF_SYSTEM_SPECS:
            p = presentations.parse(text)
            out = complete(encode(p, precedence, inverses=with_inverses))
            assert isinstance(out, Converged), text
            systems.append(out.system)
        _NF_SYSTEMS = systems
    return _NF_SYSTEMS


def run_normal_form_suite(seed: int = 0, cases: int = 1000) -> int:
    """In a convergent system the normal form is strategy-independent:
    rewriting random occurrences in random order reaches the same word the
    leftmost strategy does, normal forms are fixed points, and normalizing
    a concatenation of normal forms matches normalizing the original words."""
    rng = random.Random(seed)
    systems = _nf_systems()
    ran = 0
    for _ in range(cases):
        system = rng.choice(systems)
        n = len(system.alphabet)
        w = bytes(rng.randrange(n) for _ in range(rng.randint(0, 12)))
        u = bytes(rng.randrange(n) for _ in range(rng.randint(0, 6)))
        nf = normalize_bytes(system, w)
        assert normalize_bytes(system, nf) == nf
        assert _random_strategy_normalize(system, w, rng) == nf
        direct = normalize_bytes(system, w + u)
        stitched = normalize_bytes(system, nf + normalize_bytes(system, u))
        assert direct == stitched
        ran += 1
    return ran


def _random_strategy_normalize(
    system: RewritingSystem, word: bytes, rng: random.Random
) -> bytes:
    cur = word
    while True:
        sites = [
            (i, rule)
            for rule in system.rules
            for i in range(len(cur) - len(rule.lhs) + 1)
            if cur[i:i + len(rule.lhs)] == rule.lhs
        ]
        if not sites:
            return cur
        i, rule = rng.choice(sites)
        cur = cur[:i] + rule.rhs + cur[i + len(rule.lhs):]
