"""Trust, but verify: brute-force searches that cross-check the engine.

Rewriting answers word-problem queries fast, but its correctness rests on a
completed rule system.  This demo runs the slow, obviously-correct methods —
breadth-first search over elementary moves, and explicit multiplication
tables with every group law re-checked — and confirms the two roads agree.
"""

import random

from polygraph import oracle, presentations
from polygraph.oracle import Equal, NotWithinRadius, SearchSpace
from polygraph.rewriting import Converged, Finite, complete, encode, enumerate_normal_forms, word_equal

# --- equality as graph search --------------------------------------------------
# States are words, moves are single free cancellations/insertions or single
# relation applications.  A path is a proof of equality that needs no theory.
b3 = presentations.parse("< a, b | a b a = b a b >")
space = SearchSpace(b3)

print("a b a ~ b a b:", oracle.bfs_equal(space, "a b a", "b a b", radius=4))
print("a b b' a ~ a a:", oracle.bfs_equal(space, "a b b' a", "a a", radius=4))

# When no path exists within the radius, the search abstains rather than
# declaring the words different.
print("a ~ b within 6 moves:", oracle.bfs_equal(space, "a", "b", radius=6))

# The ball around a word: every state reachable in one move.  States are
# tuples of letter indices, so we build a tiny decoder to print them.
z5 = presentations.parse("< a | a^5 = 1 >")
z5_space = SearchSpace(z5)
letter_names = {}
for gen in z5.gens:
    for name in (gen, gen + "'"):
        letter_names[z5_space.encode(name)[0]] = name
ball = oracle.bfs_reach(z5_space, "1", radius=1, length_cap=10)
one_away = sorted(" ".join(letter_names[i] for i in w) for w, d in ball.items() if d == 1)
print("one move away from 1 in Z5:", ", ".join(one_away))

# --- multiplication tables with the group laws re-proved -----------------------
d5 = presentations.parse("< r, s | r^5 = 1, s^2 = 1, r s r s = 1 >")
d5_out = complete(encode(d5, None))
assert isinstance(d5_out, Converged)
table = oracle.table_from_normal_forms(d5_out.system)
forms = enumerate_normal_forms(d5_out.system, cap=100)
assert isinstance(forms, Finite)
words = list(forms.words)
involutions = [words[i] for i in range(table.size) if i != table.identity and table.table[i][i] == table.identity]
print(f"\nD5 has {table.size} elements; involutions: {', '.join(involutions)}")

# closure_generates answers "is this subset a generating set?" by saturation.
r, s = words.index("r"), words.index("s")
print("r alone generates D5:", oracle.closure_generates(table, [r]))
print("r and s generate D5:", oracle.closure_generates(table, [r, s]))

# A defective table cannot sneak through: the constructor re-checks every law.
rows = [list(row) for row in table.table]
rows[1][1] = table.identity  # tamper with one product
try:
    oracle.MultiplicationTable(table.size, tuple(tuple(r) for r in rows), table.identity, table.inverse)
except oracle.LawViolation as exc:
    print("tampered table rejected:", exc)

# --- the two roads agree --------------------------------------------------------
# Sample random word pairs in Z5 and compare the rewriting verdict with the
# search verdict: pairs the engine calls equal must be connected by moves,
# and pairs it calls distinct must leave the search abstaining.
z5_out = complete(encode(z5, None))
assert isinstance(z5_out, Converged)
rng = random.Random(5)
agreements = {"equal": 0, "distinct": 0}
for _ in range(60):
    u = " ".join(rng.choice(["a", "a'"]) for _ in range(rng.randint(0, 4))) or "1"
    v = " ".join(rng.choice(["a", "a'"]) for _ in range(rng.randint(0, 4))) or "1"
    if word_equal(z5_out.system, u, v):
        verdict = oracle.bfs_equal(z5_space, u, v, radius=6)
        assert isinstance(verdict, Equal), (u, v)
        agreements["equal"] += 1
    else:
        verdict = oracle.bfs_equal(z5_space, u, v, radius=3)
        assert isinstance(verdict, NotWithinRadius), (u, v)
        agreements["distinct"] += 1
print(f"\n60 random Z5 pairs: {agreements['equal']} equal and {agreements['distinct']} distinct, search agrees on all")
