"""The two text forms for presentations, and what the parser catches.

The compact angle form covers the common one-object case; the block form
names every cell explicitly and is the only way to write multi-object
presentations or pick your own relation names.  render() always emits text
that parses back to the same presentation.
"""

from polygraph import presentations
from polygraph.errors import ParseError

# Angle form: generators, then relations, relations auto-named r1, r2, ...
d5 = presentations.parse("< r, s | r^5 = 1, s^2 = 1, r s r s = 1 >")
print("relations:", list(d5.rels))
print("round trip:", presentations.render(d5))

# Block form: one declaration per line, comments allowed.
TEXT = """polygraph      # a 2-polygraph with two objects
cells: x y
gen f : x -> y
gen g : y -> x
rel loop : f g = 1
"""
typed = presentations.parse(TEXT)
print("\nobjects:", typed.cells0)
print("f goes", typed.gens["f"][0], "->", typed.gens["f"][1])
print("named relation:", "loop" in typed.rels)

# Multi-object presentations and custom relation names force block form.
print("\nblock render:")
print(presentations.render(typed))

# Errors come back with line/column positions, not stack traces.
BROKEN = [
    "< a, a | >",  # duplicate generator
    "< a | a b = 1 >",  # unknown letter
    "< a | a^2 >",  # relation without =
]
print("diagnostics:")
for text in BROKEN:
    try:
        presentations.parse(text)
    except ParseError as exc:
        print(f"  {text!r:24} -> {exc}")
