"""Present twisted homology groups and inspect their generators.

Groups are written as products of cyclic factors: ``Z``, ``Z^2``, ``Z_4``,
with a trailing ``~`` marking factors the orientation character sends to -1.
Run with ``python3 demos/01_homology_basics.py``.
"""

from twisthom import format_chain, parse_group_spec
from twisthom.homology import homology


def present(text, degrees):
    group = parse_group_spec(text)
    print(f"{text}:")
    for n in degrees:
        p = homology(group, n)
        print(f"  H_{n} = {p}")
    print()


present("Z_5", range(5))
present("Z", range(4))

# A twisted infinite factor collapses everything above degree zero.
present("Z~", range(4))

# Twisted even-order factors keep Z_2 alive in every even degree.
present("Z_4~", range(6))

# Products mix free and torsion contributions degree by degree.
present("Z^3 x Z_3", range(7))

group = parse_group_spec("Z_3 x Z_3")
p = homology(group, 3)
print(f"H_3(Z_3 x Z_3) = {p} with {p.num_generators} generators:")
for i in range(p.num_generators):
    cls = p.generator(i)
    print(f"  generator {i}: order {cls.order()}, representative {format_chain(cls.representative())}")

# Reducing any cycle expresses it in those generators.
from twisthom import parse_chain

z = parse_chain(group, "[1 2] + [2 1] + [3 0]")
print(f"\nreduce([1 2] + [2 1] + [3 0]) = {p.reduce(z)}")
