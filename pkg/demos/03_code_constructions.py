#!/usr/bin/env python3
"""Building codes tailored to a weighted metric.

Two constructions compose here.  First, a polyalphabetic code with
mixed symbol sizes is derived from a mother code over an extension
field.  Second, a generalized concatenated code pairs one nested chain
of inner codes per block with one polyalphabetic outer code per level;
its designed distance and capability floor fall out of the component
parameters.
"""

from whmetric import (
    LinearCode,
    NestedChain,
    PolyalphabeticCode,
    WeightedSpace,
    build_gcc,
    make_extension_field,
    make_prime_field,
    named_code,
    poly_from_mother,
)

F2 = make_prime_field(2)
F4 = make_extension_field(2, 2)

# -- a mixed-alphabet outer code from a parity mother ------------------------
mother = named_code("parity", F4, 3, 2)
outer = poly_from_mother(mother, (1, 2, 3))
print("mother: [3,2] parity check over F_4, distance", mother.min_distance())
print(
    f"derived outer: symbol sizes {outer.sizes}, dimension {outer.k}, "
    f"block distance {outer.min_block_distance()}"
)

# -- concatenate it over three differently priced blocks ---------------------
space = WeightedSpace(q=2, blocks=(3, 3, 3), scales=(1, 2, 3))
chains = [
    NestedChain([named_code("repetition", F2, 3, 1)]),  # strong code, cheap block
    NestedChain([named_code("parity", F2, 3, 2)]),
    NestedChain([named_code("full", F2, 3, 3)]),        # no protection, priciest block
]
gcc = build_gcc(space, chains, [outer])
print(f"\nconcatenated: {gcc}")
print("weighted inner distances:", [s * d for s, d in zip(space.scales, gcc.inner_distances[0])])
print("designed distance = sum of the", gcc.outer_distances[0], "smallest =", gcc.designed_distance)

msg = gcc.split_message((1, 0, 1))
word = gcc.encode(msg)
print(f"\nencode {msg} -> {word}  (weighted weight {space.vector_weight(word)})")

# -- two levels: refine the cheap block twice ---------------------------------
space2 = WeightedSpace(q=2, blocks=(6, 3), scales=(1, 2))
chain1 = NestedChain(
    [
        LinearCode(F2, [(1, 1, 1, 1, 1, 1), (1, 1, 1, 0, 0, 0)]),
        LinearCode(F2, [(1, 1, 1, 1, 1, 1)]),
    ]
)
chain2 = NestedChain([named_code("full", F2, 3, 3), LinearCode(F2, [(1, 1, 1)])])
outers = [
    PolyalphabeticCode(F2, (1, 2), [(1, 1, 1)]),  # joint protection across blocks
    PolyalphabeticCode(F2, (1, 1), [(1, 0), (0, 1)]),
]
gcc2 = build_gcc(space2, [chain1, chain2], outers)
print(f"\ntwo-level construction: {gcc2}")
print("level widths per block:", [c.widths for c in gcc2.chains])
print("quotient representatives, block 1 level 1:", gcc2.chains[0].quotient_rows[0])
