#!/usr/bin/env python3
"""Tour of the weighted-Hamming metric.

A weighted space splits F_q^N into blocks and charges each block its own
price per nonzero coordinate.  This script walks through block profiles,
weighted weights, per-vector correction capability, and the weighted
balls that drive all the dimension bounds.
"""

from whmetric import WeightedSpace

space = WeightedSpace(q=2, blocks=(7, 7), scales=(1, 2))
print(f"space: q={space.q}, blocks={space.blocks}, scales={space.scales}, N={space.n}")

v = (1, 1, 0, 0, 0, 0, 0) + (1, 0, 0, 0, 0, 0, 0)
profile = space.block_profile(v)
print(f"\nvector {v}")
print(f"block profile      : {profile}")
print(f"weighted weight    : {space.weighted_weight(profile)}  (= 1*2 + 2*1)")

# The capability of a vector is the largest t such that it cannot be a
# difference of two weight-<=t vectors: split it as evenly as the block
# prices allow.
for prof in [(1, 0), (2, 0), (0, 1), (3, 0), (7, 1)]:
    print(f"capability of profile {prof}: {space.profile_capability(prof)}")

print("\nweighted balls:")
for t in range(4):
    profiles = space.ball_profiles(t)
    print(f"  t={t}: {len(profiles):2d} profiles, {space.ball_size(t):5d} vectors")

print("\ndifference sets (what a code must avoid to correct radius t):")
for t in range(1, 4):
    profiles = space.diff_ball_profiles(t)
    print(f"  t={t}: {len(profiles):2d} profiles, {space.diff_ball_size(t):5d} vectors")
    print(f"        {profiles}")

# The same geometry, one block: everything collapses to the plain
# Hamming metric.
plain = WeightedSpace(q=2, blocks=(7,), scales=(1,))
print("\nsingle unscaled block is the classical Hamming ball:")
for t in range(3):
    print(f"  t={t}: {plain.ball_size(t)} vectors")
