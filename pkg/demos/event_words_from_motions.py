#!/usr/bin/env python3
"""Derive braid-generator images geometrically.

Each Artin generator is realised as a motion: n points sit on the unit
circle and the swapping pair makes a half-turn about the midpoint of its
chord.  Every moment at which three points line up emits one letter; the
letters, in time order, reproduce the algebraic generator image.
"""

from braidrep.collinearity import (
    calibrate_against_phi,
    detect_events,
    events_to_word,
    sigma_motion,
)
from braidrep.gn3 import phi_generator

n, i = 5, 2
print(f"swap motion of generator {i} on {n} points")
events = detect_events(sigma_motion(n, i))
for e in events:
    print(f"  t = {e.time:.6f}   triple {e.triple}")

word = events_to_word(events, n)
print(f"event word:      {word}")
print(f"algebraic image: {phi_generator(n, i).word}")

print()
print("calibration over all generators:")
for n in range(3, 7):
    entries = calibrate_against_phi(n)
    marks = " ".join(f"i={e['i']}:{e['match']}" for e in entries)
    print(f"  n={n}: {marks}")
