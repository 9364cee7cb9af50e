"""What the agent hears as it turns in place and walks toward a source.

Builds one open room, prints it, then walks the oracle path and shows the
direct-path gains and interaural delay at every pose.  The ear that faces the
first step of the shortest path is the louder one; on the source cell the
RIR collapses to a unit impulse.

    python demos/01_listening_in_the_grid.py
"""
from __future__ import annotations

import numpy as np

from audiogoal import gridworld as gw
from audiogoal.acoustics import compute_rir, direction_of_arrival
from audiogoal.gridworld import AgentPose, Heading
from audiogoal.observe import Observer, PositionKey
from audiogoal.soundbank import default_bank


def draw(scene, pose):
    rows = []
    for y in range(scene.height):
        row = ""
        for x in range(scene.width):
            if (x, y) == pose.cell:
                row += "^>v<"[int(pose.heading)]
            elif (x, y) == scene.source_cell:
                row += "S"
            else:
                row += "#" if scene.occupancy[y, x] else "."
        rows.append(row)
    return "\n".join(rows)


def direct(h):
    nz = np.flatnonzero(h)
    return int(nz[0]), float(h[nz[0]])


scene = gw.random_scene(np.random.default_rng(3), "demo", 9, 7)
start = AgentPose(max(scene.walkable_cells(), key=lambda c: scene.distance_field(scene.source_cell)[c[1], c[0]]),
                  Heading.NORTH)
print(draw(scene, start), "\n")

print("turning in place at the start:")
for h in Heading:
    rir = compute_rir(scene, AgentPose(start.cell, h))
    (nl, gl), (nr, gr) = direct(rir.left), direct(rir.right)
    print(f"  facing {h.name:5s} doa {direction_of_arrival(scene, AgentPose(start.cell, h)):6.1f} deg"
          f"  left {gl:.3f}@{nl}  right {gr:.3f}@{nr}")

print("\nfollowing the oracle:")
pose = start
for action in gw.oracle_rollout(scene, start):
    rir = compute_rir(scene, pose)
    (nl, gl), (nr, gr) = direct(rir.left), direct(rir.right)
    print(f"  {str(pose.cell):8s} {pose.heading.name:5s} -> {action.name:12s} ILD {20 * np.log10(gl / gr):+5.1f} dB"
          f"  ITD {nr - nl:+d} samples  taps {len(rir)}")
    pose = gw.step(scene, pose, action)

bank = default_bank()
obs = Observer({scene.id: scene})
spec = obs.spectrogram(PositionKey.of(scene, start), bank.waveform(0))
print(f"\nobservation: log-magnitude spectrogram {spec.shape} (ears, bins, frames)")
