"""Mining positive pairs and watching the contrastive loss pull them together.

Collects a few oracle-guided episodes, mines a batch where each trajectory
step is paired with the same placement rendered with a different heard
sound, checks that no negative shares a placement, then trains the encoder
on that batch alone and reports the gap between positive and negative
cosine similarity.

    python demos/02_positive_pairs.py
"""
from __future__ import annotations

import numpy as np

from audiogoal.afso import afso_training_contribution, fn_audit, mine_pairs
from audiogoal.harness import ExperimentConfig, World, collect_trajectories
from audiogoal.learn import AdamState, GradientSet, adam_step, forward_encoder, init_params

cfg = ExperimentConfig(train_scenes=3, test_scenes=0, hidden=64, embed=16)
world = World.build(cfg)
steps = collect_trajectories(world, range(12)).steps
print(f"buffer: {len(steps)} steps over {len({s.key for s in steps})} placements")

rng = np.random.default_rng(0)
batch = mine_pairs(steps, 16, world.bank.split.heard, rng, world.observer, world.bank)
print(f"batch: {batch.n_pairs} pairs, spectrograms {batch.specs.shape}, false-negative audit {fn_audit(batch)}")


def gap(params):
    emb = forward_encoder(params, batch.specs).astype(np.float64)
    u = emb / np.linalg.norm(emb, axis=1, keepdims=True)
    sims = u @ u.T
    m = len(u)
    pos = sims[np.arange(m), batch.pair_of].mean()
    neg = (sims.sum() - np.trace(sims) - sims[np.arange(m), batch.pair_of].sum()) / (m * (m - 2))
    return pos, neg


params = init_params(batch.specs[0].size, np.random.default_rng(1), cfg.hidden, cfg.embed)
state = AdamState.zeros(params)
for it in range(151):
    loss, enc = afso_training_contribution(params, batch)
    if it % 30 == 0:
        pos, neg = gap(params)
        print(f"  step {it:3d}  InfoNCE {loss:.3f}  cos(pos) {pos:+.3f}  cos(neg) {neg:+.3f}")
    grads = GradientSet.zeros_like(params)
    for name, g in enc.items():
        setattr(grads, name, g)
    adam_step(params, grads, state, lr=1e-3)
