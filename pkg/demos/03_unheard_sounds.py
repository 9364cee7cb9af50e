"""Imitation only vs imitation plus contrastive regulariser and augmentations.

Trains both variants on a small world and reports SR/SPL/SNA on the four
scene/sound splits.  The default here is a few minutes on one core; pass
``--full`` for the default desk configuration over three seeds (over an
hour), which is what the acceptance test runs.

    python demos/03_unheard_sounds.py [--full] [--out runs/demo]
"""
from __future__ import annotations

import argparse
import logging

from audiogoal.harness import SPLITS, ExperimentConfig, run_experiment_matrix

parser = argparse.ArgumentParser()
parser.add_argument("--full", action="store_true")
parser.add_argument("--out")
args = parser.parse_args()
logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

if args.full:
    cfg, seeds = ExperimentConfig(), (0, 1, 2)
else:
    cfg, seeds = ExperimentConfig(train_scenes=6, test_scenes=2, scene_size=(7, 9), updates=600,
                                  updates_per_round=50, episodes_per_round=12, eval_episodes=60), (0,)

report = run_experiment_matrix(cfg, seeds, args.out)
print(f"\n{'split':16s} {'metric':6s} {'baseline':>9s} {'ours':>9s} {'delta':>7s}")
for split in SPLITS:
    for m in ("SR", "SPL", "SNA"):
        b, o = report["means"]["baseline"][split][m], report["means"]["ours"][split][m]
        print(f"{split:16s} {m:6s} {b:9.1f} {o:9.1f} {o - b:+7.1f}")
print(f"\nunheard-sound SPL delta {report['unheard_spl_delta']:+.1f}, heard {report['heard_spl_delta']:+.1f}, "
      f"{report['runtime_s'] / 60:.1f} min")
