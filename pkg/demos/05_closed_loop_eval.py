"""Closed-loop evaluation under the strict replay protocol.

Joint positions start from the held-out episode's first true values and then
evolve only through the simulator under the policy's ensembled actions;
camera frames are replayed from the episode. Also shows the ground-truth
replay oracle: feeding the recorded actions back through the ensemble and
simulator reproduces the recorded trajectory to float precision.
"""

import os

import numpy as np

from digsim.dataset import split_train_test
from digsim.harness import (closed_loop_rollout, default_task_spec,
                            evaluate_closed_loop, export_traces,
                            generate_demos, make_replay_policy)
from digsim.policy import load_checkpoint

spec = default_task_spec("reach", obs_h=20, obs_w=30)
episodes = generate_demos(spec, 8, seed=1)
train_set, test_ep = split_train_test(episodes, seed=0)

print("== replay oracle ==")
oracle = closed_loop_rollout(make_replay_policy(test_ep, k=30), test_ep, spec, k=30)
print(f"joint RMSE vs recorded trajectory: {oracle.joint_rmse:.2e} rad "
      f"(float32 storage noise)")

ckpt = os.path.join(os.path.dirname(__file__), "out", "reach_ckpt")
if not os.path.isdir(ckpt):
    print(f"\nno checkpoint at {ckpt}; run 04_train_reach_policy.py first")
    raise SystemExit(0)

params, manifest = load_checkpoint(ckpt)
print(f"\n== trained policy (step {manifest['step']}) ==")
result = evaluate_closed_loop(params, test_ep, spec)
print(f"per-step action MAE: {result.action_mae:.1f} valve units")
print(f"joint trajectory RMSE: {result.joint_rmse:.4f} rad")
print(f"final bucket-to-target distance: {result.final_distance:.3f} m "
      f"(success threshold {spec.success_distance} m)")

traces = os.path.join(os.path.dirname(__file__), "out", "reach_traces.csv")
export_traces(result, test_ep, traces)
print("wrote", traces, " (t, gt actions, predicted actions, joints, bucket xyz)")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    pass
else:
    fig, axes = plt.subplots(2, 2, figsize=(10, 6), sharex=True)
    names = ("swing", "boom", "stick", "bucket")
    t = test_ep.times
    for i, (ax, name) in enumerate(zip(axes.ravel(), names)):
        ax.plot(t, test_ep.actions[:, i], label="demonstrated", lw=1.2)
        ax.plot(t, result.predicted[:, i], label="policy", lw=1.2)
        ax.set_title(f"{name} valve")
    axes[0, 0].legend()
    fig.supxlabel("time (s)")
    fig.tight_layout()
    path = os.path.join(os.path.dirname(__file__), "out", "reach_actions.png")
    fig.savefig(path, dpi=110)
    print("wrote", path)
