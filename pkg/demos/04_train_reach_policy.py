"""A small training run of the chunked-action policy.

This is a fast demonstration (a few thousand steps on tiny images), not the
full acceptance configuration; expect a policy that tracks the held-out
episode but is not yet precise from arbitrary starts. The acceptance suite
(tests/test_acceptance.py) runs the full recipe.
"""

import os
import time

from digsim.dataset import split_train_test
from digsim.harness import build_arch_for_task, default_task_spec, generate_demos
from digsim.policy import TrainConfig, save_checkpoint, train

spec = default_task_spec("reach", obs_h=20, obs_w=30)
episodes = generate_demos(spec, 8, seed=1)
train_set, test_ep = split_train_test(episodes, seed=0)
print(f"{len(train_set)} training episodes, 1 held out "
      f"({test_ep.num_steps} steps)")

arch = build_arch_for_task(spec, patch_size=10)
tcfg = TrainConfig(steps=2500, batch_size=8, seed=0, log_every=250)

t0 = time.time()


def progress(step, loss, comps):
    print(f"  step {step:5d}  loss {loss:7.4f}  recon {comps['recon']:7.4f} "
          f" kl {comps['kl']:8.5f}  [{time.time() - t0:5.1f}s]")


params, curve = train(train_set, arch, tcfg, callback=progress)
print(f"trained {len(curve)} steps in {time.time() - t0:.0f}s; "
      f"loss {curve[0][1]:.3f} -> {curve[-1][1]:.3f}")

ckpt = os.path.join(os.path.dirname(__file__), "out", "reach_ckpt")
save_checkpoint(params, ckpt, tcfg=tcfg, step=len(curve), curve=curve)
print("checkpoint written to", ckpt)
