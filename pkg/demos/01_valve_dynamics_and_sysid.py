"""Valve dynamics and model recovery.

Drives the simulator with raw valve commands, then pretends we only kept the
flight logs: refit the per-joint linear models from (valve, velocity) pairs
and compare against the model that generated them.
"""

import numpy as np

from digsim.sim import (DEFAULT_VALVE_MODEL, JOINT_NAMES, JointState, SimConfig,
                        ValveCommand, rollout, valve_to_velocity)
from digsim.sysid import ValveVelocityPair, fit_linear_model, neutral_point

cfg = SimConfig()
model = DEFAULT_VALVE_MODEL

print("== the calibrated model ==")
for j, name in enumerate(JOINT_NAMES):
    print(f"  {name:7s} qdot = {model.gains[j]:+.4e} * V {model.intercepts[j]:+.4e}")
print("neutral points:", np.round(neutral_point(model), 2))

# hold every joint at neutral: nothing moves (residuals ~1e-7 rad/s)
neutral = ValveCommand(8190, 8190, 8190, 8190)
print("velocities at neutral:", valve_to_velocity(model, neutral).as_array())

# a short joyride
rng = np.random.default_rng(0)
commands = [ValveCommand(*rng.uniform(4000, 12000, size=4)) for _ in range(80)]
states = rollout(JointState(0.0, 0.3, -1.3, -0.6), commands, model, cfg)
print(f"\nrolled {len(states) - 1} steps; final joints "
      f"{np.round(states[-1].as_array(), 3)} at t={states[-1].time:.1f}s")

# refit from logged pairs: 2661 samples per joint, like a field calibration
pairs = []
for j, name in enumerate(JOINT_NAMES):
    valves = rng.uniform(0, 16380, size=2661)
    vel = model.gains[j] * valves + model.intercepts[j]
    vel += rng.normal(0, 1e-4, size=2661)  # sensor noise
    pairs += [ValveVelocityPair(name, v, q) for v, q in zip(valves, vel)]

fitted, fit_report = fit_linear_model(pairs)
print("\n== refit from 2661 noisy pairs per joint ==")
for name in JOINT_NAMES:
    f = fit_report[name]
    print(f"  {name:7s} gain={f.gain:+.4e} intercept={f.intercept:+.4e} "
          f"r2={f.r_squared:.6f} rmse={f.rmse:.2e}")
rel = np.abs(fitted.gain_array() / model.gain_array() - 1.0)
print("relative gain error per joint:", np.round(rel, 6))
