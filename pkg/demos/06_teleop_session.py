"""Scripted teleoperation session over the wire protocol.

Starts the service in-process, connects a plain TCP client, drives the
machine with a sinusoidal swing command while recording, and reloads the
saved episode. A human would do the same from the browser console in
frontend/ (via `python -m digsim.webbridge`).
"""

import json
import math
import os
import socket

from digsim.dataset import read_episode
from digsim.teleop import TeleopServer

out_dir = os.path.join(os.path.dirname(__file__), "out", "teleop")
server = TeleopServer(port=0, out_dir=out_dir).start()
host, port = server.address
print(f"service on {host}:{port}")

sock = socket.create_connection((host, port))
fh = sock.makefile("rwb")


def rpc(obj):
    fh.write(json.dumps(obj).encode() + b"\n")
    fh.flush()
    return json.loads(fh.readline())


state = rpc({"type": "reset"})
print("reset ->", {k: state[k] for k in ("t", "joints", "recording")})
print("config ->", rpc({"type": "get_config"})["geometry"])

rpc({"type": "start_record", "task": "reach"})
for i in range(60):
    swing = 8190 + 3500 * math.sin(i / 10.0)
    state = rpc({"type": "command", "valves": [swing, 9200, 8190, 8190]})
print(f"after 60 commands: t={state['t']:.1f}s joints="
      f"{[round(j, 3) for j in state['joints']]}")

saved = rpc({"type": "stop_record"})
print("saved ->", saved["path"])

episode = read_episode(saved["path"])
print(f"reloaded: {episode.num_steps} steps, task={episode.task}, "
      f"dt={episode.dt}, camera {episode.image_shape}")

fh.close()
sock.close()
server.stop()
