"""Terrain synthesis and the policy's image-like observations.

Builds a synthetic work area with a soil pile and a trench, crops the
digging/dumping zones, and renders them as normalized 3-channel images.
Saves PNGs next to this script when matplotlib is available.
"""

import os

import numpy as np

from digsim.elevation import (CropRegion, GaussianPile, RectTrench, TerrainSpec,
                              crop_zone, load_grid, render_observation,
                              save_grid, synth_terrain)

spec = TerrainSpec(
    rows=24, cols=20, resolution=0.25, origin=(4.0, -3.0), base_height=0.0,
    primitives=[
        GaussianPile(x=6.2, y=-1.1, amplitude=0.35, sigma=0.5),
        RectTrench(5.4, 0.8, 7.0, 1.6, depth=0.3),
    ],
    noise_sigma=0.01,
    missing_fraction=0.04,  # LiDAR shadows
)
grid = synth_terrain(spec, seed=7)
print(f"terrain {grid.shape} at {grid.resolution} m/cell, "
      f"heights {grid.heights.min():.2f}..{grid.heights.max():.2f} m, "
      f"{(~grid.valid).sum()} missing cells")

dig = crop_zone(grid, CropRegion(0, 0, 12, 20, "digging"))
dump = crop_zone(grid, CropRegion(12, 0, 12, 20, "dumping"))
obs_dig = render_observation(dig, 60, 80, label="digging")
obs_dump = render_observation(dump, 60, 80, label="dumping")
print("digging zone observation:", obs_dig.shape,
      "value range", float(obs_dig.pixels[:, :, 0].min()),
      float(obs_dig.pixels[:, :, 0].max()))

out_dir = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(out_dir, exist_ok=True)
save_grid(grid, os.path.join(out_dir, "work_area.grid"))
back = load_grid(os.path.join(out_dir, "work_area.grid"))
print("grid file round trip ok:",
      bool(np.array_equal(back.valid, grid.valid)))

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping figures")
else:
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.2))
    masked = np.where(grid.valid, grid.heights, np.nan)
    im = axes[0].imshow(masked, origin="lower", cmap="terrain")
    axes[0].set_title("work area heights (m)")
    fig.colorbar(im, ax=axes[0], shrink=0.8)
    axes[1].imshow(obs_dig.pixels[:, :, 0], origin="lower", cmap="viridis")
    axes[1].set_title("digging observation (value)")
    axes[2].imshow(obs_dump.pixels[:, :, 2], origin="lower", cmap="gray")
    axes[2].set_title("dumping observation (mask)")
    fig.tight_layout()
    path = os.path.join(out_dir, "observations.png")
    fig.savefig(path, dpi=110)
    print("wrote", path)
