"""Synthesize a camera sweep around a single hand image.

Builds a short cone trajectory away from the recorded camera of a held-out
frame, then generates each view autoregressively: every finished view
joins the conditioning history and the reference for each denoising step
is re-drawn from that history, which keeps the sweep coherent.
"""

import argparse
from pathlib import Path

import numpy as np

from handdiff import applications as apps
from handdiff.data_io import load_image, save_image
from handdiff.geometry import cone_trajectory, look_at_camera
from handdiff.toy_eval import split_holdout
from handdiff.training import load_pipeline

ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--checkpoint", type=Path, default=ROOT / "fixtures/toy_run/pipeline.ckpt")
    ap.add_argument("--data", type=Path, default=ROOT / "fixtures/toy_data")
    ap.add_argument("--out", type=Path, default=Path("demos/out/novel_views"))
    ap.add_argument("--views", type=int, default=4)
    ap.add_argument("--guidance-w", type=float, default=1.5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    pipeline = load_pipeline(args.checkpoint)
    _, holdout = split_holdout(args.data / "manifest.jsonl", 8)
    rec = next(r for r in holdout if r.camera is not None and r.joints3d is not None)
    image = load_image(args.data / rec.image_path)

    pivot = rec.joints3d.points[:21].mean(axis=0)
    start = rec.camera
    swung = look_at_camera(
        pivot + 1.15 * (start.center() - pivot) + np.array([0.35, 0.2, 0.0]),
        pivot,
        focal=float(start.intrinsics[0, 0]),
    )
    cameras = cone_trajectory(start, swung, pivot, steps=args.views)

    images, keypoints = apps.synthesize_views(
        pipeline,
        image,
        rec.joints3d,
        rec.camera,
        cameras,
        guidance=apps.GuidanceConfig(w=args.guidance_w),
        seed=args.seed,
    )
    save_image(args.out / "input.png", image)
    for i, (img, kp) in enumerate(zip(images, keypoints)):
        save_image(args.out / f"view_{i:02d}.png", img)
        inside = np.mean((kp.points[:21] >= 0) & (kp.points[:21] <= 1))
        print(f"view_{i:02d}.png  joints in frame: {inside:.0%}")
    print(f"outputs under {args.out}")


if __name__ == "__main__":
    main()
