"""Animate a hand by interpolating between two recorded poses.

Keypoint tracks are a straight lerp between the first and last frame of a
held-out sequence; the model fills in appearance frame by frame with a
sliding window of previous outputs as stochastic conditioning.
"""

import argparse
from pathlib import Path

import numpy as np

from handdiff import applications as apps
from handdiff.data_io import load_image, save_image
from handdiff.hand_rep import Keypoints42
from handdiff.toy_eval import split_holdout
from handdiff.training import load_pipeline

ROOT = Path(__file__).resolve().parents[1]


def lerp_keypoints(a: Keypoints42, b: Keypoints42, t: float) -> Keypoints42:
    return Keypoints42(
        (1.0 - t) * a.points + t * b.points,
        right_present=a.right_present,
        left_present=a.left_present,
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--checkpoint", type=Path, default=ROOT / "fixtures/toy_run/pipeline.ckpt")
    ap.add_argument("--data", type=Path, default=ROOT / "fixtures/toy_data")
    ap.add_argument("--out", type=Path, default=Path("demos/out/pose_video"))
    ap.add_argument("--frames", type=int, default=6)
    ap.add_argument("--window", type=int, default=2)
    ap.add_argument("--guidance-w", type=float, default=1.5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    pipeline = load_pipeline(args.checkpoint)
    _, holdout = split_holdout(args.data / "manifest.jsonl", 8)
    seq = holdout[0].sequence_id
    view = holdout[0].view_id
    rec_frames = sorted(
        (r for r in holdout if r.sequence_id == seq and r.view_id == view),
        key=lambda r: r.frame_index,
    )
    first, last = rec_frames[0], rec_frames[-1]
    image = load_image(args.data / first.image_path)

    ts = np.linspace(0.0, 1.0, args.frames)
    track = [lerp_keypoints(first.keypoints, last.keypoints, t) for t in ts]
    frames = apps.synthesize_video(
        pipeline,
        image,
        first.keypoints,
        track,
        window=args.window,
        guidance=apps.GuidanceConfig(w=args.guidance_w),
        seed=args.seed,
    )
    save_image(args.out / "input.png", image)
    for i, frame in enumerate(frames):
        save_image(args.out / f"frame_{i:03d}.png", frame)
    print(f"{len(frames)} frames under {args.out}")


if __name__ == "__main__":
    main()
