"""Re-pose a hand image onto the pose of another frame.

Uses the committed toy checkpoint (fixtures/toy_run) and two frames of a
held-out sequence: the model sees the first frame plus the second frame's
keypoint heatmaps and must synthesize the second frame.  The ground-truth
second frame is saved next to the output for eyeballing, along with PSNR.
"""

import argparse
from pathlib import Path

from handdiff import applications as apps
from handdiff.data_io import load_image, save_image
from handdiff.metrics import psnr
from handdiff.toy_eval import split_holdout
from handdiff.training import load_pipeline

ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--checkpoint", type=Path, default=ROOT / "fixtures/toy_run/pipeline.ckpt")
    ap.add_argument("--data", type=Path, default=ROOT / "fixtures/toy_data")
    ap.add_argument("--out", type=Path, default=Path("demos/out/gesture_transfer"))
    ap.add_argument("--guidance-w", type=float, default=1.5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    pipeline = load_pipeline(args.checkpoint)
    _, holdout = split_holdout(args.data / "manifest.jsonl", 8)
    # first and last frame of one held-out sequence, same camera
    seq = holdout[0].sequence_id
    view = holdout[0].view_id
    frames = sorted(
        (r for r in holdout if r.sequence_id == seq and r.view_id == view),
        key=lambda r: r.frame_index,
    )
    ref, tar = frames[0], frames[-1]

    ref_image = load_image(args.data / ref.image_path)
    tar_image = load_image(args.data / tar.image_path)
    out = apps.gesture_transfer(
        pipeline,
        ref_image,
        ref.keypoints,
        tar.keypoints,
        guidance=apps.GuidanceConfig(w=args.guidance_w),
        seed=args.seed,
    )

    save_image(args.out / "reference.png", ref_image)
    save_image(args.out / "target_truth.png", tar_image)
    save_image(args.out / "transferred.png", out)
    print(f"sequence {seq}, frame {ref.frame_index} -> {tar.frame_index}")
    print(f"psnr vs ground truth: {psnr(out, tar_image):.2f} dB")
    print(f"outputs under {args.out}")


if __name__ == "__main__":
    main()
