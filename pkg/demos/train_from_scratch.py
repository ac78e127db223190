"""Train the micro preset end to end on a freshly generated dataset.

Everything runs at thumbnail scale so the whole loop (data, pairing,
augmentation, denoiser training, checkpointing, one sample) finishes in
about a minute on a laptop CPU.  The point is the plumbing, not quality;
see gesture_transfer.py for the trained toy checkpoint.
"""

import argparse
from pathlib import Path

import numpy as np

from handdiff import applications as apps
from handdiff.data_io import load_manifest, save_image
from handdiff.diffusion import make_schedule
from handdiff.latent_codec import CodecSpec, make_codec
from handdiff.model import ModelConfig
from handdiff.toy_data import ToyDatasetConfig, generate_toy_dataset
from handdiff.training import PairDataset, TrainConfig, fit, load_pipeline


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("demos/out/micro_run"))
    ap.add_argument("--steps", type=int, default=300)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    data_dir = args.out / "data"
    if not (data_dir / "manifest.jsonl").exists():
        generate_toy_dataset(
            data_dir,
            ToyDatasetConfig(
                num_sequences=6,
                frames_per_sequence=6,
                views_per_sequence=2,
                image_size=64,
                seed=1,
            ),
        )
    dataset = PairDataset(data_dir / "manifest.jsonl")

    # a barely-capable model keeps the wall time in demo territory
    model_config = ModelConfig(
        dim=32,
        depth=2,
        heads=4,
        latent_size=16,
        latent_channels=3,
        patch_size=2,
        repa_depth=1,
        teacher_dim=16,
        image_size=64,
    )
    codec = make_codec(CodecSpec(kind="identity", scale=4, latent_channels=3))
    ckpt = args.out / "pipeline.ckpt"
    state, history = fit(
        dataset,
        model_config,
        codec,
        TrainConfig(steps=args.steps, batch_size=8, lr=1e-3, seed=0),
        sched=make_schedule(50),
        out_path=ckpt,
    )
    first = np.mean([h["loss"] for h in history[:10]])
    last = np.mean([h["loss"] for h in history[-10:]])
    print(f"trained {state.step} steps, loss {first:.3f} -> {last:.3f}")

    pipeline = load_pipeline(ckpt)
    rec = load_manifest(data_dir / "manifest.jsonl")[0]
    from handdiff.data_io import load_image

    image = load_image(data_dir / rec.image_path)
    out = apps.gesture_transfer(
        pipeline, image, rec.keypoints, rec.keypoints,
        guidance=apps.GuidanceConfig(w=1.5), seed=0,
    )
    save_image(args.out / "identity_sample.png", out)
    print(f"checkpoint: {ckpt}")
    print(f"sample:     {args.out / 'identity_sample.png'}")


if __name__ == "__main__":
    main()
