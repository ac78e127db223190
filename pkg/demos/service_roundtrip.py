"""Full HTTP round trip against a live server instance.

Starts the service in a background thread, submits a generation job over
real HTTP, polls until it finishes, and downloads the PNG, exactly what a
browser client does.
"""

import argparse
import threading
import time
from pathlib import Path

import httpx
import numpy as np
import uvicorn

from handdiff.data_io import load_image, save_image
from handdiff.service import create_app, encode_png_b64
from handdiff.toy_eval import split_holdout
from handdiff.training import load_pipeline

ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--checkpoint", type=Path, default=ROOT / "fixtures/toy_run/pipeline.ckpt")
    ap.add_argument("--data", type=Path, default=ROOT / "fixtures/toy_data")
    ap.add_argument("--out", type=Path, default=Path("demos/out/service"))
    ap.add_argument("--port", type=int, default=8731)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    pipeline = load_pipeline(args.checkpoint)
    app = create_app({"toy": pipeline}, results_dir=args.out / "results", workers=1)
    server = uvicorn.Server(
        uvicorn.Config(app, host="127.0.0.1", port=args.port, log_level="warning")
    )
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    while not server.started:
        time.sleep(0.05)
    base = f"http://127.0.0.1:{args.port}"
    print(f"serving on {base}")

    _, holdout = split_holdout(args.data / "manifest.jsonl", 8)
    ref, tar = holdout[0], holdout[1]
    image = load_image(args.data / ref.image_path)

    def kp_payload(kp):
        return {
            "points": kp.points.tolist(),
            "right_present": kp.right_present,
            "left_present": kp.left_present,
        }

    with httpx.Client(base_url=base, timeout=30.0) as client:
        print("checkpoints:", client.get("/api/checkpoints").json())
        accepted = client.post(
            "/api/generate",
            json={
                "checkpoint_id": "toy",
                "reference_image": encode_png_b64(image),
                "reference_keypoints": kp_payload(ref.keypoints),
                "target_keypoints": kp_payload(tar.keypoints),
                "guidance_w": 1.5,
                "flag_y": 0,
                "seed": 0,
            },
        )
        accepted.raise_for_status()
        job_id = accepted.json()["job_id"]
        while True:
            job = client.get(f"/api/jobs/{job_id}").json()
            if job["status"] in ("done", "failed"):
                break
            time.sleep(0.5)
        if job["status"] == "failed":
            raise SystemExit(f"job failed: {job['error']}")
        name = job["result"]["images"][0]
        png = client.get(f"/api/results/{job_id}/{name}")
        out_path = args.out / "result.png"
        out_path.write_bytes(png.content)
        print(f"job {job_id} done in "
              f"{job['finished_at'] - job['started_at']:.1f}s, saved {out_path}")
        print(f"result shape: {load_image(out_path).shape}")

    server.should_exit = True
    thread.join(timeout=5.0)


if __name__ == "__main__":
    main()
