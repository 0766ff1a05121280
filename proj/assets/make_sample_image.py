#!/usr/bin/env python3
"""Regenerate assets/sample_image.jpg, the bundled demo plaintext.

A 640x480 synthetic RGB picture (smooth gradients plus sensor-like noise)
saved as a baseline JPEG. The committed file is the fixture; rerunning this
with a different libjpeg may produce different bytes.
"""
import io
import pathlib

import numpy as np
from PIL import Image


def render(width=640, height=480, quality=70, seed=7):
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:height, 0:width]
    red = 128 + 80 * np.sin(x / 11.0 + y / 23.0)
    green = 128 + 70 * np.cos(y / 9.0) * np.sin(x / 31.0)
    blue = ((x ^ y) & 0xFF) * 0.6 + 40
    img = np.stack([red, green, blue], -1) + rng.normal(0, 18, (height, width, 3))
    buf = io.BytesIO()
    Image.fromarray(np.clip(img, 0, 255).astype(np.uint8)).save(buf, "JPEG", quality=quality)
    return buf.getvalue()


if __name__ == "__main__":
    out = pathlib.Path(__file__).with_name("sample_image.jpg")
    out.write_bytes(render())
    print(out, out.stat().st_size)
