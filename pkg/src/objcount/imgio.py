"""Grayscale image and binary mask I/O.

Images are 2-D uint8 arrays (row-major, values 0..255). Masks are 2-D bool
arrays (True = object). Canonical on-disk format is PGM (P2 ASCII or P5
binary); 8-bit PNG is accepted on input as a convenience.
"""

import os

import numpy as np
from PIL import Image

from .errors import MalformedImageError, UnsupportedImageError

MAX_DIM = 65535

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def _pnm_tokens(data: bytes, count: int, start: int):
    """Read `count` whitespace-separated tokens, skipping '#' comments.

    Returns (tokens, offset_after_last_token).
    """
    tokens = []
    i = start
    n = len(data)
    while len(tokens) < count:
        while i < n and data[i : i + 1].isspace():
            i += 1
        if i < n and data[i : i + 1] == b"#":
            while i < n and data[i : i + 1] != b"\n":
                i += 1
            continue
        j = i
        while j < n and not data[j : j + 1].isspace() and data[j : j + 1] != b"#":
            j += 1
        if j == i:
            raise MalformedImageError("truncated PNM header")
        tokens.append(data[i:j])
        i = j
    return tokens, i


def _skip_space_and_comments(data: bytes, i: int) -> int:
    n = len(data)
    while i < n:
        if data[i : i + 1].isspace():
            i += 1
        elif data[i : i + 1] == b"#":
            while i < n and data[i : i + 1] != b"\n":
                i += 1
        else:
            break
    return i


def _check_dims(width: int, height: int):
    if width < 1 or height < 1:
        raise MalformedImageError(f"invalid dimensions {width}x{height}")
    if width > MAX_DIM or height > MAX_DIM:
        raise MalformedImageError(
            f"dimensions {width}x{height} exceed the {MAX_DIM} per-side limit"
        )


def _load_pgm(data: bytes) -> np.ndarray:
    magic = data[:2]
    try:
        header, _ = _pnm_tokens(data, 2, 2)
        width, height = (int(t) for t in header)
    except ValueError as e:
        raise MalformedImageError(f"bad PGM header: {e}") from None
    _check_dims(width, height)

    # maxval: digits only, so a binary raster may follow with no separator;
    # at most one whitespace byte after it is consumed
    i = _skip_space_and_comments(data, _pnm_tokens(data, 2, 2)[1])
    j = i
    while j < len(data) and data[j : j + 1].isdigit():
        j += 1
    if j == i:
        raise MalformedImageError("bad PGM header: missing maxval")
    maxval = int(data[i:j])
    pos = j
    if pos < len(data) and data[pos : pos + 1].isspace():
        pos += 1
    if maxval < 1:
        raise MalformedImageError(f"invalid maxval {maxval}")
    if maxval > 255:
        raise UnsupportedImageError(f"maxval {maxval} implies >8-bit depth")

    if magic == b"P5":
        raster = data[pos : pos + width * height]
        if len(raster) < width * height:
            raise MalformedImageError("raster truncated")
        img = np.frombuffer(raster, dtype=np.uint8).reshape(height, width)
        if img.max(initial=0) > maxval:
            raise MalformedImageError("pixel value exceeds maxval")
        return img.copy()

    # P2: ASCII sample values
    try:
        tokens, _ = _pnm_tokens(data, width * height, pos)
        values = [int(t) for t in tokens]
    except (ValueError, MalformedImageError):
        raise MalformedImageError("P2 raster truncated or non-numeric") from None
    arr = np.array(values, dtype=np.int64).reshape(height, width)
    if arr.min() < 0 or arr.max() > maxval:
        raise MalformedImageError("pixel value outside [0, maxval]")
    return arr.astype(np.uint8)


def _load_png(path) -> np.ndarray:
    with Image.open(path) as im:
        if im.mode == "L":
            arr = np.asarray(im, dtype=np.uint8)
        elif im.mode == "RGB":
            rgb = np.asarray(im, dtype=np.int64)
            # integer BT.601 luma, round half up
            arr = (
                (299 * rgb[..., 0] + 587 * rgb[..., 1] + 114 * rgb[..., 2] + 500)
                // 1000
            ).astype(np.uint8)
        else:
            raise UnsupportedImageError(f"unsupported PNG mode {im.mode!r}")
    _check_dims(arr.shape[1], arr.shape[0])
    return arr


def load_gray(path) -> np.ndarray:
    """Load a grayscale image from a PGM (P2/P5) or 8-bit PNG file."""
    with open(path, "rb") as fh:
        head = fh.read(8)
    if head[:2] in (b"P2", b"P5"):
        with open(path, "rb") as fh:
            return _load_pgm(fh.read())
    if head == _PNG_MAGIC:
        return _load_png(path)
    raise UnsupportedImageError(f"unrecognized image format in {os.fspath(path)!r}")


def save_mask(mask: np.ndarray, path) -> None:
    """Write a binary mask as a P5 PGM, object=255 and background=0."""
    mask = np.asarray(mask, dtype=bool)
    if mask.ndim != 2:
        raise ValueError("mask must be 2-D")
    height, width = mask.shape
    _check_dims(width, height)
    raster = np.where(mask, 255, 0).astype(np.uint8)
    with open(path, "wb") as fh:
        fh.write(b"P5\n%d %d\n255\n" % (width, height))
        fh.write(raster.tobytes())


def save_gray(img: np.ndarray, path) -> None:
    """Write a grayscale image as a P5 PGM."""
    img = np.asarray(img, dtype=np.uint8)
    if img.ndim != 2:
        raise ValueError("image must be 2-D")
    height, width = img.shape
    _check_dims(width, height)
    with open(path, "wb") as fh:
        fh.write(b"P5\n%d %d\n255\n" % (width, height))
        fh.write(img.tobytes())
