"""Sparse-coding scan-order benchmark.

Pipeline per image and scan: pad to 32x32, flatten along the scan, run
orthogonal matching pursuit against the 1D Haar dictionary, reconstruct,
and score PSNR.  Batch statistics are box-plot summaries (median,
median-exclusive quartiles, Tukey 1.5*IQR whiskers) of PSNR and of the
pursuit wall time.
"""

from __future__ import annotations

import math
import struct
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import FormatError
from .omp import omp
from .scan import ScanOrder
from .wavelets import haar_dictionary

__all__ = [
    "GrayImage",
    "BenchRecord",
    "BoxStats",
    "BatchStats",
    "IDX_IMAGE_MAGIC",
    "DEFAULT_SPARSITY",
    "PSNR_PEAK",
    "load_idx_images",
    "write_idx_images",
    "pad_image",
    "scan_flatten",
    "unflatten",
    "psnr",
    "box_stats",
    "run_batch",
    "records_to_csv",
]

IDX_IMAGE_MAGIC = 0x00000803  # IDX3, unsigned byte, 3 dimensions
PSNR_PEAK = 255.0
DEFAULT_SPARSITY = 102  # 10% of the 1024 padded pixels


class GrayImage:
    """Grayscale image; pixel at cell (x, y) is ``pixels[y, x]``."""

    __slots__ = ("pixels",)

    def __init__(self, pixels):
        arr = np.asarray(pixels)
        if arr.ndim != 2:
            raise ValueError("pixels must be a 2D array")
        self.pixels = arr

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __repr__(self) -> str:
        return f"GrayImage({self.width}x{self.height})"


def _read_exactly(stream, size: int) -> bytes:
    data = stream.read(size)
    if len(data) != size:
        raise FormatError(f"truncated stream: wanted {size} bytes, got {len(data)}")
    return data


def load_idx_images(source, count: int) -> list[GrayImage]:
    """First `count` images from an IDX3 unsigned-byte stream (MNIST layout).

    `source` may be a path or a binary file object.  The header is four
    big-endian 32-bit words: magic 0x00000803, image count, rows, cols.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    if hasattr(source, "read"):
        return _load_idx(source, count)
    with open(source, "rb") as fh:
        return _load_idx(fh, count)


def _load_idx(stream, count: int) -> list[GrayImage]:
    magic, available, rows, cols = struct.unpack(">IIII", _read_exactly(stream, 16))
    if magic != IDX_IMAGE_MAGIC:
        raise FormatError(f"bad magic 0x{magic:08x}, expected 0x{IDX_IMAGE_MAGIC:08x}")
    if count > available:
        raise FormatError(f"requested {count} images but the stream declares {available}")
    pixels = np.frombuffer(_read_exactly(stream, count * rows * cols), dtype=np.uint8)
    return [GrayImage(img) for img in pixels.reshape(count, rows, cols)]


def write_idx_images(target, images) -> None:
    """Write images (all the same size) as an IDX3 unsigned-byte file."""
    images = list(images)
    if not images:
        raise ValueError("need at least one image")
    rows, cols = images[0].pixels.shape
    payload = [struct.pack(">IIII", IDX_IMAGE_MAGIC, len(images), rows, cols)]
    for img in images:
        if img.pixels.shape != (rows, cols):
            raise ValueError("all images must share one size")
        payload.append(np.clip(np.asarray(img.pixels), 0, 255).astype(np.uint8).tobytes())
    data = b"".join(payload)
    if hasattr(target, "write"):
        target.write(data)
    else:
        with open(target, "wb") as fh:
            fh.write(data)


def pad_image(img: GrayImage) -> GrayImage:
    """Center a 28x28 image in a 32x32 canvas with a 2-pixel zero border."""
    if (img.height, img.width) != (28, 28):
        raise ValueError(f"expected a 28x28 image, got {img.width}x{img.height}")
    return GrayImage(np.pad(img.pixels, 2))


def scan_flatten(img: GrayImage, scan: ScanOrder) -> np.ndarray:
    """1D signal with vector[d] = pixel at the scan's d-th cell."""
    if (scan.width, scan.height) != (img.width, img.height):
        raise ValueError(
            f"scan is {scan.width}x{scan.height}, image is {img.width}x{img.height}"
        )
    return np.asarray(img.pixels, dtype=np.float64)[scan.ys, scan.xs]


def unflatten(vector, scan: ScanOrder) -> GrayImage:
    """Inverse of scan_flatten."""
    vector = np.asarray(vector, dtype=np.float64).ravel()
    if vector.shape[0] != len(scan):
        raise ValueError(f"vector length {vector.shape[0]} != scan size {len(scan)}")
    pixels = np.empty((scan.height, scan.width), dtype=np.float64)
    pixels[scan.ys, scan.xs] = vector
    return GrayImage(pixels)


def psnr(original: GrayImage, reconstructed: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB against a peak of 255.

    The reconstruction is clipped to [0, 255] first; identical images
    return math.inf (written as ``inf`` in CSV output).
    """
    if (original.width, original.height) != (reconstructed.width, reconstructed.height):
        raise ValueError("image dimensions differ")
    a = np.asarray(original.pixels, dtype=np.float64)
    b = np.clip(np.asarray(reconstructed.pixels, dtype=np.float64), 0.0, PSNR_PEAK)
    mse = float(np.mean((a - b) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(PSNR_PEAK**2 / mse)


@dataclass(frozen=True, slots=True)
class BenchRecord:
    image_id: int
    scan: str
    sparsity: int
    psnr_db: float
    omp_time_ms: float
    iterations: int


def records_to_csv(records) -> str:
    lines = ["image_id,scan,sparsity,psnr_db,omp_time_ms,iterations"]
    for r in records:
        lines.append(
            f"{r.image_id},{r.scan},{r.sparsity},{r.psnr_db:.6f},{r.omp_time_ms:.3f},{r.iterations}"
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True, slots=True)
class BoxStats:
    """Five-number box-plot summary with a Tukey outlier count."""

    q1: float
    median: float
    q3: float
    whisker_lo: float
    whisker_hi: float
    n_outliers: int


def _median(sorted_vals: np.ndarray) -> float:
    n = sorted_vals.size
    mid = n // 2
    if n % 2:
        return float(sorted_vals[mid])
    return float((sorted_vals[mid - 1] + sorted_vals[mid]) / 2.0)


def box_stats(values) -> BoxStats:
    """Median-exclusive quartiles and whiskers at the most extreme points
    within 1.5 IQR of the quartiles."""
    vals = np.sort(np.asarray(list(values), dtype=np.float64))
    if vals.size == 0:
        raise ValueError("box_stats needs at least one value")
    n = vals.size
    med = _median(vals)
    q1 = _median(vals[: n // 2]) if n > 1 else med
    q3 = _median(vals[(n + 1) // 2 :]) if n > 1 else med
    iqr = q3 - q1
    lo_fence = q1 - 1.5 * iqr
    hi_fence = q3 + 1.5 * iqr
    inside = vals[(vals >= lo_fence) & (vals <= hi_fence)]
    whisker_lo = float(inside[0]) if inside.size else q1
    whisker_hi = float(inside[-1]) if inside.size else q3
    return BoxStats(
        q1=q1,
        median=med,
        q3=q3,
        whisker_lo=whisker_lo,
        whisker_hi=whisker_hi,
        n_outliers=int(n - inside.size),
    )


@dataclass(slots=True)
class BatchStats:
    """Per-scan box statistics for PSNR and pursuit time."""

    sparsity: int
    seed: int
    psnr: dict[str, BoxStats] = field(default_factory=dict)
    time_ms: dict[str, BoxStats] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = ["scan,metric,q1,median,q3,whisker_lo,whisker_hi,n_outliers"]
        for metric, table in (("psnr_db", self.psnr), ("omp_time_ms", self.time_ms)):
            for name, s in table.items():
                lines.append(
                    f"{name},{metric},{s.q1:.6f},{s.median:.6f},{s.q3:.6f},"
                    f"{s.whisker_lo:.6f},{s.whisker_hi:.6f},{s.n_outliers}"
                )
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        lines = [f"batch statistics (sparsity {self.sparsity})"]
        for metric, table in (("PSNR dB", self.psnr), ("OMP ms", self.time_ms)):
            lines.append(f"  {metric}:")
            for name, s in table.items():
                lines.append(
                    f"    {name:<12} median {s.median:9.3f}   q1 {s.q1:9.3f}   q3 {s.q3:9.3f}   "
                    f"whiskers [{s.whisker_lo:.3f}, {s.whisker_hi:.3f}]   outliers {s.n_outliers}"
                )
        for err in self.errors:
            lines.append(f"  error: {err}")
        return "\n".join(lines)


def run_batch(
    images,
    scans,
    k: int = DEFAULT_SPARSITY,
    tol: float = 0.0,
    seed: int = 0,
) -> tuple[list[BenchRecord], BatchStats]:
    """Benchmark every image under every scan.

    Images may be 28x28 (padded here) or already 32x32.  Scans must be
    32x32 ScanOrder objects.  Wall time covers the pursuit call only and
    everything runs serially; time statistics exclude each scan's first
    image as JIT/cache warm-up whenever more than one image is timed.
    The pipeline itself is deterministic; `seed` is carried into the
    stats for report provenance.
    """
    scans = list(scans)
    for scan in scans:
        if (scan.width, scan.height) != (32, 32):
            raise ValueError(f"scan {scan.name} is {scan.width}x{scan.height}, expected 32x32")
    dictionary = haar_dictionary(32 * 32)
    records: list[BenchRecord] = []
    stats = BatchStats(sparsity=k, seed=seed)
    prepared: list[GrayImage] = []
    for i, img in enumerate(images):
        if (img.height, img.width) == (28, 28):
            prepared.append(pad_image(img))
        elif (img.height, img.width) == (32, 32):
            prepared.append(img)
        else:
            stats.errors.append(f"image {i}: unsupported size {img.width}x{img.height}")
            prepared.append(None)
    for scan in scans:
        for i, img in enumerate(prepared):
            if img is None:
                continue
            try:
                signal = scan_flatten(img, scan)
                t0 = time.perf_counter()
                coding = omp(signal, dictionary, k, tol)
                elapsed_ms = (time.perf_counter() - t0) * 1000.0
                recon = unflatten(dictionary.reconstruct(coding.indices, coding.coefficients), scan)
                records.append(
                    BenchRecord(
                        image_id=i,
                        scan=scan.name,
                        sparsity=k,
                        psnr_db=psnr(img, recon),
                        omp_time_ms=elapsed_ms,
                        iterations=coding.iterations,
                    )
                )
            except Exception as exc:  # propagate into the report, keep the batch running
                stats.errors.append(f"image {i}, scan {scan.name}: {exc}")
    for scan in scans:
        rows = [r for r in records if r.scan == scan.name]
        if not rows:
            continue
        stats.psnr[scan.name] = box_stats([r.psnr_db for r in rows])
        timed = rows[1:] if len(rows) > 1 else rows
        stats.time_ms[scan.name] = box_stats([r.omp_time_ms for r in timed])
    return records, stats
