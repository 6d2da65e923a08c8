"""Space-filling curve toolkit.

Grammar-based construction of the Aztec, Hilbert and Peano curves plus
raster/serpentine/zig-zag scans, cluster and locality analysis, SVG
rendering, and a sparse-coding benchmark comparing scan orders.
"""

from .analysis import (
    ClusterRect,
    ClusterReport,
    LocalityStats,
    VerificationReport,
    enumerate_clusters,
    lift_cluster,
    locality_benchmark,
    verify_curve,
)
from .csbench import (
    BatchStats,
    BenchRecord,
    BoxStats,
    GrayImage,
    box_stats,
    load_idx_images,
    pad_image,
    psnr,
    records_to_csv,
    run_batch,
    scan_flatten,
    unflatten,
    write_idx_images,
)
from .curves import CurveId, d2xy, path, scan_at_side, subsampled_scan, xy2d
from .dihedral import (
    ALL_OPS,
    ANTI_TRANSPOSE,
    IDENTITY,
    MIRROR_H,
    MIRROR_V,
    ROT90_CCW,
    ROT90_CW,
    ROT180,
    TRANSPOSE,
    DihedralOp,
    Move,
)
from .errors import CapacityError, FormatError
from .grammar import (
    AZTEC,
    AZTEC_A,
    AZTEC_B,
    AZTEC_C,
    AZTEC_D,
    HILBERT,
    PEANO,
    GrammarSpec,
    Production,
    ValidationVerdict,
    derive_production,
    derived_productions,
    expand,
    production_from_arrows,
    validate,
)
from .omp import SparseCoding, omp
from .render import RenderStyle, render_clusters, render_path
from .scan import ScanOrder
from .wavelets import Dictionary, haar_dictionary

__version__ = "0.1.0"
