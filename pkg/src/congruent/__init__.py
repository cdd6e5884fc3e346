"""Minimal-height right triangles for congruent numbers, in exact arithmetic."""
from .core import exact_sqrt, make_rational, squarefree_part
from .curve import (
    CurvePoint,
    GeneratorSet,
    add,
    double_affine,
    halve,
    make_point,
    min_height_select,
    point_to_sides,
    scalar_mul,
    sides_to_point,
    small_division_search,
    torsion_points,
)
from .pq_codec import (
    CompressedPQ,
    PQPair,
    TriangleSides,
    compress_pq,
    height,
    pq_to_sides,
    sides_to_pq,
    validate_pq,
)
from .search import SearchConfig, build_min_height_table, pair_to_record
from .table_io import (
    CongruentRecord,
    diff_tables,
    emit_plot_data,
    emit_table,
    parse_table,
    validate_record,
)
from .tunnell import TernaryForm, count_representations, tunnell_test

__version__ = "0.1.0"
