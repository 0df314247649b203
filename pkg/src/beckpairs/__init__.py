"""Exact verification laboratory for Beck-type companion identities of
Euler pairs of order r: restricted-partition enumeration, invertible
combinatorial maps, and truncated generating-function cross-checks."""

from .bijections import (
    DecoratedPartition,
    MappingError,
    MarkedPartition,
    Overpartition,
    d1r_to_decorated,
    decorated_fiber,
    decorated_to_d1r,
    decorated_to_o1r,
    enumerate_decorated,
    enumerate_marked,
    enumerate_overlined,
    format_decorated,
    format_marked,
    format_overlined,
    glaisher_merge,
    glaisher_split,
    marked_to_decorated,
    o1r_to_decorated,
    overlined_to_t,
    parse_decorated,
    parse_marked,
    parse_overlined,
    t_to_overlined,
)
from .multipartite import (
    MultipartError,
    VBeckReport,
    enumerate_vd,
    enumerate_vo,
    is_primitive_multipart,
    v_beck_statistics,
    vglaisher_merge,
    vglaisher_split,
)
from .pairs import (
    EulerPair,
    IntegerSet,
    PairError,
    PartDecomposition,
    ValidationReport,
    builtin_pair,
    catalog_entries,
    catalog_ids,
    validate,
)
from .partitions import (
    PartConstraint,
    Partition,
    PartitionError,
    enumerate_partitions,
    format_partition,
    iter_partitions,
    parse_partition,
)
from .series import (
    TruncatedSeries,
    check_sets_identity,
    first_mismatch,
    gf_a,
    gf_b,
    gf_b_prime,
    gf_c,
    gf_c_prime,
    gf_counts,
)
from .stats import (
    BeckReport,
    ClassId,
    beck_statistics,
    distinct_core_multiplicity,
    enumerate_class,
    iter_class,
    sweep,
)

__version__ = "0.1.0"
