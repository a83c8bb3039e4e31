"""Information-theoretic measures and Bayesian structure/action updates on contingency tables."""

from .contingency import (
    PosteriorDecomposition,
    RatioTable,
    UpdateReport,
    bayes_posterior,
    coverage_ratio,
    dynamic_prediction,
    normalization_ratio,
    posterior_decomposition,
    update_components,
    update_information,
    year_pair_analysis,
)
from .dynamics import SimulationConfig, StepRecord, Trajectory, simulate, step, structured_joint
from .errors import (
    DecompositionUndefinedError,
    DegenerateTableError,
    InfiniteSurpriseError,
    InfodynError,
    LabelError,
    MatrixFormatError,
    MissingValueError,
    NegativeCountError,
    NoTransmissionChangeError,
    UncoveredLabelError,
    UnknownLabelError,
)
from .ingest import RawCountTable, read_matrix, read_partition, write_matrix, write_partition
from .measures import (
    CellTerms,
    GroupDecomposition,
    cell_terms,
    conditional_entropy,
    entropy,
    expected_information,
    group_decomposition,
    joint_entropy,
    max_entropy,
    redundancy,
    transmission,
)
from .tables import (
    COL,
    ROW,
    ConditionalTable,
    JointTable,
    LabeledDistribution,
    Partition,
    aggregate,
    conditional,
    marginal,
    normalize,
)

__version__ = "0.1.0"
