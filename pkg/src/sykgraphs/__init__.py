"""Exact combinatorics of rooted (q+1)-edge-colored SYK graphs.

The package splits into:

- graphs: the colored-graph objects and their invariants (order, Gurau
  degree, SYK / bipartite / melonic predicates);
- constellations: the contraction bijection to constellations and its
  signed extension covering non-bipartite graphs;
- kernels: core extraction, chain decomposition, and the finite kernel
  catalogs at fixed excess;
- series: exact counting series per (q, excess), closed-form chain factors,
  and asymptotic constants;
- oracle: brute-force class enumeration used to cross-check everything;
- sampler: exact-uniform random generation at fixed (q, excess, n) plus
  structural-certificate surveys;
- cli: the command-line front end.
"""

from .graphs import (
    ColoredGraph,
    canonical_form,
    canonical_key,
    from_contracted_permutations,
    gurau_degree,
    is_bipartite,
    is_melonic,
    is_syk,
    order,
    validate,
)
from .constellations import (
    Constellation,
    EmbeddedVertex,
    SignedConstellation,
    excess,
    psi,
    psi_hat,
    psi_hat_inverse,
    psi_inverse,
)
from .kernels import (
    KernelDiagram,
    chains,
    core,
    dominant_weighted_sum,
    enumerate_kernels,
    is_dominant,
    kernel,
    recompose,
)
from .oracle import (
    CountTable,
    SizeLimitError,
    count_table,
    enumerate_bipartite,
    enumerate_general,
)
from .series import (
    Series,
    asymptotic_estimate,
    asymptotic_profile,
    asymptotic_ratio,
    general_graphs_series,
    graphs_series,
    kappa,
    m_sequence,
    tree_series,
    z_critical,
)
from .sampler import (
    SampleReport,
    build_tables,
    chunk_rng,
    default_parallelism,
    sample_constellation,
    sample_graph,
    survey,
)

__version__ = "0.1.0"

__all__ = [
    "ColoredGraph",
    "Constellation",
    "CountTable",
    "EmbeddedVertex",
    "KernelDiagram",
    "SampleReport",
    "Series",
    "SignedConstellation",
    "SizeLimitError",
    "asymptotic_estimate",
    "asymptotic_profile",
    "asymptotic_ratio",
    "build_tables",
    "canonical_form",
    "canonical_key",
    "chains",
    "chunk_rng",
    "core",
    "count_table",
    "default_parallelism",
    "dominant_weighted_sum",
    "enumerate_bipartite",
    "enumerate_general",
    "enumerate_kernels",
    "excess",
    "from_contracted_permutations",
    "general_graphs_series",
    "graphs_series",
    "gurau_degree",
    "is_bipartite",
    "is_dominant",
    "is_melonic",
    "is_syk",
    "kappa",
    "kernel",
    "m_sequence",
    "order",
    "psi",
    "psi_hat",
    "psi_hat_inverse",
    "psi_inverse",
    "recompose",
    "sample_constellation",
    "sample_graph",
    "survey",
    "tree_series",
    "validate",
    "z_critical",
]
