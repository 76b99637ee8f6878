"""braidkit: Garside-structure braid arithmetic, conjugacy tools, root extraction.

The main entry points:

* :mod:`braidkit.core` -- simple elements, braid words, left normal forms and
  exact group arithmetic in B_n.
* :mod:`braidkit.conjugacy` -- cycling, cyclic sliding, rigidity, cycling
  orbits and centralizer bases.
* :mod:`braidkit.roots` -- generic-case k-th root extraction with verified
  outcomes.
* :mod:`braidkit.lab` -- reproducible sampling, brute-force lattice oracles,
  genericity experiments and runtime benchmarks.
* :mod:`braidkit.cli` -- the ``braidkit`` command-line tool.

Hot permutation kernels run on a compiled backend when the extension built,
with a pure-Python fallback selected automatically at import
(:mod:`braidkit.kernel`).
"""

from .conjugacy import (
    CentralizerBasis,
    CentralizerCase,
    CentralizerError,
    ConjugationCertificate,
    OrbitData,
    SlidingBoundExceeded,
    centralizer_basis,
    cycling,
    cycling_orbit,
    cyclic_sliding,
    decycling,
    final_factor,
    initial_factor,
    is_rigid,
    is_uss_minimal,
    min_rigid_conjugator_with_atom,
    minimal_simple_elements,
    preferred_prefix,
    slide_to_rigid,
)
from .core import (
    BraidWord,
    CanonicalBraid,
    SimpleElement,
    braid_from_text,
    normalize,
    parse_nf,
    render_nf,
)
from .kernel import available_backends, backend_name, use_backend
from .roots import (
    NonGeneric,
    NoRoot,
    Root,
    RootExtractionError,
    RootOutcome,
    extract_root,
    quick_no_root,
    verify_root,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CanonicalBraid",
    "CentralizerBasis",
    "CentralizerCase",
    "CentralizerError",
    "ConjugationCertificate",
    "NonGeneric",
    "NoRoot",
    "OrbitData",
    "Root",
    "RootExtractionError",
    "RootOutcome",
    "SimpleElement",
    "SlidingBoundExceeded",
    "available_backends",
    "backend_name",
    "braid_from_text",
    "centralizer_basis",
    "cycling",
    "cycling_orbit",
    "cyclic_sliding",
    "decycling",
    "extract_root",
    "final_factor",
    "initial_factor",
    "is_rigid",
    "is_uss_minimal",
    "min_rigid_conjugator_with_atom",
    "minimal_simple_elements",
    "normalize",
    "parse_nf",
    "preferred_prefix",
    "quick_no_root",
    "render_nf",
    "slide_to_rigid",
    "use_backend",
    "verify_root",
    "__version__",
]
