"""Auslander-Reiten data for finitely presented representations of
strongly locally finite quivers, including the infinite Dynkin families."""

from .linalg import QQ, FieldFp, Matrix, field_from_name
from .quiver import (
    Quiver,
    a_biinf,
    a_inf,
    build_quiver,
    d_inf,
    finite_quiver,
    kronecker_quiver,
    qc_quiver,
)
from .reps import (
    DInfRep,
    DimVector,
    InjRep,
    ProjRep,
    SimpleRep,
    StringRep,
    WindowRep,
    ZeroRep,
    decompose,
    dinf_rep,
    dualize,
    hom_ext_dims,
    is_isomorphic,
    kronecker_regular,
    rad_top_soc,
    restrict,
    standard_rep,
    string_rep_from_interval,
    string_rep_from_walk,
)
from .presentations import minimal_presentation
from .ar import ARSequence, DtrResult, Unavailable, almost_split, ar_translate, mras, nakayama
from .strings import dinf_indec_test, double_hook, orbit_classify, qr_ql_sets, tau_string
from .components import (
    ar_capabilities,
    component_shape,
    knit_component,
    regular_census,
)
from .derived import (
    DerivedObject,
    Triangle,
    connecting_window,
    derived_ar_triangle,
    derived_capabilities,
    derived_irr_shift,
)

__version__ = "0.1.0"
