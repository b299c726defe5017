"""Exact Hasse-Herbrand functions and depth transport under LLC for tori."""
from .cyclotomic import (
    CyclotomicParams,
    cyclotomic_filtration,
    phi_cyclotomic_over_F_closed_form,
    phi_cyclotomic_over_F_derived,
    phi_cyclotomic_over_K,
)
from .depth import (
    DepthReport,
    InducedTorusSpec,
    character_depth_from_parameter,
    depth_induce,
    depth_report,
    depth_shapiro,
    induced_torus_depth,
    inflation_locus,
    parameter_depth,
)
from .pwl import (
    INFINITE,
    PwlFunction,
    compose,
    evaluate,
    identity,
    invert,
    linear,
    pwl_equal,
    pwl_from_segments,
)
from .ramification import (
    Cyclotomic,
    Filtration,
    RamificationFiltration,
    Tame,
    Tower,
    Unramified,
    phi_from_filtration,
    psi_from_filtration,
    ramification_index,
    resolve_phi,
    transport_upper_index,
    upper_breaks,
)
from .rational import ParseError, format_rational, parse_rational

__version__ = "0.1.0"
