"""Exact arithmetic for rigidified extensions of Q by Z and the solenoid A_Q/Q."""

from solenoid.exact_arith import (
    PAdicFrac,
    Rat,
    TorusPoint,
    bezout,
    decompose,
    format_rat,
    frac_p,
    global_frac_parts,
    is_prime,
    parse_rat,
    valuation,
)
from solenoid.adele import (
    AdeleClass,
    FiniteAdele,
    canonicalize,
    ext_class,
    fa_make,
    is_diagonal,
    real_inject,
)
from solenoid.character import chi, chi_is_trivial
from solenoid.extension import (
    BaerElement,
    CongruenceWitness,
    ExtElement,
    ExtPresentation,
    RigidExt,
    apply_congruence,
    baer_pullback,
    baer_quotient,
    baer_structural,
    baer_sum,
    congruent_z,
    congruent_z0,
    delta_bar,
    el_add,
    el_make,
    exactness_witness,
    forget,
    i_embed,
    j_project,
    lift_phi,
    r_action,
    splitting_defect,
    to_solenoid,
)
from solenoid.numberfield import (
    OkExt,
    QuadraticField,
    haar_mass,
    haar_mass_squared,
    make_field,
    ok_action,
    to_solenoid_vector,
    trace_gram,
)

__version__ = "0.1.0"
