//! Exact character arithmetic for the classical groups: partitions and
//! Littlewood-Richardson combinatorics, universal characters, finite-rank
//! Weyl characters as Laurent polynomials, and a verification engine for
//! the alternating-sum Jacobi-Trudi character formula.

pub mod error;
pub mod group;
pub mod laurent;
pub mod minaff;
pub mod partitions;
pub mod schur;
pub mod sweep;
pub mod universal;
pub mod weyl;

pub use error::{Error, Result};
pub use group::{ClassicalFamily, GroupInstance};
pub use laurent::LaurentPoly;
pub use minaff::{
    big_c, big_c_oracle, gamma_set, jt_determinant, psi_set, verify_main, verify_main_with,
    verify_rank_stability, verify_stable, verify_stable_with, Check, GammaEntry, Root,
    VerificationReport,
};
pub use partitions::{
    partitions_of, partitions_up_to, q_members, sub_partitions, FamilySign, HighestWeight,
    Partition,
};
pub use schur::{lr_coefficient, SymFunc};
pub use sweep::{run_sweep, ExecMode, SweepConfig, SweepOutcome};
pub use universal::{
    branching_multiplicity, littlewood_expand, schur_to_universal, Family, UniversalChar,
};
pub use weyl::{decompose, h_char, sym_square_char, wedge_power_char, weyl_character};
