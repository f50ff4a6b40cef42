//! Braid-group computations with the classical Garside structure:
//! words and permutation braids, left normal forms, conjugacy-invariant
//! machinery (cyclic sliding, super summit sets), exact curves on punctured
//! disks, Nielsen-Thurston classification of 4-strand braids, and conjugacy
//! search for non-pseudo-Anosov 4-braids.

pub mod conjugacy;
pub mod curve;
pub mod error;
pub mod freegroup;
pub mod link;
pub mod normal;
pub mod nt;
pub mod oracle;
pub mod perm;
pub mod simple;
pub mod sliding;
pub mod sss;
pub mod word;

pub use conjugacy::{
    conjugate_nonpa, conjugate_periodic, conjugate_reducible2, conjugate_reducible3,
    tube_decompose, ConjugacyAnswer, Obstruction, TubeDecomposition,
};
pub use curve::{
    act, act_simple, complexity_upto, is_almost_round, is_round, round_curve,
    three_puncture_catalogue, track_through_factors, Curve, CurveCatalogue,
};
pub use error::{Error, Result};
pub use link::{linking_number, outer_crossing_count, remove_strand};
pub use normal::{normal_form, NormalForm};
pub use nt::{
    blow_up, has_3puncture_reduction, is_periodic, nt_type, pure_power, reduction_to_round,
    NTType, PeriodicBase, PeriodicData, ReducibleBranch, ReducibleWitness,
};
pub use perm::Perm;
pub use simple::{left_weighted, SimpleBraid};
pub use sliding::{
    cyclic_sliding, cycling, is_rigid, preferred_prefix, sss_representative, SlidingTrace,
};
pub use sss::{b3_conjugacy, b3_sss_enumerate, sss_enumerate_bounded, SSSet};
pub use word::BraidWord;
