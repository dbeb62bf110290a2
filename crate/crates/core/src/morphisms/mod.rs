//! Morphisms `P² → Gr(2, C^4)` given by explicit bundle surjections.

mod baselocus;
pub mod modp;
mod scan;
mod split;
mod tangent;

pub use baselocus::{
    base_locus, BaseLocus, BaseWitness, EliminationConfig, EmptinessCertificate, WitnessSource,
};
pub use split::{dual_class, example_split, DualIncidence, SplitClassEvidence, SplitSurjection};
pub use tangent::{tangent_random, TangentClassEvidence, TANGENT_FIXTURE, TangentSurjection};
pub use scan::{collision_scan, CollisionReport, ScanMode, MAX_REPORTED_COLLISIONS};
