//! Enumeration, random generation, adversarial verification and sweeps.

pub mod enumerate;
pub mod random;
pub mod sweep;
pub mod verify;

pub use enumerate::{canonical_code, canonical_form, enumerate_connected, enumerate_connected_up_to};
pub use random::random_2k2free;
pub use sweep::{sweep_conjecture, sweep_mk2, SweepMode, SweepReport};
pub use verify::{verify_adversarial, worst_case_capture, EscapeWitness, Verdict};
