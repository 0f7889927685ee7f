//! Named groups: a small descriptor language, permutation builders for the
//! families it names, |Out(S)| data, an analytic model of PSL(2,q) and the
//! growth scans built on top of them.

mod build;
mod descriptor;
mod linear;
mod out;
mod psl2;
mod registry;
mod scan;
mod suzuki;
mod sweep;

pub use build::{build, closed_form_order, Built};
pub use descriptor::{parse, Descriptor};
pub use out::{nu, out_bound, out_order};
pub use scan::{asymptotic_scan, first_decrease, record_for, AsymptoticRecord, Family};
pub use sweep::{small_group_sweep, SweepGroup, SWEEP_MAX_ORDER};
pub use registry::{catalog, entry, entry_fingerprint, identify, CatalogEntry, EntryStatus, SMALL_KR_QUOTIENTS};
pub use psl2::{enumerated_profile, odd_prime_powers, psl2_real_profile, Psl2Profile, VALIDATION_LIMIT};
