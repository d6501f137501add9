//! Computations in Garside groups: left normal forms, cycling and
//! decycling, super and ultra summit sets, conjugacy search, and the
//! rigidity of powers.
//!
//! Two structures ship with the crate: braid groups `B_n` with the
//! classical Garside structure ([`braid`]) and free abelian groups `Z^n`
//! ([`free_abelian`]). Everything else is generic over
//! [`GarsideStructure`].
//!
//! ```
//! use garside::{braid, parse_word, rigidity};
//!
//! let b5 = braid(5)?;
//! let x = parse_word("12132143 143", b5)?;
//! assert_eq!(x.pow(2).to_string(), "D^1 . 2324321 . 14 . 143");
//! assert_eq!(rigidity(&x.pow(3)).to_string(), "1");
//! # Ok::<(), garside::GarsideError>(())
//! ```

mod abelian;
mod braid;
mod conjugacy;
mod error;
mod normal_form;
mod powers;
mod rigidity;
mod structure;
mod uss;
mod word;

pub use abelian::{free_abelian, FreeAbelian};
pub use braid::{braid, BraidGroup, Perm, MAX_STRANDS};
pub use conjugacy::{
    cycling, cycling_orbit, decycling, is_in_uss, is_super_summit, minimal_simple_elements,
    minimal_simple_elements_with, solve_conjugacy, solve_conjugacy_with, to_sss, to_uss, transport,
    ConjugationStep, StepKind,
};
pub use error::{GarsideError, Result};
pub use normal_form::{format_simple, normalize, NormalForm};
pub use powers::{
    iota_power_chain, rigid_power, stabilize_powers, Certificate, Hypotheses, IotaChain, PowerEntry,
    RigidPowerReport, RigidPowerResult,
};
pub use rigidity::{
    absolute_final_factor, absolute_initial_factor, final_chain_stabilization,
    initial_chain_stabilization, is_rigid, product_c, product_r, rigidity, unexpected_deltas,
    verify_cm_theorem, CyclingRecord, Rational,
};
pub use structure::{GarsideStructure, DEFAULT_SIMPLE_CAP};
pub use uss::{uss, uss_with, Arrow, SearchOptions, UssGraph};
pub use word::{parse_simple, parse_word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/structures.md")]
    mod structures {}
    #[doc = include_str!("../../../book/src/normal-forms.md")]
    mod normal_forms {}
    #[doc = include_str!("../../../book/src/summit-sets.md")]
    mod summit_sets {}
    #[doc = include_str!("../../../book/src/uss-graph.md")]
    mod uss_graph {}
    #[doc = include_str!("../../../book/src/cycling-and-powers.md")]
    mod cycling_and_powers {}
    #[doc = include_str!("../../../book/src/rigidity.md")]
    mod rigidity {}
    #[doc = include_str!("../../../book/src/rigid-powers.md")]
    mod rigid_powers {}
}
