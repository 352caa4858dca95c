//! The Schur-Weyl kernel of H^mu(S_n): its linear basis in the dagger
//! Kazhdan-Lusztig basis (every basis element whose shape has more than N
//! rows), the two candidate generators, and mechanical verification of their
//! expected properties: equality, bar-invariance, membership, and generation
//! of the kernel as a two-sided ideal.

mod generators;
mod kernel;
mod onedim;

pub use generators::{
    gamma_elt, gamma_word, tilde_w_hook, tilde_w_mu, x_element, x_element_with_entries,
    y_element,
};
pub use kernel::{check_conjectures, ideal_basis, ConjectureReport, KernelSpec, RankMode};
pub use onedim::{one_dim_checks, OneDimReport};

use crate::parahecke::{CosetSystem, ParaElt};

/// Errors raised by kernel-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("need d = N+1 parts, found d = {d}, N = {n}")]
    WrongDepth { d: usize, n: usize },
    #[error("need d > N for a nonzero kernel (d = {d}, N = {n})")]
    EmptyKernel { d: usize, n: usize },
    #[error("rank evaluation disagreed across sample points")]
    InconsistentRanks,
    #[error(transparent)]
    Para(#[from] crate::parahecke::ParaError),
}

/// Non-gating probe: does `z` commute with every spanning-set multiplier?
/// Centrality of the kernel generator is conjectural in general, so this is
/// reported, never asserted.
pub fn centrality_probe(system: &CosetSystem, z: &ParaElt) -> bool {
    let unit_of = |idx: usize| {
        ParaElt::from_terms(
            system.mu().clone(),
            crate::parahecke::ParaBasis::TMin,
            vec![(system.coset(idx).rmin.clone(), crate::coeffs::RatFunc::one())],
        )
    };
    (0..system.num_cosets()).all(|m| {
        let mult = unit_of(m);
        mult.mul(z, system) == z.mul(&mult, system)
    })
}
