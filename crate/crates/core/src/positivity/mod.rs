//! Constructive positivity of Kronecker coefficients.
//!
//! A [`Certificate`] is a tree whose leaves are justified positive triples and
//! whose internal nodes combine them with rules that preserve positivity. The
//! builders assemble certificates for hooks, near-hooks, stretched hooks and
//! arbitrary `ν(ab)` on large rectangles; [`Certificate::verify`] replays the
//! arithmetic of every node.

pub mod axioms;
pub mod builders;
pub mod certificate;
pub mod decompose;
pub mod saturation;
pub mod serialize;

pub use axioms::{audit, AuditOutcome, Axiom};
pub use builders::{
    columns_rule_cert, even_rows_cert, extension_step, grow, hook_cert, main_cert, main_cert_with_bound, near_hook_cert,
    rect_block_cert, stretched_hook_cert, MainBound,
};
pub use certificate::{Certificate, ClosedForm, Node, Swap, TransposePair};
pub use decompose::{decompose, Decomposition};
pub use saturation::{saturation_witness, SaturationWitness};
pub use serialize::{from_json, to_json, CERT_SCHEMA};

use crate::partition::Partition;

/// The six partitions `ρ` with vanishing limit `a_ρ`.
pub const EXCEPTIONAL: [&[u64]; 6] = [&[1], &[1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1, 1, 1], &[2, 1], &[3, 1]];

/// Membership in the exceptional set `{(1), (1,1), (1^4), (1^6), (2,1), (3,1)}`.
pub fn x_membership(rho: &Partition) -> bool {
    EXCEPTIONAL.iter().any(|x| rho.parts() == *x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let p = |v: &[u64]| Partition::new(v.to_vec()).unwrap();
        assert!(x_membership(&p(&[2, 1])));
        assert!(x_membership(&p(&[3, 1])));
        assert!(x_membership(&p(&[1, 1, 1, 1, 1, 1])));
        assert!(!x_membership(&p(&[2, 2])));
        assert!(!x_membership(&p(&[1, 1, 1])));
        assert!(!x_membership(&Partition::empty()));
    }
}
