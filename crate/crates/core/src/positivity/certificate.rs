//! Certificate trees witnessing `g(λ, μ, ν) > 0`.
//!
//! Leaves are justified by the character oracle, a closed form, or a registered
//! axiom; internal nodes apply the semigroup property (rowwise sums), the
//! transposition property (conjugate two of the three partitions), or the
//! symmetry of `g` in its three arguments. Every node stores its triple.

use std::fmt;
use std::sync::Arc;

use crate::coefficients::{kronecker, Budget};
use crate::error::{Error, Result};
use crate::hooks::{hook_kron, two_column};
use crate::partition::{KroneckerTriple, Partition};

use super::axioms::Axiom;

/// Which two partitions of the triple are conjugated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransposePair {
    MuNu,
    LamMu,
    LamNu,
}

/// Which two partitions of the triple are exchanged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Swap {
    S12,
    S13,
    S23,
}

/// Leaves justified by a proved closed form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// `((nd−k, 1^k), d×n, d×n)`, positive iff the hook coefficient is.
    Hook { d: u64, n: u64, k: u64 },
    /// `((2^k, 1^{nd−2k}), n×d, n×d)` with `n != d`.
    TwoColumn { n: u64, d: u64, k: u64 },
}

impl ClosedForm {
    pub fn triple(&self) -> Result<KroneckerTriple> {
        match *self {
            ClosedForm::Hook { d, n, k } => {
                if d == 0 || n == 0 || k >= d * n {
                    return Err(Error::Malformed(format!("hook closed form with d={d}, n={n}, k={k}")));
                }
                let r = Partition::rectangle(d, n);
                Ok(KroneckerTriple { lam: Partition::hook(d * n - k, k)?, mu: r.clone(), nu: r })
            }
            ClosedForm::TwoColumn { n, d, k } => {
                if n == 0 || d == 0 || 2 * k > n * d {
                    return Err(Error::Malformed(format!("two-column closed form with n={n}, d={d}, k={k}")));
                }
                let mut parts = vec![2; k as usize];
                parts.extend(std::iter::repeat_n(1, (n * d - 2 * k) as usize));
                let r = Partition::rectangle(n, d);
                Ok(KroneckerTriple { lam: Partition::new(parts)?, mu: r.clone(), nu: r })
            }
        }
    }

    /// The value of the closed form (a positive leaf needs it nonzero).
    pub fn value(&self) -> Result<u64> {
        match *self {
            ClosedForm::Hook { d, n, k } => Ok(u64::try_from(hook_kron(d, n, k)?).unwrap_or(u64::MAX)),
            ClosedForm::TwoColumn { n, d, k } => two_column(n, d, k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Oracle,
    Axiom(Axiom),
    ClosedForm(ClosedForm),
    Add(Arc<Certificate>, Arc<Certificate>),
    Transpose(Arc<Certificate>, TransposePair),
    Permute(Arc<Certificate>, Swap),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub triple: KroneckerTriple,
    pub node: Node,
}

pub(crate) fn transpose_triple(t: &KroneckerTriple, pair: TransposePair) -> KroneckerTriple {
    let KroneckerTriple { lam, mu, nu } = t.clone();
    match pair {
        TransposePair::MuNu => KroneckerTriple { lam, mu: mu.transpose(), nu: nu.transpose() },
        TransposePair::LamMu => KroneckerTriple { lam: lam.transpose(), mu: mu.transpose(), nu },
        TransposePair::LamNu => KroneckerTriple { lam: lam.transpose(), mu, nu: nu.transpose() },
    }
}

pub(crate) fn permute_triple(t: &KroneckerTriple, swap: Swap) -> KroneckerTriple {
    let KroneckerTriple { lam, mu, nu } = t.clone();
    match swap {
        Swap::S12 => KroneckerTriple { lam: mu, mu: lam, nu },
        Swap::S13 => KroneckerTriple { lam: nu, mu, nu: lam },
        Swap::S23 => KroneckerTriple { lam, mu: nu, nu: mu },
    }
}

impl Certificate {
    /// A leaf to be re-checked by the character oracle.
    pub fn oracle(triple: KroneckerTriple) -> Result<Self> {
        triple.check_sizes()?;
        Ok(Certificate { triple, node: Node::Oracle })
    }

    pub fn axiom(axiom: Axiom) -> Result<Self> {
        let triple = axiom.triple()?;
        Ok(Certificate { triple, node: Node::Axiom(axiom) })
    }

    pub fn closed_form(form: ClosedForm) -> Result<Self> {
        let triple = form.triple()?;
        if form.value()? == 0 {
            return Err(Error::precondition(format!("closed form {form:?} vanishes")));
        }
        Ok(Certificate { triple, node: Node::ClosedForm(form) })
    }

    /// `((d·n), d×n, d×n)`, the row triple.
    pub fn row(d: u64, n: u64) -> Result<Self> {
        Self::closed_form(ClosedForm::Hook { d, n, k: 0 })
    }

    pub fn add(left: impl Into<Arc<Certificate>>, right: impl Into<Arc<Certificate>>) -> Self {
        let (l, r): (Arc<Certificate>, Arc<Certificate>) = (left.into(), right.into());
        Certificate { triple: l.triple.add(&r.triple), node: Node::Add(l, r) }
    }

    pub fn transpose(child: impl Into<Arc<Certificate>>, pair: TransposePair) -> Self {
        let c: Arc<Certificate> = child.into();
        Certificate { triple: transpose_triple(&c.triple, pair), node: Node::Transpose(c, pair) }
    }

    pub fn permute(child: impl Into<Arc<Certificate>>, swap: Swap) -> Self {
        let c: Arc<Certificate> = child.into();
        Certificate { triple: permute_triple(&c.triple, swap), node: Node::Permute(c, swap) }
    }

    /// Balanced sum of several certificates. Panics on an empty list.
    pub fn sum(mut parts: Vec<Arc<Certificate>>) -> Arc<Certificate> {
        assert!(!parts.is_empty(), "sum of no certificates");
        while parts.len() > 1 {
            let mut next = Vec::with_capacity(parts.len().div_ceil(2));
            let mut it = parts.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(Arc::new(Certificate::add(a, b))),
                    None => next.push(a),
                }
            }
            parts = next;
        }
        parts.pop().expect("one left")
    }

    /// `n` copies of the same certificate added up (shared subtrees).
    pub fn repeat(cert: Arc<Certificate>, n: u64) -> Arc<Certificate> {
        assert!(n >= 1, "repeat needs at least one copy");
        if n == 1 {
            return cert;
        }
        let half = Self::repeat(cert.clone(), n / 2);
        let double = Arc::new(Certificate::add(half.clone(), half));
        if n % 2 == 1 {
            Arc::new(Certificate::add(double, cert))
        } else {
            double
        }
    }

    pub fn children(&self) -> Vec<&Arc<Certificate>> {
        match &self.node {
            Node::Add(a, b) => vec![a, b],
            Node::Transpose(c, _) | Node::Permute(c, _) => vec![c],
            _ => vec![],
        }
    }

    /// Number of nodes, counting shared subtrees once per use.
    pub fn node_count(&self) -> u64 {
        1 + self.children().iter().map(|c| c.node_count()).sum::<u64>()
    }

    pub fn depth(&self) -> u64 {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    /// Counts of leaves by tier: (oracle, closed-form, axiom).
    pub fn leaf_tiers(&self) -> (u64, u64, u64) {
        match &self.node {
            Node::Oracle => (1, 0, 0),
            Node::ClosedForm(_) => (0, 1, 0),
            Node::Axiom(_) => (0, 0, 1),
            _ => self.children().iter().map(|c| c.leaf_tiers()).fold((0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2)),
        }
    }

    /// Recomputes every node's triple bottom-up, checks it against the stored
    /// one, and checks every leaf's justification. Returns the root triple.
    pub fn verify(&self, budget: &Budget) -> Result<KroneckerTriple> {
        let computed = match &self.node {
            Node::Oracle => {
                self.triple.check_sizes()?;
                let t = &self.triple;
                let g = kronecker(&t.lam, &t.mu, &t.nu, budget)?;
                if !g.is_positive() {
                    return Err(Error::Verification(format!("oracle leaf {t} has g = 0")));
                }
                t.clone()
            }
            Node::Axiom(ax) => {
                ax.check()?;
                ax.triple()?
            }
            Node::ClosedForm(f) => {
                let t = f.triple()?;
                if f.value()? == 0 {
                    return Err(Error::Verification(format!("closed form {f:?} vanishes")));
                }
                t
            }
            Node::Add(a, b) => {
                let (ta, tb) = rayon::join(|| a.verify(budget), || b.verify(budget));
                ta?.add(&tb?)
            }
            Node::Transpose(c, pair) => transpose_triple(&c.verify(budget)?, *pair),
            Node::Permute(c, swap) => permute_triple(&c.verify(budget)?, *swap),
        };
        computed
            .check_sizes()
            .map_err(|e| Error::Verification(format!("node sizes: {e}")))?;
        if computed != self.triple {
            return Err(Error::Verification(format!(
                "{} node stores {} but its justification gives {}",
                self.kind_name(),
                self.triple,
                computed
            )));
        }
        Ok(computed)
    }

    pub fn kind_name(&self) -> &'static str {
        match self.node {
            Node::Oracle => "oracle",
            Node::Axiom(_) => "axiom",
            Node::ClosedForm(_) => "closed-form",
            Node::Add(..) => "add",
            Node::Transpose(..) => "transpose",
            Node::Permute(..) => "permute",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (o, c, a) = self.leaf_tiers();
        write!(
            f,
            "certificate for g{} > 0: {} nodes, depth {}, leaves oracle/closed-form/axiom = {o}/{c}/{a}",
            self.triple,
            self.node_count(),
            self.depth()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn oracle_leaf() {
        let t = KroneckerTriple::new(p(&[3]), p(&[2, 1]), p(&[2, 1])).unwrap();
        let c = Certificate::oracle(t.clone()).unwrap();
        assert_eq!(c.verify(&Budget::default()).unwrap(), t);
        let zero = KroneckerTriple::new(p(&[3]), p(&[2, 1]), p(&[3])).unwrap();
        assert!(Certificate::oracle(zero).unwrap().verify(&Budget::default()).is_err());
    }

    #[test]
    fn squares_add_and_transpose() {
        let sq = Arc::new(Certificate::axiom(Axiom::Square { k: 2 }).unwrap());
        let sum = Certificate::add(sq.clone(), sq.clone());
        let t = sum.verify(&Budget::default()).unwrap();
        assert_eq!(t.lam, p(&[4, 4]));
        assert_eq!(t.mu, p(&[4, 4]));
        let tr = Certificate::transpose(sq, TransposePair::MuNu);
        assert_eq!(tr.verify(&Budget::default()).unwrap().mu, p(&[2, 2]));
    }

    #[test]
    fn tampering_detected() {
        let sq = Arc::new(Certificate::axiom(Axiom::Square { k: 2 }).unwrap());
        let mut sum = Certificate::add(sq.clone(), sq);
        sum.triple.lam = p(&[5, 3]);
        assert!(matches!(sum.verify(&Budget::default()), Err(Error::Verification(_))));
    }

    #[test]
    fn closed_forms() {
        let h = Certificate::closed_form(ClosedForm::Hook { d: 3, n: 5, k: 8 }).unwrap();
        assert_eq!(h.triple.lam, p(&[7, 1, 1, 1, 1, 1, 1, 1, 1]));
        assert!(Certificate::closed_form(ClosedForm::Hook { d: 3, n: 5, k: 7 }).is_err());
        let c = Certificate::closed_form(ClosedForm::TwoColumn { n: 2, d: 4, k: 4 }).unwrap();
        assert_eq!(c.triple.lam, p(&[2, 2, 2, 2]));
        c.verify(&Budget::default()).unwrap();
    }

    #[test]
    fn repeat_and_sum() {
        let sq = Arc::new(Certificate::axiom(Axiom::Square { k: 1 }).unwrap());
        let r = Certificate::repeat(sq.clone(), 5);
        assert_eq!(r.triple.lam, p(&[5]));
        let s = Certificate::sum(vec![sq.clone(), sq.clone(), sq]);
        assert_eq!(s.triple.mu, p(&[3]));
    }
}
