//! Support τ-tilting pairs `(M, P)` handled through their two-term complexes
//! `[P_1 ⊕ P → P_0]`, where `P_1 → P_0` is a minimal presentation of `M`.

use crate::error::{Error, Result};
use crate::oracle::algebra::FiniteDimAlgebra;
use crate::oracle::complex::{homotopy_vanishes, ConcreteTwoTerm};
use crate::oracle::module::RightModule;

#[derive(Clone, Debug)]
pub struct TauPair {
    /// Indecomposable summands of `M`.
    pub summands: Vec<RightModule>,
    /// Vertices `k` with `P_k` a summand of `P`.
    pub shifted: Vec<usize>,
}

impl TauPair {
    /// Support of `M`.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.summands.iter().flat_map(|m| m.support()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Minimal presentation of each summand of `M`, then one `P_k[1]` per
    /// shifted vertex.
    pub fn summand_complexes(&self, alg: &FiniteDimAlgebra) -> Vec<ConcreteTwoTerm> {
        let mut out: Vec<ConcreteTwoTerm> = self
            .summands
            .iter()
            .map(|m| m.minimal_presentation(alg))
            .collect();
        out.extend(
            self.shifted
                .iter()
                .map(|&k| ConcreteTwoTerm::shifted(vec![k])),
        );
        out
    }

    pub fn complex(&self, alg: &FiniteDimAlgebra) -> ConcreteTwoTerm {
        ConcreteTwoTerm::direct_sum(alg, &self.summand_complexes(alg))
    }

    /// Checks `|M| + |P| = n`, `Hom(P, M) = 0` and that the associated
    /// complex is presilting.
    pub fn validate(&self, alg: &FiniteDimAlgebra) -> Result<()> {
        let n = alg.vertices();
        if self.summands.len() + self.shifted.len() != n {
            return Err(Error::NotTauRigid(format!(
                "{} summands and {} shifted projectives for rank {n}",
                self.summands.len(),
                self.shifted.len()
            )));
        }
        if self.summands.iter().any(|m| m.is_zero()) {
            return Err(Error::NotTauRigid("zero summand".into()));
        }
        let support = self.support();
        if let Some(k) = self.shifted.iter().find(|k| support.contains(k)) {
            return Err(Error::NotTauRigid(format!("Hom(P_{k}, M) is nonzero")));
        }
        let x = self.complex(alg);
        if !homotopy_vanishes(alg, &x, &x) {
            return Err(Error::NotTauRigid(
                "associated complex is not presilting".into(),
            ));
        }
        Ok(())
    }
}

/// `(M, P) ≥ (M', P')`: `Hom(S(M,P), S(M',P')[1]) = 0` and
/// `supp M ⊇ supp M'`.
pub fn support_tau_tilting_order(alg: &FiniteDimAlgebra, a: &TauPair, b: &TauPair) -> Result<bool> {
    a.validate(alg)?;
    b.validate(alg)?;
    Ok(pair_geq(alg, a, b))
}

/// The order test without validation.
pub fn pair_geq(alg: &FiniteDimAlgebra, a: &TauPair, b: &TauPair) -> bool {
    let sa = a.support();
    b.support().iter().all(|k| sa.contains(k))
        && homotopy_vanishes(alg, &a.complex(alg), &b.complex(alg))
}
