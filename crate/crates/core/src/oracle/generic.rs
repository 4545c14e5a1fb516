//! Support τ-tilting enumeration for an arbitrary built algebra.
//!
//! Indecomposable two-term presilting complexes are determined by their
//! g-vectors, and a generic differential realizes the rigid one when it
//! exists. For every g-vector in a box `[-b, b]^n` we sample random integer
//! differentials, keep the presilting indecomposable ones, and take maximal
//! compatible sets of size `n`. The result is certified complete when every
//! almost complete set has exactly two completions, which makes the found
//! component closed under mutation.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clique::maximal_cliques;
use crate::error::{Error, Result};
use crate::linalg::{zeros, Q};
use crate::oracle::algebra::FiniteDimAlgebra;
use crate::oracle::complex::{
    homotopy_vanishes, is_local_endomorphism, is_presilting, ConcreteTwoTerm,
};
use crate::par::Exec;
use crate::poset::FinitePoset;

#[derive(Clone, Debug)]
pub struct GenericSttilt {
    /// Indecomposable presilting complexes with their g-vectors.
    pub rigid: Vec<(Vec<i64>, ConcreteTwoTerm)>,
    /// Silting sets as sorted indices into `rigid`.
    pub sets: Vec<Vec<usize>>,
    pub poset: FinitePoset,
    /// Largest `|g_k|` searched.
    pub bound: i64,
    pub certified: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct GenericOptions {
    pub seed: u64,
    pub max_bound: i64,
    pub samples: usize,
    pub exec: Exec,
}

impl Default for GenericOptions {
    fn default() -> Self {
        GenericOptions {
            seed: 0x5eed,
            max_bound: 3,
            samples: 3,
            exec: Exec::default(),
        }
    }
}

fn boxed_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x != 0));
    out
}

fn random_complex(alg: &FiniteDimAlgebra, g: &[i64], rng: &mut ChaCha8Rng) -> ConcreteTwoTerm {
    let mut minus = Vec::new();
    let mut zero = Vec::new();
    for (k, &x) in g.iter().enumerate() {
        for _ in 0..x.unsigned_abs() {
            if x < 0 {
                minus.push(k + 1);
            } else {
                zero.push(k + 1);
            }
        }
    }
    let diff = zero
        .iter()
        .map(|&r| {
            minus
                .iter()
                .map(|&c| {
                    let mut e = zeros(alg.dim());
                    for b in alg.corner(r, c) {
                        e[b] = Q::from_integer(BigInt::from(rng.random_range(-4i64..=4)));
                    }
                    e
                })
                .collect()
        })
        .collect();
    ConcreteTwoTerm::new(minus, zero, diff)
}

fn search(
    alg: &FiniteDimAlgebra,
    bound: i64,
    opts: &GenericOptions,
) -> Vec<(Vec<i64>, ConcreteTwoTerm)> {
    let n = alg.vertices();
    let candidates = boxed_vectors(n, bound);
    let found = opts.exec.map(candidates.len(), |idx| {
        let g = &candidates[idx];
        let mut rng =
            ChaCha8Rng::seed_from_u64(opts.seed ^ (idx as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let trivial = g.iter().all(|&x| x >= 0) || g.iter().all(|&x| x <= 0);
        let tries = if trivial { 1 } else { opts.samples };
        for _ in 0..tries {
            let x = random_complex(alg, g, &mut rng);
            if is_presilting(alg, &x) {
                return is_local_endomorphism(alg, &x).then_some(x);
            }
        }
        None
    });
    candidates
        .into_iter()
        .zip(found)
        .filter_map(|(g, x)| x.map(|x| (g, x)))
        .collect()
}

/// Number of silting sets containing each almost complete set is two.
fn mutation_closed(sets: &[Vec<usize>]) -> bool {
    let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
    for s in sets {
        for skip in 0..s.len() {
            let mut face = s.clone();
            face.remove(skip);
            *counts.entry(face).or_default() += 1;
        }
    }
    counts.values().all(|&c| c == 2)
}

pub fn enumerate_generic(alg: &FiniteDimAlgebra, opts: GenericOptions) -> Result<GenericSttilt> {
    let n = alg.vertices();
    for bound in 1..=opts.max_bound {
        let rigid = search(alg, bound, &opts);
        let m = rigid.len();
        let hv = opts
            .exec
            .matrix(m, |a, b| homotopy_vanishes(alg, &rigid[a].1, &rigid[b].1));
        let adj: Vec<Vec<bool>> = (0..m)
            .map(|a| (0..m).map(|b| a != b && hv[a][b] && hv[b][a]).collect())
            .collect();
        let sets: Vec<Vec<usize>> = maximal_cliques(&adj)
            .into_iter()
            .filter(|c| c.len() == n)
            .collect();
        let certified = !sets.is_empty() && mutation_closed(&sets);
        if certified || bound == opts.max_bound {
            // T ≤ T' iff Hom(T', T[1]) = 0
            let leq = (0..sets.len())
                .map(|a| {
                    (0..sets.len())
                        .map(|b| sets[b].iter().all(|&x| sets[a].iter().all(|&y| hv[x][y])))
                        .collect()
                })
                .collect();
            let poset = FinitePoset::from_matrix(leq)?;
            return Ok(GenericSttilt {
                rigid,
                sets,
                poset,
                bound,
                certified,
            });
        }
    }
    Err(Error::Inconsistent("empty search box".into()))
}
