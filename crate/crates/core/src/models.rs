//! Built-in presentations and the ideal model `I_w` over preprojective
//! algebras.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{unit, Echelon, Q};
use crate::oracle::algebra::FiniteDimAlgebra;
use crate::oracle::module::RightModule;
use crate::oracle::pair::TauPair;
use crate::oracle::quiver::QuiverPresentation;
use crate::weak_order::{all_reduced_words, Permutation};

fn up(k: usize) -> String {
    format!("a{k}")
}

fn down(k: usize) -> String {
    format!("b{k}")
}

fn loop_name(k: usize) -> String {
    format!("l{k}")
}

/// Double quiver of the line with `a_k: k → k+1` and `b_k: k+1 → k`.
fn double_line(n: usize) -> QuiverPresentation {
    let mut p = QuiverPresentation::new(n);
    for k in 1..n {
        p.arrow(&up(k), k, k + 1);
        p.arrow(&down(k), k + 1, k);
    }
    p
}

fn rel(p: &mut QuiverPresentation, terms: &[(i64, &[String])]) {
    let refs: Vec<Vec<&str>> = terms
        .iter()
        .map(|(_, ws)| ws.iter().map(String::as_str).collect())
        .collect();
    let borrowed: Vec<(i64, &[&str])> = terms
        .iter()
        .zip(&refs)
        .map(|((c, _), ws)| (*c, ws.as_slice()))
        .collect();
    p.relation(&borrowed).expect("arrow names exist");
}

/// Preprojective algebra of type `A_n`, one mesh relation per vertex:
/// `a_k b_k − b_{k−1} a_{k−1}` at vertex `k`.
pub fn preprojective(n: usize) -> QuiverPresentation {
    let mut p = double_line(n);
    for k in 1..=n {
        let mut terms = Vec::new();
        if k < n {
            terms.push((1, vec![up(k), down(k)]));
        }
        if k > 1 {
            terms.push((-1, vec![down(k - 1), up(k - 1)]));
        }
        if !terms.is_empty() {
            let t: Vec<(i64, &[String])> = terms.iter().map(|(c, w)| (*c, w.as_slice())).collect();
            rel(&mut p, &t);
        }
    }
    p
}

/// Double line with a loop `l_k` at each vertex (omitted when `m = 1`),
/// loops killing the neighbouring arrows, `l_k^m = 0` and all 2-cycles zero.
pub fn lambda_m(n: usize, m: usize) -> Result<QuiverPresentation> {
    if n == 0 || m == 0 {
        return Err(Error::Presentation(format!(
            "lambda needs n, m ≥ 1, got n={n}, m={m}"
        )));
    }
    let mut p = double_line(n);
    if m > 1 {
        for k in 1..=n {
            p.arrow(&loop_name(k), k, k);
        }
    }
    for k in 1..n {
        rel(&mut p, &[(1, &[up(k), down(k)])]);
        rel(&mut p, &[(1, &[down(k), up(k)])]);
        if m > 1 {
            rel(&mut p, &[(1, &[loop_name(k), up(k)])]);
            rel(&mut p, &[(1, &[loop_name(k + 1), down(k)])]);
            rel(&mut p, &[(1, &[up(k), loop_name(k + 1)])]);
            rel(&mut p, &[(1, &[down(k), loop_name(k)])]);
        }
    }
    if m > 1 {
        for k in 1..=n {
            rel(&mut p, &[(1, &vec![loop_name(k); m])]);
        }
    }
    Ok(p)
}

/// The two-vertex algebra with loops `l1, l1p` at 1 and `l2, l2p` at 2.
pub fn gamma() -> QuiverPresentation {
    let text = "\
vertices 2
arrow a 1 2
arrow b 2 1
arrow l1 1 1
arrow l1p 1 1
arrow l2 2 2
arrow l2p 2 2
relation 1 a b a b
relation 1 b a b a
relation 1 l1 a + -1 a l2 + -1 a l2p
relation 1 l1p a + -1 a l2p
relation 1 l2 b + -1 b l1p
relation 1 l2p b + -1 b l1
relation 1 l1 l1
relation 1 l1p l1p
relation 1 l1 l1p
relation 1 l1p l1
relation 1 l2 l2
relation 1 l2p l2p
relation 1 l2 l2p
relation 1 l2p l2
";
    QuiverPresentation::parse(text).expect("built-in presentation parses")
}

/// Path algebra of `1 → 2 → ⋯ → n`.
pub fn oriented_line(n: usize) -> QuiverPresentation {
    let mut p = QuiverPresentation::new(n);
    for k in 1..n {
        p.arrow(&up(k), k, k + 1);
    }
    p
}

/// Double line with every path of length two set to zero.
pub fn radical_square_zero_line(n: usize) -> QuiverPresentation {
    let mut p = double_line(n);
    let arrows = p.arrows.clone();
    for a in &arrows {
        for b in &arrows {
            if a.target == b.source {
                rel(&mut p, &[(1, &[a.name.clone(), b.name.clone()])]);
            }
        }
    }
    p
}

/// Resolves `preprojective:n`, `lambda:n:m` and `gamma`.
pub fn builtin(selector: &str) -> Result<QuiverPresentation> {
    let parts: Vec<&str> = selector.split(':').collect();
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Presentation(format!("bad number {s:?} in selector {selector:?}")))
    };
    match parts.as_slice() {
        ["preprojective", n] => {
            let n = num(n)?;
            if n == 0 {
                return Err(Error::InvalidRank(0));
            }
            Ok(preprojective(n))
        }
        ["lambda", n, m] => lambda_m(num(n)?, num(m)?),
        ["gamma"] => Ok(gamma()),
        _ => Err(Error::Presentation(format!(
            "unknown algebra selector {selector:?}"
        ))),
    }
}

/// A two-sided ideal stored as a subspace of the algebra.
#[derive(Clone, Debug)]
pub struct TwoSidedIdeal {
    span: Echelon,
}

impl TwoSidedIdeal {
    pub fn whole(alg: &FiniteDimAlgebra) -> Self {
        TwoSidedIdeal {
            span: Echelon::from_rows(alg.dim(), (0..alg.dim()).map(|b| unit(alg.dim(), b))),
        }
    }

    /// `Λ G Λ`.
    pub fn generated(alg: &FiniteDimAlgebra, gens: &[Vec<Q>]) -> Self {
        let mut span = Echelon::new(alg.dim());
        for g in gens {
            for x in 0..alg.dim() {
                let xg = alg.mul(&unit(alg.dim(), x), g);
                for y in 0..alg.dim() {
                    span.insert(alg.mul(&xg, &unit(alg.dim(), y)));
                }
            }
        }
        TwoSidedIdeal { span }
    }

    /// `Λ (1 − e_i) Λ`.
    pub fn vertex_ideal(alg: &FiniteDimAlgebra, i: usize) -> Self {
        let gens: Vec<Vec<Q>> = (1..=alg.vertices())
            .filter(|&k| k != i)
            .map(|k| alg.idempotent(k))
            .collect();
        TwoSidedIdeal::generated(alg, &gens)
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        self.span.rows()
    }

    pub fn same_as(&self, other: &TwoSidedIdeal) -> bool {
        self.span.same_span(&other.span)
    }

    pub fn contains(&self, other: &TwoSidedIdeal) -> bool {
        self.span.contains_all(&other.span)
    }

    /// Closed under multiplication by basis elements on both sides.
    pub fn is_closed(&self, alg: &FiniteDimAlgebra) -> bool {
        self.span.rows().iter().all(|r| {
            (0..alg.dim()).all(|b| {
                let u = unit(alg.dim(), b);
                self.span.contains(&alg.mul(&u, r)) && self.span.contains(&alg.mul(r, &u))
            })
        })
    }
}

pub fn ideal_product(
    alg: &FiniteDimAlgebra,
    j: &TwoSidedIdeal,
    k: &TwoSidedIdeal,
) -> TwoSidedIdeal {
    let mut span = Echelon::new(alg.dim());
    for x in j.rows() {
        for y in k.rows() {
            span.insert(alg.mul(x, y));
        }
    }
    TwoSidedIdeal { span }
}

/// `I_{i_l} ⋯ I_{i_1}` for a word listed leftmost first; the empty word gives `Λ`.
pub fn ideal_of_word(
    alg: &FiniteDimAlgebra,
    word: &[usize],
    cache: &BTreeMap<usize, TwoSidedIdeal>,
) -> TwoSidedIdeal {
    word.iter().fold(TwoSidedIdeal::whole(alg), |acc, &i| {
        ideal_product(alg, &acc, &cache[&i])
    })
}

pub struct IdealModel {
    pub ideals: Vec<(Permutation, TwoSidedIdeal)>,
    /// Whether every reduced word of every element gave the same ideal.
    pub word_independent: bool,
}

/// `I_w` for every `w ∈ S_{n+1}`, checking all reduced words.
pub fn ideal_model(alg: &FiniteDimAlgebra) -> IdealModel {
    let n = alg.vertices();
    let cache: BTreeMap<usize, TwoSidedIdeal> = (1..=n)
        .map(|i| (i, TwoSidedIdeal::vertex_ideal(alg, i)))
        .collect();
    let mut word_independent = true;
    let mut ideals = Vec::new();
    for w in Permutation::all(n + 1) {
        let canonical = ideal_of_word(alg, &w.reduced_word().letters, &cache);
        for word in all_reduced_words(&w) {
            if !ideal_of_word(alg, &word, &cache).same_as(&canonical) {
                word_independent = false;
            }
        }
        ideals.push((w, canonical));
    }
    IdealModel {
        ideals,
        word_independent,
    }
}

/// The pair `(I, P)` with `I = ⊕ e_i I` and `P` the projectives outside the
/// support of `I`.
pub fn ideal_pair(alg: &FiniteDimAlgebra, ideal: &TwoSidedIdeal) -> TauPair {
    let mut summands = Vec::new();
    for i in 1..=alg.vertices() {
        let gens: Vec<Vec<Q>> = ideal
            .rows()
            .iter()
            .map(|r| alg.project_start(i, r))
            .collect();
        let m = RightModule::subquotient(alg, &gens, &[]);
        if !m.is_zero() {
            summands.push(m);
        }
    }
    let mut pair = TauPair {
        summands,
        shifted: Vec::new(),
    };
    let support = pair.support();
    pair.shifted = (1..=alg.vertices())
        .filter(|k| !support.contains(k))
        .collect();
    pair
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        assert_eq!(builtin("preprojective:3").unwrap().vertices, 3);
        assert_eq!(builtin("lambda:2:2").unwrap().arrows.len(), 4);
        assert_eq!(builtin("gamma").unwrap().arrows.len(), 6);
        assert!(builtin("preprojective:0").is_err());
        assert!(builtin("lambda:2").is_err());
        assert!(builtin("nonsense").is_err());
    }

    #[test]
    fn preprojective_relations_per_vertex() {
        let p2 = preprojective(2);
        assert_eq!(p2.relations.len(), 2);
        assert!(p2.relations.iter().all(|r| r.terms.len() == 1));
        let p3 = preprojective(3);
        assert_eq!(p3.relations.len(), 3);
        assert_eq!(p3.relations[1].terms.len(), 2);
        let p1 = preprojective(1);
        assert!(p1.arrows.is_empty() && p1.relations.is_empty());
    }
}
