//! The poset of basic two-term silting sets built from Ξ-compatibility, its
//! mutation graph, and the explicit isomorphism with the weak order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::clique::maximal_cliques;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::poset::FinitePoset;
use crate::weak_order::{Permutation, WeakOrderLattice};
use crate::xi::{enumerate_xi, hom_vanishes_with, CriterionOptions, XiIndex};

/// Largest rank enumerated unless the caller raises the budget.
pub const DEFAULT_RANK_BUDGET: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SiltingSet {
    members: Vec<XiIndex>,
}

impl SiltingSet {
    /// Members are sorted; no compatibility check is made here.
    pub fn from_members(mut members: Vec<XiIndex>) -> Self {
        members.sort();
        SiltingSet { members }
    }

    pub fn members(&self) -> &[XiIndex] {
        &self.members
    }

    pub fn rank(&self) -> usize {
        self.members.first().map_or(0, |x| x.rank())
    }

    /// All shifted projectives `{k}`.
    pub fn minimum(n: usize) -> Self {
        SiltingSet::from_members(
            (1..=n)
                .map(|k| XiIndex::new(n, vec![k]).expect("valid"))
                .collect(),
        )
    }

    /// All projectives `{0, k, n+1}`.
    pub fn maximum(n: usize) -> Self {
        SiltingSet::from_members(
            (1..=n)
                .map(|k| XiIndex::new(n, vec![0, k, n + 1]).expect("valid"))
                .collect(),
        )
    }

    /// `{i−1, i, i+1}` together with every `{k}`, `k ≠ i`.
    pub fn atom(n: usize, i: usize) -> Self {
        let mut members: Vec<XiIndex> = (1..=n)
            .filter(|&k| k != i)
            .map(|k| XiIndex::new(n, vec![k]).expect("valid"))
            .collect();
        members.push(XiIndex::new(n, vec![i - 1, i, i + 1]).expect("valid"));
        SiltingSet::from_members(members)
    }
}

impl fmt::Display for SiltingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Module summands, shifted projectives and support of the pair a silting
/// set stands for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReadout {
    pub modules: Vec<XiIndex>,
    pub shifted_projectives: Vec<usize>,
    pub support: Vec<usize>,
}

pub fn pair_readout(t: &SiltingSet) -> PairReadout {
    let n = t.rank();
    let mut modules = Vec::new();
    let mut shifted = Vec::new();
    for x in t.members() {
        if x.entries().len() == 1 {
            shifted.push(x.entries()[0]);
        } else {
            modules.push(x.clone());
        }
    }
    let support = (1..=n).filter(|k| !shifted.contains(k)).collect();
    PairReadout {
        modules,
        shifted_projectives: shifted,
        support,
    }
}

/// `Hom(a, b[1]) = 0` for all Ξ pairs, as a lookup table.
#[derive(Clone, Debug)]
pub struct VanishingTable {
    pub xi: Vec<XiIndex>,
    index: HashMap<XiIndex, usize>,
    table: Vec<Vec<bool>>,
}

impl VanishingTable {
    pub fn new(n: usize, opts: CriterionOptions, exec: Exec) -> Result<Self> {
        let xi = enumerate_xi(n)?;
        let flat = exec.try_map(xi.len() * xi.len(), |k| {
            hom_vanishes_with(&xi[k / xi.len()], &xi[k % xi.len()], opts)
        })?;
        let table = flat.chunks(xi.len()).map(|c| c.to_vec()).collect();
        let index = xi
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        Ok(VanishingTable { xi, index, table })
    }

    pub fn vanishes(&self, a: &XiIndex, b: &XiIndex) -> bool {
        self.table[self.index[a]][self.index[b]]
    }

    pub fn compatible(&self, a: &XiIndex, b: &XiIndex) -> bool {
        self.vanishes(a, b) && self.vanishes(b, a)
    }

    /// `Hom(T, T'[1]) = 0`.
    pub fn silting_geq(&self, t: &SiltingSet, u: &SiltingSet) -> bool {
        t.members()
            .iter()
            .all(|a| u.members().iter().all(|b| self.vanishes(a, b)))
    }
}

/// All maximal compatible subsets of Ξ; each must have exactly `n` members.
pub fn enumerate_silting(table: &VanishingTable, n: usize) -> Result<Vec<SiltingSet>> {
    let m = table.xi.len();
    let adj: Vec<Vec<bool>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| a != b && table.compatible(&table.xi[a], &table.xi[b]))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for clique in maximal_cliques(&adj) {
        if clique.len() != n {
            return Err(Error::Inconsistent(format!(
                "maximal compatible set of size {} in rank {n}",
                clique.len()
            )));
        }
        out.push(SiltingSet::from_members(
            clique.into_iter().map(|k| table.xi[k].clone()).collect(),
        ));
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SttiltPoset {
    pub rank: usize,
    pub nodes: Vec<SiltingSet>,
    /// `leq(a, b)` iff `nodes[b] ≥ nodes[a]` in the silting order.
    pub order: FinitePoset,
    /// Oriented mutation pairs `(larger, smaller)`.
    pub mutation_edges: Vec<(usize, usize)>,
    pub table: VanishingTable,
}

impl SttiltPoset {
    pub fn build(n: usize, opts: CriterionOptions, exec: Exec) -> Result<Self> {
        Self::build_with_budget(n, opts, exec, DEFAULT_RANK_BUDGET)
    }

    pub fn build_with_budget(
        n: usize,
        opts: CriterionOptions,
        exec: Exec,
        budget: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        if n > budget {
            return Err(Error::BudgetExceeded {
                what: "silting rank",
                requested: n,
                limit: budget,
            });
        }
        let table = VanishingTable::new(n, opts, exec)?;
        let nodes = enumerate_silting(&table, n)?;
        let leq = exec.matrix(nodes.len(), |a, b| table.silting_geq(&nodes[b], &nodes[a]));
        let order = FinitePoset::from_matrix(leq)?;
        let mutation_edges = mutation_edges(&table, &nodes)?;
        Ok(SttiltPoset {
            rank: n,
            nodes,
            order,
            mutation_edges,
            table,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, t: &SiltingSet) -> Option<usize> {
        self.nodes.binary_search(t).ok()
    }

    pub fn minimum(&self) -> Option<usize> {
        self.index_of(&SiltingSet::minimum(self.rank))
    }

    pub fn maximum(&self) -> Option<usize> {
        self.index_of(&SiltingSet::maximum(self.rank))
    }

    pub fn geq(&self, a: usize, b: usize) -> bool {
        self.order.leq(b, a)
    }

    /// The mutation graph equals the Hasse diagram of the order.
    pub fn mutation_matches_hasse(&self) -> bool {
        let hasse: BTreeSet<(usize, usize)> = self
            .order
            .hasse_edges()
            .into_iter()
            .map(|(a, b)| (b, a))
            .collect();
        let mutation: BTreeSet<(usize, usize)> = self.mutation_edges.iter().copied().collect();
        hasse == mutation
    }
}

/// Pairs of sets sharing all but one member, oriented from larger to smaller.
pub fn mutation_edges(table: &VanishingTable, nodes: &[SiltingSet]) -> Result<Vec<(usize, usize)>> {
    let mut by_face: HashMap<Vec<XiIndex>, Vec<usize>> = HashMap::new();
    for (idx, t) in nodes.iter().enumerate() {
        for skip in 0..t.members().len() {
            let mut face = t.members().to_vec();
            face.remove(skip);
            by_face.entry(face).or_default().push(idx);
        }
    }
    let mut edges = Vec::new();
    for (face, ends) in by_face {
        let [a, b] = ends[..] else {
            return Err(Error::Inconsistent(format!(
                "almost complete set with {} completions (face of size {})",
                ends.len(),
                face.len()
            )));
        };
        if table.silting_geq(&nodes[a], &nodes[b]) {
            edges.push((a, b));
        } else if table.silting_geq(&nodes[b], &nodes[a]) {
            edges.push((b, a));
        } else {
            return Err(Error::Inconsistent(format!(
                "mutation pair {} / {} is incomparable",
                nodes[a], nodes[b]
            )));
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

/// `ρ: S_{n+1} → sttilt`, indexed like `lattice.nodes()`.
#[derive(Clone, Debug)]
pub struct WeakOrderIsomorphism {
    pub image: Vec<usize>,
}

/// Extends `ρ(1) = min`, `ρ(s_i) = atom(i)` by length, using both the
/// cover rule and the join rule, and checks that every choice of left
/// descent gives the same image.
pub fn build_isomorphism(
    poset: &SttiltPoset,
    lattice: &WeakOrderLattice,
) -> Result<WeakOrderIsomorphism> {
    let n = poset.rank;
    if lattice.rank() != n {
        return Err(Error::RankMismatch {
            left: lattice.rank(),
            right: n,
        });
    }
    let inconsistent = |msg: String| Error::Inconsistent(msg);
    let mut rho: HashMap<Permutation, usize> = HashMap::new();
    let id = Permutation::identity(n + 1);
    rho.insert(
        id.clone(),
        poset
            .minimum()
            .ok_or_else(|| inconsistent("no minimum".into()))?,
    );
    for i in 1..=n {
        let atom = poset
            .index_of(&SiltingSet::atom(n, i))
            .ok_or_else(|| inconsistent(format!("atom {i} is not a silting set")))?;
        rho.insert(Permutation::generator(n + 1, i)?, atom);
    }
    let order = &poset.order;
    for v in lattice.nodes() {
        if v.length() < 2 {
            continue;
        }
        let mut found: Option<usize> = None;
        for j in (1..=n).filter(|&j| v.has_left_descent(j)) {
            let (w, _) = v.left_multiply(j)?;
            let ell = w.length();
            let il = w.reduced_word().letters[0];
            let u = w.left_multiply(il)?.0;
            let wp = u.left_multiply(j)?.0;
            let candidate = if wp.length() == ell {
                let top = order
                    .join(rho[&w], rho[&wp])
                    .ok_or_else(|| inconsistent(format!("no join of images of {w} and {wp}")))?;
                let covers: Vec<usize> = order
                    .upper_covers(rho[&w])
                    .iter()
                    .copied()
                    .filter(|&c| order.leq(c, top))
                    .collect();
                match covers[..] {
                    [c] => c,
                    _ => {
                        return Err(inconsistent(format!(
                            "{} upper covers of the image of {w} below the join",
                            covers.len()
                        )))
                    }
                }
            } else {
                let a = wp.left_multiply(il)?.0;
                let b = wp.left_multiply(j)?.0;
                order
                    .join(rho[&a], rho[&b])
                    .ok_or_else(|| inconsistent(format!("no join of images of {a} and {b}")))?
            };
            match found {
                None => found = Some(candidate),
                Some(prev) if prev != candidate => {
                    return Err(inconsistent(format!(
                        "image of {v} depends on the chosen descent"
                    )));
                }
                _ => {}
            }
        }
        rho.insert(
            v.clone(),
            found.expect("nontrivial element has a left descent"),
        );
    }
    let image: Vec<usize> = lattice.nodes().iter().map(|w| rho[w]).collect();
    Ok(WeakOrderIsomorphism { image })
}

impl WeakOrderIsomorphism {
    pub fn is_bijective(&self, poset_len: usize) -> bool {
        let mut seen = vec![false; poset_len];
        self.image.len() == poset_len
            && self
                .image
                .iter()
                .all(|&x| x < poset_len && !std::mem::replace(&mut seen[x], true))
    }

    /// `u ≤ v ⟺ ρ(u) ≤ ρ(v)` on the given index pairs of the lattice.
    pub fn preserves_order_on(
        &self,
        poset: &SttiltPoset,
        lattice: &WeakOrderLattice,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<bool> {
        let nodes = lattice.nodes();
        for (a, b) in pairs {
            let weak = nodes[a].leq(&nodes[b])?;
            if weak != poset.order.leq(self.image[a], self.image[b]) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(n: usize, e: &[usize]) -> XiIndex {
        XiIndex::new(n, e.to_vec()).unwrap()
    }

    fn poset(n: usize) -> SttiltPoset {
        SttiltPoset::build(n, CriterionOptions::default(), Exec::Sequential).unwrap()
    }

    #[test]
    fn rank_one() {
        let p = poset(1);
        assert_eq!(p.nodes.len(), 2);
        assert_eq!(
            p.mutation_edges,
            vec![(p.maximum().unwrap(), p.minimum().unwrap())]
        );
    }

    #[test]
    fn rank_two_is_a_hexagon() {
        let p = poset(2);
        assert_eq!(p.len(), 6);
        assert!(p.order.is_regular(2));
        assert_eq!(p.mutation_edges.len(), 6);
        assert!(p.mutation_matches_hasse());
        let (max, min) = (p.maximum().unwrap(), p.minimum().unwrap());
        for a in 0..p.len() {
            assert!(p.geq(max, a));
            assert!(p.geq(a, min));
        }
        assert!(!p.geq(min, max));
    }

    #[test]
    fn counts_and_edges() {
        let p = poset(3);
        assert_eq!(p.len(), 24);
        assert_eq!(p.mutation_edges.len(), 36);
        assert!(p.mutation_matches_hasse());
        assert!(p.order.is_regular(3));
    }

    #[test]
    fn isomorphism_small_ranks() {
        for n in 1..=3 {
            let p = poset(n);
            let l = WeakOrderLattice::new(n).unwrap();
            let rho = build_isomorphism(&p, &l).unwrap();
            assert!(rho.is_bijective(p.len()));
            let all = (0..l.len()).flat_map(|a| (0..l.len()).map(move |b| (a, b)));
            assert!(rho.preserves_order_on(&p, &l, all).unwrap());
        }
        let p = poset(2);
        let l = WeakOrderLattice::new(2).unwrap();
        let rho = build_isomorphism(&p, &l).unwrap();
        let s1 = l.index_of(&Permutation::generator(3, 1).unwrap()).unwrap();
        assert_eq!(
            p.nodes[rho.image[s1]],
            SiltingSet::from_members(vec![xi(2, &[0, 1, 2]), xi(2, &[2])])
        );
        let w0 = l.index_of(&Permutation::longest(3)).unwrap();
        assert_eq!(rho.image[w0], p.maximum().unwrap());
    }

    #[test]
    fn readouts() {
        let r = pair_readout(&SiltingSet::minimum(2));
        assert!(r.modules.is_empty() && r.support.is_empty());
        let r = pair_readout(&SiltingSet::maximum(2));
        assert_eq!(r.support, vec![1, 2]);
        assert_eq!(r.modules.len(), 2);
        let r = pair_readout(&SiltingSet::from_members(vec![
            xi(2, &[0, 1, 2]),
            xi(2, &[2]),
        ]));
        assert_eq!(r.modules, vec![xi(2, &[0, 1, 2])]);
        assert_eq!(r.shifted_projectives, vec![2]);
        assert_eq!(r.support, vec![1]);
    }

    #[test]
    fn budget_is_enforced() {
        let e = SttiltPoset::build_with_budget(4, CriterionOptions::default(), Exec::Sequential, 3);
        assert!(matches!(e, Err(Error::BudgetExceeded { .. })));
        assert!(matches!(
            SttiltPoset::build(0, CriterionOptions::default(), Exec::Sequential),
            Err(Error::InvalidRank(0))
        ));
    }
}
