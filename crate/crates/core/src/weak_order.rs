//! The symmetric group `S_{n+1}` under the left weak order.
//!
//! Permutations are stored in one-line notation with images in `1..=n+1`.
//! The generator `s_i` acts on the left by exchanging the *values* `i` and
//! `i+1`, i.e. `(s_i·w)(a) = s_i(w(a))`. A reduced word lists its letters
//! leftmost first, so `[i_l, …, i_1]` stands for `s_{i_l}⋯s_{i_1}` and the
//! last letter acts first.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `n+1` enumerated by default (`8! = 40320` elements).
pub const DEFAULT_ORDER_BUDGET: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > m || seen[x] {
                return Err(Error::InvalidPermutation(images.clone()));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(order: usize) -> Self {
        Permutation {
            images: (1..=order as u8).collect(),
        }
    }

    /// The longest element `(n+1, n, …, 1)`.
    pub fn longest(order: usize) -> Self {
        Permutation {
            images: (1..=order as u8).rev().collect(),
        }
    }

    /// The adjacent transposition `s_i` in `S_order`.
    pub fn generator(order: usize, i: usize) -> Result<Self> {
        Permutation::identity(order)
            .left_multiply(i)
            .map(|(p, _)| p)
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    /// Rank `n` of the group, i.e. the number of generators.
    pub fn rank(&self) -> usize {
        self.images.len() - 1
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of the point `a` (1-based).
    pub fn apply(&self, a: usize) -> usize {
        self.images[a - 1] as usize
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (a, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = (a + 1) as u8;
        }
        Permutation { images: inv }
    }

    /// `self · other`, acting as `a ↦ self(other(a))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.order(), other.order());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize - 1])
                .collect(),
        }
    }

    /// Number of pairs `a < b` with `w(a) > w(b)`.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn length(&self) -> usize {
        self.inversions()
    }

    fn position_of(&self, value: usize) -> usize {
        self.images
            .iter()
            .position(|&x| x as usize == value)
            .expect("value present in a permutation")
    }

    /// Whether `s_i` is a left descent, i.e. `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.position_of(i) > self.position_of(i + 1)
    }

    /// Returns `s_i · w` together with the change in length.
    pub fn left_multiply(&self, i: usize) -> Result<(Permutation, i8)> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(Error::GeneratorOutOfRange { index: i, rank: n });
        }
        let delta = if self.has_left_descent(i) { -1 } else { 1 };
        let images = self
            .images
            .iter()
            .map(|&x| {
                if x as usize == i {
                    (i + 1) as u8
                } else if x as usize == i + 1 {
                    i as u8
                } else {
                    x
                }
            })
            .collect();
        Ok((Permutation { images }, delta))
    }

    fn left_mul_unchecked(&self, i: usize) -> Permutation {
        self.left_multiply(i).expect("generator in range").0
    }

    /// Canonical reduced word: repeatedly strip the smallest left descent.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..=w.rank()).find(|&i| w.has_left_descent(i)) {
            letters.push(i);
            w = w.left_mul_unchecked(i);
        }
        ReducedWord {
            order: self.order(),
            letters,
        }
    }

    /// Closed-form left weak order test: `self ≤ other` iff
    /// `ℓ(other) = ℓ(self) + ℓ(other · self⁻¹)`.
    pub fn leq(&self, other: &Permutation) -> Result<bool> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let diff = other.compose(&self.inverse());
        Ok(other.length() == self.length() + diff.length())
    }

    /// All elements of `S_order`, sorted lexicographically.
    pub fn all(order: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u8> = (1..=order as u8).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(k) = (0..order.saturating_sub(1))
                .rev()
                .find(|&k| current[k] < current[k + 1])
            else {
                break;
            };
            let l = (k + 1..order)
                .rev()
                .find(|&l| current[k] < current[l])
                .unwrap();
            current.swap(k, l);
            current[k + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A word in the generators, leftmost letter first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    pub order: usize,
    pub letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(order: usize, letters: Vec<usize>) -> Result<Self> {
        let n = order - 1;
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::GeneratorOutOfRange {
                index: bad,
                rank: n,
            });
        }
        Ok(ReducedWord { order, letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn product(&self) -> Permutation {
        self.letters
            .iter()
            .rev()
            .fold(Permutation::identity(self.order), |w, &i| {
                w.left_mul_unchecked(i)
            })
    }

    pub fn is_reduced(&self) -> bool {
        self.product().length() == self.letters.len()
    }

    /// Locates a deletion pair by the exchange scan and removes both letters.
    ///
    /// Returns the positions `(p, q)` (indices into `letters`, `q < p`) and the
    /// shortened word. Position `p` is the first letter `s_{i_j}` whose image
    /// under the letters to its left is inverted; `q` is the letter at which
    /// that inversion is created.
    pub fn exchange_drop(&self) -> Result<(usize, usize, ReducedWord)> {
        let l = &self.letters;
        for p in 1..l.len() {
            // u = s_{l[0]} ∘ … ∘ s_{l[p-1]} applied to l[p] and l[p]+1
            let (mut s, mut t) = (l[p], l[p] + 1);
            // Walk leftwards from p-1 down to 0, tracking the pair.
            let mut found = None;
            for qpos in (0..p).rev() {
                let g = l[qpos];
                if s == g && t == g + 1 {
                    found = Some(qpos);
                    break;
                }
                s = swap_value(s, g);
                t = swap_value(t, g);
            }
            if let Some(qpos) = found {
                let letters = l
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != p && k != qpos)
                    .map(|(_, &x)| x)
                    .collect();
                return Ok((
                    p,
                    qpos,
                    ReducedWord {
                        order: self.order,
                        letters,
                    },
                ));
            }
        }
        Err(Error::AlreadyReduced)
    }
}

fn swap_value(x: usize, g: usize) -> usize {
    if x == g {
        g + 1
    } else if x == g + 1 {
        g
    } else {
        x
    }
}

/// All reduced words of `w`, by recursion on left descents.
pub fn all_reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    if w.length() == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 1..=w.rank() {
        if w.has_left_descent(i) {
            for mut tail in all_reduced_words(&w.left_mul_unchecked(i)) {
                tail.insert(0, i);
                out.push(tail);
            }
        }
    }
    out
}

/// The longest element of the parabolic subgroup generated by `J`.
pub fn parabolic_longest(order: usize, j_set: &BTreeSet<usize>) -> Permutation {
    parabolic_subgroup(order, j_set)
        .into_iter()
        .max_by_key(Permutation::length)
        .expect("subgroup contains the identity")
}

/// Elements of `⟨s_j : j ∈ J⟩`, by closure under left multiplication.
pub fn parabolic_subgroup(order: usize, j_set: &BTreeSet<usize>) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([Permutation::identity(order)]);
    while let Some(w) = queue.pop_front() {
        if !seen.insert(w.clone()) {
            continue;
        }
        for &j in j_set {
            let next = w.left_mul_unchecked(j);
            if !seen.contains(&next) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Hasse quiver of the left weak order, with covers pointing upwards.
#[derive(Clone, Debug)]
pub struct WeakOrderLattice {
    order: usize,
    nodes: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    /// `up[v]` lists the covers of `v` (length one more).
    up: Vec<Vec<usize>>,
    /// `down[v]` lists the elements covered by `v`.
    down: Vec<Vec<usize>>,
}

impl WeakOrderLattice {
    /// Builds the lattice for `S_{n+1}` within the default budget.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_budget(n, DEFAULT_ORDER_BUDGET)
    }

    pub fn with_budget(n: usize, max_order: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        let order = n + 1;
        if order > max_order {
            return Err(Error::BudgetExceeded {
                what: "weak order",
                requested: order,
                limit: max_order,
            });
        }
        let mut nodes = Permutation::all(order);
        nodes.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
        let index: HashMap<Permutation, usize> = nodes
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        let mut up = vec![Vec::new(); nodes.len()];
        let mut down = vec![Vec::new(); nodes.len()];
        for (k, w) in nodes.iter().enumerate() {
            for i in 1..=n {
                let (v, delta) = w.left_multiply(i)?;
                if delta > 0 {
                    let t = index[&v];
                    up[k].push(t);
                    down[t].push(k);
                }
            }
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
        }
        Ok(WeakOrderLattice {
            order,
            nodes,
            index,
            up,
            down,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.order - 1
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes sorted by length, then lexicographically.
    pub fn nodes(&self) -> &[Permutation] {
        &self.nodes
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn covers(&self, v: usize) -> &[usize] {
        &self.up[v]
    }

    pub fn covered_by(&self, v: usize) -> &[usize] {
        &self.down[v]
    }

    /// Hasse edges `(w, w'')` with `w''` covering `w`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (v, ups) in self.up.iter().enumerate() {
            for &u in ups {
                out.push((v, u));
            }
        }
        out
    }

    /// Elements `≥ v`, found by walking covers.
    pub fn upper_set(&self, v: usize) -> Vec<bool> {
        reach(&self.up, v)
    }

    /// Elements `≤ v`, found by walking covers downwards.
    pub fn lower_set(&self, v: usize) -> Vec<bool> {
        reach(&self.down, v)
    }

    pub fn join(&self, items: &[Permutation]) -> Result<Permutation> {
        self.bound(items, true)
    }

    pub fn meet(&self, items: &[Permutation]) -> Result<Permutation> {
        self.bound(items, false)
    }

    fn bound(&self, items: &[Permutation], upper: bool) -> Result<Permutation> {
        if items.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut common = vec![true; self.len()];
        for w in items {
            let idx = self.index_of(w).ok_or(Error::OrderMismatch {
                left: self.order,
                right: w.order(),
            })?;
            let set = if upper {
                self.upper_set(idx)
            } else {
                self.lower_set(idx)
            };
            for (c, s) in common.iter_mut().zip(set) {
                *c &= s;
            }
        }
        // The extremal element of the common set is the one whose own
        // upper (lower) set covers the whole common set.
        let candidates: Vec<usize> = (0..self.len()).filter(|&k| common[k]).collect();
        let best = if upper {
            candidates
                .iter()
                .copied()
                .min_by_key(|&k| self.nodes[k].length())
        } else {
            candidates
                .iter()
                .copied()
                .max_by_key(|&k| self.nodes[k].length())
        }
        .expect("lattice bounds exist");
        Ok(self.nodes[best].clone())
    }

    /// Checks `[1, w_0(J)] = ⟨s_j : j ∈ J⟩` elementwise.
    pub fn parabolic_interval_check(&self, j_set: &BTreeSet<usize>) -> bool {
        let group = parabolic_subgroup(self.order, j_set);
        let top = parabolic_longest(self.order, j_set);
        let Some(top_idx) = self.index_of(&top) else {
            return false;
        };
        let lower = self.lower_set(top_idx);
        let interval: BTreeSet<Permutation> = (0..self.len())
            .filter(|&k| lower[k])
            .map(|k| self.nodes[k].clone())
            .collect();
        interval == group
    }
}

fn reach(adj: &[Vec<usize>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(xs: &[u8]) -> Permutation {
        Permutation::new(xs.to_vec()).unwrap()
    }

    fn s(order: usize, i: usize) -> Permutation {
        Permutation::generator(order, i).unwrap()
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(Permutation::identity(4).inversions(), 0);
        assert_eq!(p(&[4, 3, 2, 1]).inversions(), 6);
        assert_eq!(p(&[3, 1, 2]).inversions(), 2);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
    }

    #[test]
    fn left_action_convention() {
        let id = Permutation::identity(3);
        assert_eq!(id.left_multiply(1).unwrap(), (p(&[2, 1, 3]), 1));
        assert_eq!(p(&[2, 1, 3]).left_multiply(1).unwrap(), (id.clone(), -1));
        assert_eq!(p(&[3, 1, 2]).left_multiply(2).unwrap(), (p(&[2, 1, 3]), -1));
        // s_i · w applies s_i after w.
        let w = p(&[3, 1, 2]);
        assert_eq!(w.left_multiply(2).unwrap().0, s(3, 2).compose(&w));
        assert!(id.left_multiply(3).is_err());
        assert!(id.left_multiply(0).is_err());
    }

    #[test]
    fn reducedness() {
        let w = |l: &[usize]| ReducedWord::new(3, l.to_vec()).unwrap();
        assert!(w(&[1, 2, 1]).is_reduced());
        assert_eq!(w(&[1, 2, 1]).product(), Permutation::longest(3));
        assert!(!w(&[1, 1]).is_reduced());
        assert!(!w(&[2, 1, 2, 1]).is_reduced());
        assert_eq!(w(&[2, 1, 2, 1]).product().length(), 2);
        assert!(ReducedWord::new(3, vec![3]).is_err());
    }

    #[test]
    fn exchange_drop_examples() {
        let w = |l: &[usize]| ReducedWord::new(3, l.to_vec()).unwrap();
        let (_, _, short) = w(&[1, 1]).exchange_drop().unwrap();
        assert!(short.is_empty());

        let long = w(&[2, 1, 2, 1]);
        let (p, q, short) = long.exchange_drop().unwrap();
        assert!(q < p);
        assert_eq!(short.len(), 2);
        assert_eq!(short.product(), long.product());

        let word = w(&[1, 2, 2, 1]);
        let (_, _, once) = word.exchange_drop().unwrap();
        assert_eq!(once.product(), word.product());
        let (_, _, twice) = once.exchange_drop().unwrap();
        assert!(twice.is_empty());

        assert!(matches!(
            w(&[1, 2, 1]).exchange_drop(),
            Err(Error::AlreadyReduced)
        ));
    }

    #[test]
    fn canonical_reduced_words() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(p(&[2, 1, 3]).reduced_word().letters, vec![1]);
        assert_eq!(
            Permutation::longest(3).reduced_word().letters,
            vec![1, 2, 1]
        );
    }

    #[test]
    fn leq_examples() {
        let id = Permutation::identity(3);
        for w in Permutation::all(3) {
            assert!(id.leq(&w).unwrap());
        }
        assert!(!s(3, 1).leq(&s(3, 2)).unwrap());
        assert!(!s(3, 2).leq(&s(3, 1)).unwrap());
        let s2s1 = s(3, 2).compose(&s(3, 1));
        assert!(s(3, 1).leq(&s2s1).unwrap());
        assert!(id.leq(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn join_examples() {
        let lat = WeakOrderLattice::new(4).unwrap();
        let j = lat.join(&[s(5, 1), s(5, 3)]).unwrap();
        assert_eq!(j, s(5, 1).compose(&s(5, 3)));

        let lat3 = WeakOrderLattice::new(2).unwrap();
        let j = lat3.join(&[s(3, 1), s(3, 2)]).unwrap();
        assert_eq!(j, s(3, 1).compose(&s(3, 2)).compose(&s(3, 1)));
        assert_eq!(
            lat3.meet(&[s(3, 1), s(3, 2)]).unwrap(),
            Permutation::identity(3)
        );
        assert!(lat3.join(&[]).is_err());
    }

    #[test]
    fn parabolic_intervals() {
        let lat3 = WeakOrderLattice::new(2).unwrap();
        assert!(lat3.parabolic_interval_check(&BTreeSet::from([1])));
        assert_eq!(parabolic_subgroup(3, &BTreeSet::from([1])).len(), 2);
        assert!(lat3.parabolic_interval_check(&BTreeSet::from([1, 2])));
        assert_eq!(parabolic_subgroup(3, &BTreeSet::from([1, 2])).len(), 6);
        let lat5 = WeakOrderLattice::new(4).unwrap();
        assert!(lat5.parabolic_interval_check(&BTreeSet::from([1, 3])));
        assert_eq!(parabolic_subgroup(5, &BTreeSet::from([1, 3])).len(), 4);
    }

    #[test]
    fn hasse_shapes() {
        let chain = WeakOrderLattice::new(1).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain.edges(), vec![(0, 1)]);

        let hexagon = WeakOrderLattice::new(2).unwrap();
        assert_eq!(hexagon.len(), 6);
        assert_eq!(hexagon.edges().len(), 6);

        let s4 = WeakOrderLattice::new(3).unwrap();
        assert_eq!(s4.len(), 24);
        for v in 0..s4.len() {
            assert_eq!(s4.covers(v).len() + s4.covered_by(v).len(), 3);
        }
        assert!(matches!(
            WeakOrderLattice::with_budget(8, 8),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(WeakOrderLattice::new(0).is_err());
    }

    #[test]
    fn all_reduced_words_of_longest() {
        let words = all_reduced_words(&Permutation::longest(4));
        assert_eq!(words.len(), 16);
        for w in words {
            let rw = ReducedWord::new(4, w).unwrap();
            assert!(rw.is_reduced());
            assert_eq!(rw.product(), Permutation::longest(4));
        }
    }
}
