//! Finite posets given by a full order matrix.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    /// `leq[a][b]` iff `a ≤ b`.
    leq: Vec<Vec<bool>>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl FinitePoset {
    /// Builds the poset and its Hasse diagram; fails unless the relation is
    /// reflexive, antisymmetric and transitive.
    pub fn from_matrix(leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = leq.len();
        for a in 0..n {
            if leq[a].len() != n || !leq[a][a] {
                return Err(Error::Inconsistent(format!(
                    "relation not reflexive at {a}"
                )));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::Inconsistent(format!(
                        "relation not antisymmetric at ({a},{b})"
                    )));
                }
                if leq[a][b] && (0..n).any(|c| leq[b][c] && !leq[a][c]) {
                    return Err(Error::Inconsistent(format!(
                        "relation not transitive at ({a},{b})"
                    )));
                }
            }
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && leq[a][b]
                    && !(0..n).any(|c| c != a && c != b && leq[a][c] && leq[c][b])
                {
                    up[a].push(b);
                    down[b].push(a);
                }
            }
        }
        Ok(FinitePoset { leq, up, down })
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Elements covering `a`.
    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.up[a]
    }

    /// Elements covered by `a`.
    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.down[a]
    }

    /// Hasse edges `(a, b)` with `b` covering `a`.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.up[a].iter().map(move |&b| (a, b)))
            .collect()
    }

    /// Every element has exactly `k` Hasse neighbours.
    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.len()).all(|a| self.up[a].len() + self.down[a].len() == k)
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq[a][b]))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq[b][a]))
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let ub: Vec<usize> = (0..self.len())
            .filter(|&c| self.leq[a][c] && self.leq[b][c])
            .collect();
        ub.iter()
            .copied()
            .find(|&c| ub.iter().all(|&d| self.leq[c][d]))
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lb: Vec<usize> = (0..self.len())
            .filter(|&c| self.leq[c][a] && self.leq[c][b])
            .collect();
        lb.iter()
            .copied()
            .find(|&c| lb.iter().all(|&d| self.leq[d][c]))
    }

    /// Elements of the closed interval `[a, b]`.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&c| self.leq[a][c] && self.leq[c][b])
            .collect()
    }

    /// Sub-poset on the given elements (in the given order).
    pub fn restrict(&self, elems: &[usize]) -> FinitePoset {
        let leq = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| self.leq[a][b]).collect())
            .collect();
        FinitePoset::from_matrix(leq).expect("restriction of a poset is a poset")
    }

    /// Connected as an undirected Hasse graph.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(a) = queue.pop_front() {
            for &b in self.up[a].iter().chain(&self.down[a]) {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn signature(&self, a: usize) -> (usize, usize, usize, usize) {
        let below = (0..self.len()).filter(|&b| self.leq[b][a]).count();
        let above = (0..self.len()).filter(|&b| self.leq[a][b]).count();
        (below, above, self.down[a].len(), self.up[a].len())
    }

    /// An order isomorphism `self → other`, if one exists.
    pub fn isomorphism_to(&self, other: &FinitePoset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let sig_a: Vec<_> = (0..n).map(|a| self.signature(a)).collect();
        let sig_b: Vec<_> = (0..n).map(|b| other.signature(b)).collect();
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
        // assign in order of increasing down-set size so constraints bite early
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| sig_a[a]);
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        #[allow(clippy::too_many_arguments)]
        fn go(
            k: usize,
            order: &[usize],
            p: &FinitePoset,
            q: &FinitePoset,
            sig_a: &[(usize, usize, usize, usize)],
            sig_b: &[(usize, usize, usize, usize)],
            image: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            let Some(&a) = order.get(k) else {
                return true;
            };
            for b in 0..q.len() {
                if used[b] || sig_b[b] != sig_a[a] {
                    continue;
                }
                let consistent = order[..k].iter().all(|&c| {
                    let d = image[c];
                    p.leq[a][c] == q.leq[b][d] && p.leq[c][a] == q.leq[d][b]
                });
                if !consistent {
                    continue;
                }
                image[a] = b;
                used[b] = true;
                if go(k + 1, order, p, q, sig_a, sig_b, image, used) {
                    return true;
                }
                used[b] = false;
            }
            image[a] = usize::MAX;
            false
        }
        if go(
            0, &order, self, other, &sig_a, &sig_b, &mut image, &mut used,
        ) {
            Some(image)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_covers(n: usize, covers: &[(usize, usize)]) -> FinitePoset {
        let mut leq = vec![vec![false; n]; n];
        for (a, row) in leq.iter_mut().enumerate() {
            row[a] = true;
        }
        for &(a, b) in covers {
            leq[a][b] = true;
        }
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if leq[a][k] && leq[k][b] {
                        leq[a][b] = true;
                    }
                }
            }
        }
        FinitePoset::from_matrix(leq).unwrap()
    }

    #[test]
    fn hexagon_and_square() {
        let hex = from_covers(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)]);
        assert!(hex.is_regular(2));
        assert_eq!(hex.join(1, 2), Some(5));
        assert_eq!(hex.meet(3, 4), Some(0));
        assert_eq!(hex.hasse_edges().len(), 6);
        let relabeled = from_covers(6, &[(5, 1), (5, 2), (1, 3), (2, 4), (3, 0), (4, 0)]);
        let iso = hex.isomorphism_to(&relabeled).unwrap();
        assert_eq!(iso[0], 5);
        let square = from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(hex.isomorphism_to(&square).is_none());
        let chain = from_covers(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(square.isomorphism_to(&chain).is_none());
    }

    #[test]
    fn rejects_non_orders() {
        assert!(FinitePoset::from_matrix(vec![vec![true, true], vec![true, true]]).is_err());
        assert!(FinitePoset::from_matrix(vec![vec![false]]).is_err());
        let nontransitive = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(FinitePoset::from_matrix(nontransitive).is_err());
    }
}
