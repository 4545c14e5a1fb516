//! Exact linear algebra over the rationals.
//!
//! Everything here works on dense `Vec<Q>` row vectors. The sizes that occur
//! in the oracle are small (a few hundred columns at most), so clarity wins
//! over clever storage.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(value: i64) -> Q {
    Q::from_integer(BigInt::from(value))
}

pub fn zeros(len: usize) -> Vec<Q> {
    vec![Q::zero(); len]
}

pub fn unit(len: usize, index: usize) -> Vec<Q> {
    let mut v = zeros(len);
    v[index] = Q::one();
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += factor * v`
pub fn axpy(acc: &mut [Q], factor: &Q, v: &[Q]) {
    if factor.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += factor * b;
        }
    }
}

/// A subspace kept in reduced row echelon form.
///
/// Rows are sorted by pivot column, every pivot entry is one and every pivot
/// column is zero in all other rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I>(width: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<Q>>,
    {
        let mut e = Echelon::new(width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width).filter(|&c| !is_pivot[c]).collect()
    }

    /// Remainder of `v` after eliminating all pivot columns.
    pub fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        debug_assert_eq!(v.len(), self.width);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = -v[p].clone();
                axpy(&mut v, &f, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v.to_vec()))
    }

    /// Adds `v` to the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, v: Vec<Q>) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = -row[p].clone();
                axpy(row, &f, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn contains_all(&self, other: &Echelon) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_span(&self, other: &Echelon) -> bool {
        self.dim() == other.dim() && self.contains_all(other)
    }

    /// Coordinates of the class of `v` in `V / self`, relative to the free
    /// columns (see [`Echelon::free_columns`]).
    pub fn quotient_coords(&self, v: Vec<Q>, free: &[usize]) -> Vec<Q> {
        let r = self.reduce(v);
        free.iter().map(|&c| r[c].clone()).collect()
    }
}

/// Rank of the matrix whose rows are given.
pub fn rank(rows: &[Vec<Q>], width: usize) -> usize {
    Echelon::from_rows(width, rows.iter().cloned()).dim()
}

/// Basis of `{x : A x = 0}` where `A` is given by rows of length `ncols`.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let e = Echelon::from_rows(ncols, rows.iter().cloned());
    let free = e.free_columns();
    free.iter()
        .map(|&f| {
            let mut x = unit(ncols, f);
            for (row, &p) in e.rows().iter().zip(e.pivots()) {
                if !row[f].is_zero() {
                    x[p] = -row[f].clone();
                }
            }
            x
        })
        .collect()
}

/// Expresses `target` as a combination of `vectors`, if possible.
///
/// The vectors need not be independent; some solution is returned.
pub fn solve_combination(vectors: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let k = vectors.len();
    let width = target.len();
    // Column system: sum_c x_c v_c = target. Eliminate on the transpose with
    // an identity block to track combinations.
    let mut rows: Vec<Vec<Q>> = vectors
        .iter()
        .enumerate()
        .map(|(c, v)| {
            let mut r = v.clone();
            r.extend(unit(k, c));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        for x in rows[next].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && !row[col].is_zero() {
                let f = -row[col].clone();
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
    }
    let mut residual = target.to_vec();
    let mut coeffs = zeros(k);
    for (r, &p) in pivots.iter().enumerate() {
        if residual[p].is_zero() {
            continue;
        }
        let f = residual[p].clone();
        let neg = -f.clone();
        axpy(&mut residual[..], &neg, &rows[r][..width]);
        axpy(&mut coeffs, &f, &rows[r][width..]);
    }
    if is_zero_vec(&residual) {
        Some(coeffs)
    } else {
        None
    }
}

/// A finite dimensional quotient `Z / B` of coordinate subspaces `B ⊆ Z`.
///
/// Classes are represented by coordinates relative to `reps`, a list of
/// vectors in `Z` whose images form a basis of the quotient.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub reps: Vec<Vec<Q>>,
    combined: Echelon,
    width: usize,
}

impl Quotient {
    pub fn new(width: usize, big: &[Vec<Q>], small: &[Vec<Q>]) -> Self {
        let mut echelon = Echelon::from_rows(width, small.iter().cloned());
        let mut reps = Vec::new();
        for z in big {
            if echelon.insert(z.clone()) {
                reps.push(z.clone());
            }
        }
        // Re-derive an echelon form of [small; reps] that tracks which rep
        // each pivot came from by appending tag coordinates.
        let k = reps.len();
        let mut combined = Echelon::new(width + k);
        for s in small {
            let mut r = s.clone();
            r.extend(zeros(k));
            combined.insert(r);
        }
        for (i, z) in reps.iter().enumerate() {
            let mut r = z.clone();
            r.extend(unit(k, i));
            combined.insert(r);
        }
        Quotient {
            reps,
            combined,
            width,
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the class of `v`; `v` must lie in `Z`.
    pub fn coords(&self, v: &[Q]) -> Vec<Q> {
        let k = self.reps.len();
        let mut r = v.to_vec();
        r.extend(zeros(k));
        let red = self.combined.reduce(r);
        debug_assert!(is_zero_vec(&red[..self.width]), "vector outside Z");
        red[self.width..].iter().map(|x| -x.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(rank(&rows, 3), 2);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = vec![v(&[1, 1, 0, 2]), v(&[0, 1, 1, 1])];
        let ns = nullspace(&rows, 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in &rows {
                let dot: Q = r.iter().zip(x).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_finds_combination_or_none() {
        let vs = vec![v(&[1, 0, 1]), v(&[0, 1, 1])];
        let c = solve_combination(&vs, &v(&[2, 3, 5])).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(solve_combination(&vs, &v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn quotient_coordinates() {
        // Z = whole plane, B = span (1,1); reps pick one complement vector.
        let big = vec![v(&[1, 0]), v(&[0, 1])];
        let small = vec![v(&[1, 1])];
        let quo = Quotient::new(2, &big, &small);
        assert_eq!(quo.dim(), 1);
        let a = quo.coords(&v(&[1, 0]));
        let b = quo.coords(&v(&[0, -1]));
        assert_eq!(a, b);
        assert!(is_zero_vec(&quo.coords(&v(&[3, 3]))));
    }

    #[test]
    fn echelon_spans_compare() {
        let a = Echelon::from_rows(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Echelon::from_rows(3, vec![v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert!(a.same_span(&b));
        let c = Echelon::from_rows(3, vec![v(&[1, 0, 0])]);
        assert!(!a.contains_all(&c));
    }
}
