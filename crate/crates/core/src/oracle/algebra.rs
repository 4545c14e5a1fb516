//! Finite dimensional quotients `kQ/I` of path algebras by homogeneous ideals.
//!
//! The basis is computed degree by degree: the degree-`d` part is spanned by
//! pairs (degree `d−1` basis element, arrow), modulo the images of all
//! relations multiplied on the left by lower-degree basis elements. Each
//! basis element keeps a representative path, so multiplication reduces to
//! repeated right multiplication by arrows.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, unit, zeros, Echelon, Q};
use crate::oracle::quiver::QuiverPresentation;

pub const DEFAULT_DEGREE_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub degree: usize,
    pub start: usize,
    pub end: usize,
    pub path: Vec<usize>,
}

type Sparse = Vec<(usize, Q)>;

#[derive(Clone, Debug)]
pub struct FiniteDimAlgebra {
    presentation: QuiverPresentation,
    basis: Vec<BasisElement>,
    degree_dims: Vec<usize>,
    /// `right_arrow[a][b]` is `b · a` in basis coordinates.
    right_arrow: Vec<Vec<Sparse>>,
    mult: Vec<Vec<Sparse>>,
}

fn to_sparse(v: &[Q]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

impl FiniteDimAlgebra {
    pub fn build(p: &QuiverPresentation) -> Result<Self> {
        Self::build_with_cap(p, DEFAULT_DEGREE_CAP)
    }

    pub fn build_with_cap(p: &QuiverPresentation, degree_cap: usize) -> Result<Self> {
        p.validate()?;
        let n = p.vertices;
        let mut basis: Vec<BasisElement> = (1..=n)
            .map(|v| BasisElement {
                degree: 0,
                start: v,
                end: v,
                path: Vec::new(),
            })
            .collect();
        let mut degree_dims = vec![n];
        let mut offsets = vec![0usize];
        let mut right_arrow: Vec<Vec<Sparse>> = vec![Vec::new(); p.arrows.len()];

        for d in 1.. {
            let prev = offsets[d - 1]..offsets[d - 1] + degree_dims[d - 1];
            let mut pairs = Vec::new();
            let mut pair_index = HashMap::new();
            for b in prev.clone() {
                for (a, arrow) in p.arrows.iter().enumerate() {
                    if arrow.source == basis[b].end {
                        pair_index.insert((b, a), pairs.len());
                        pairs.push((b, a));
                    }
                }
            }
            let width = pairs.len();
            let mut ideal = Echelon::new(width);
            for rel in &p.relations {
                let k = rel.terms[0].1.len();
                if k > d {
                    continue;
                }
                let start = p.arrows[rel.terms[0].1[0]].source;
                let lo = offsets[d - k];
                for (x, el) in basis.iter().enumerate().skip(lo).take(degree_dims[d - k]) {
                    if el.end != start {
                        continue;
                    }
                    let mut v = zeros(width);
                    for (coef, path) in &rel.terms {
                        let (last, init) = path.split_last().expect("nonempty relation path");
                        let mut cur: Sparse = vec![(x, Q::one())];
                        for &a in init {
                            cur = apply_right(&right_arrow[a], &cur);
                        }
                        for (b, c) in cur {
                            let col = pair_index[&(b, *last)];
                            v[col] += coef * c;
                        }
                    }
                    ideal.insert(v);
                }
            }
            let free = ideal.free_columns();
            let base = basis.len();
            for &col in &free {
                let (b, a) = pairs[col];
                let mut path = basis[b].path.clone();
                path.push(a);
                basis.push(BasisElement {
                    degree: d,
                    start: basis[b].start,
                    end: p.arrows[a].target,
                    path,
                });
            }
            for list in right_arrow.iter_mut() {
                list.resize(base, Vec::new());
            }
            for (col, &(b, a)) in pairs.iter().enumerate() {
                let coords = ideal.quotient_coords(unit(width, col), &free);
                right_arrow[a][b] = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| (base + i, x))
                    .collect();
            }
            if free.is_empty() {
                break;
            }
            if d >= degree_cap {
                return Err(Error::NotNilpotent { cap: degree_cap });
            }
            offsets.push(base);
            degree_dims.push(free.len());
        }
        let dim = basis.len();
        for list in right_arrow.iter_mut() {
            list.resize(dim, Vec::new());
        }

        let mut alg = FiniteDimAlgebra {
            presentation: p.clone(),
            basis,
            degree_dims,
            right_arrow,
            mult: Vec::new(),
        };
        let mult = (0..dim)
            .map(|x| (0..dim).map(|y| alg.times_path(x, y)).collect())
            .collect();
        alg.mult = mult;
        Ok(alg)
    }

    fn times_path(&self, x: usize, y: usize) -> Sparse {
        let by = &self.basis[y];
        if self.basis[x].end != by.start {
            return Vec::new();
        }
        let mut cur: Sparse = vec![(x, Q::one())];
        for &a in &by.path {
            cur = apply_right(&self.right_arrow[a], &cur);
        }
        cur
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.presentation
    }

    pub fn vertices(&self) -> usize {
        self.presentation.vertices
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Dimension of each graded piece, starting with degree 0.
    pub fn degree_dims(&self) -> &[usize] {
        &self.degree_dims
    }

    /// The idempotent `e_v` (vertices are 1-based).
    pub fn idempotent(&self, v: usize) -> Vec<Q> {
        unit(self.dim(), v - 1)
    }

    /// Class of a path given by arrow indices; zero for non-composable input.
    pub fn path_element(&self, path: &[usize]) -> Vec<Q> {
        let Some((start, _)) = self.presentation.path_ends(path) else {
            return zeros(self.dim());
        };
        let mut cur: Sparse = vec![(start - 1, Q::one())];
        for &a in path {
            cur = apply_right(&self.right_arrow[a], &cur);
        }
        let mut v = zeros(self.dim());
        for (i, c) in cur {
            v[i] += c;
        }
        v
    }

    /// Basis indices spanning `e_i Λ e_j`, i.e. classes of paths from `i` to `j`.
    pub fn corner(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].start == i && self.basis[b].end == j)
            .collect()
    }

    /// Basis indices spanning `e_i Λ`.
    pub fn row(&self, i: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].start == i)
            .collect()
    }

    pub fn mul_basis(&self, x: usize, y: usize) -> &[(usize, Q)] {
        &self.mult[x][y]
    }

    /// `u · a` for an arrow index `a`.
    pub fn mul_arrow(&self, u: &[Q], a: usize) -> Vec<Q> {
        let mut out = zeros(self.dim());
        for (x, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, e) in &self.right_arrow[a][x] {
                out[*t] += c * e;
            }
        }
        out
    }

    pub fn mul(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = zeros(self.dim());
        for (x, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (y, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (z, c) in &self.mult[x][y] {
                    out[*z] += &ab * c;
                }
            }
        }
        out
    }

    /// `u · e_j`: keeps the coordinates of basis elements ending at `j`.
    pub fn project_end(&self, u: &[Q], j: usize) -> Vec<Q> {
        u.iter()
            .enumerate()
            .map(|(b, x)| {
                if self.basis[b].end == j {
                    x.clone()
                } else {
                    Q::zero()
                }
            })
            .collect()
    }

    /// `e_i · u`.
    pub fn project_start(&self, i: usize, u: &[Q]) -> Vec<Q> {
        u.iter()
            .enumerate()
            .map(|(b, x)| {
                if self.basis[b].start == i {
                    x.clone()
                } else {
                    Q::zero()
                }
            })
            .collect()
    }

    /// Verifies `(xy)z = x(yz)` on all basis triples.
    pub fn check_associative(&self) -> bool {
        let dim = self.dim();
        for x in 0..dim {
            for y in 0..dim {
                let xy = &self.mult[x][y];
                for z in 0..dim {
                    let mut left = zeros(dim);
                    for (w, c) in xy {
                        for (t, e) in &self.mult[*w][z] {
                            left[*t] += c * e;
                        }
                    }
                    let mut right = zeros(dim);
                    for (w, c) in &self.mult[y][z] {
                        for (t, e) in &self.mult[x][*w] {
                            right[*t] += c * e;
                        }
                    }
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every relation evaluates to zero.
    pub fn check_relations(&self) -> bool {
        self.presentation.relations.iter().all(|r| {
            let mut acc = zeros(self.dim());
            for (c, path) in &r.terms {
                axpy(&mut acc, c, &self.path_element(path));
            }
            is_zero_vec(&acc)
        })
    }

    /// Readable name of a basis element, e.g. `e1` or `a.b`.
    pub fn basis_name(&self, b: usize) -> String {
        let el = &self.basis[b];
        if el.path.is_empty() {
            format!("e{}", el.start)
        } else {
            el.path
                .iter()
                .map(|&a| self.presentation.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

fn apply_right(table: &[Sparse], v: &[(usize, Q)]) -> Sparse {
    let mut acc: HashMap<usize, Q> = HashMap::new();
    for (b, c) in v {
        for (t, e) in &table[*b] {
            *acc.entry(*t).or_insert_with(Q::zero) += c * e;
        }
    }
    let mut out: Sparse = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

/// Dense vector to `(index, coefficient)` pairs.
pub fn sparse(v: &[Q]) -> Vec<(usize, Q)> {
    to_sparse(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_a2(extra: &[(i64, &[&str])]) -> QuiverPresentation {
        let mut p = QuiverPresentation::new(2);
        p.arrow("a", 1, 2);
        p.arrow("b", 2, 1);
        for t in extra {
            p.relation(std::slice::from_ref(t)).unwrap();
        }
        p
    }

    #[test]
    fn double_line_with_two_cycles_killed() {
        let p = double_a2(&[(1, &["a", "b"]), (1, &["b", "a"])]);
        let alg = FiniteDimAlgebra::build(&p).unwrap();
        assert_eq!(alg.dim(), 4);
        assert_eq!(alg.degree_dims(), &[2, 2]);
        assert_eq!(alg.corner(1, 2).len(), 1);
        assert!(alg.check_associative());
        assert!(alg.check_relations());
    }

    #[test]
    fn truncation_by_length() {
        let p = double_a2(&[(1, &["a", "b", "a"]), (1, &["b", "a", "b"])]);
        let alg = FiniteDimAlgebra::build(&p).unwrap();
        // e1 e2 a b ab ba
        assert_eq!(alg.dim(), 6);
        assert!(alg.check_associative());
        let ab = alg.path_element(&[0, 1]);
        assert!(!is_zero_vec(&ab));
        assert!(is_zero_vec(&alg.mul(&ab, &alg.path_element(&[0]))));
    }

    #[test]
    fn rejects_infinite_dimensional() {
        let p = double_a2(&[]);
        assert!(matches!(
            FiniteDimAlgebra::build_with_cap(&p, 6),
            Err(Error::NotNilpotent { cap: 6 })
        ));
    }

    #[test]
    fn commutativity_relation_identifies_paths() {
        // square 1->2->4, 1->3->4 with commutativity
        let mut p = QuiverPresentation::new(4);
        p.arrow("a", 1, 2);
        p.arrow("b", 2, 4);
        p.arrow("c", 1, 3);
        p.arrow("d", 3, 4);
        p.relation(&[(1, &["a", "b"]), (-1, &["c", "d"])]).unwrap();
        let alg = FiniteDimAlgebra::build(&p).unwrap();
        assert_eq!(alg.dim(), 4 + 4 + 1);
        assert_eq!(alg.path_element(&[0, 1]), alg.path_element(&[2, 3]));
    }
}
