//! Two-term complexes of projectives and morphisms between them up to
//! homotopy.
//!
//! A map `⊕_c P_{src_c} → ⊕_r P_{dst_r}` is a matrix whose `(r, c)` entry is
//! an element of `e_{dst_r} Λ e_{src_c}`, acting by left multiplication.
//! Composition is ordinary matrix multiplication in `Λ`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, nullspace, rank, zeros, Echelon, Quotient, Q};
use crate::oracle::algebra::FiniteDimAlgebra;
use crate::oracle::condition::LineQuiver;
use crate::xi::XiIndex;

/// Matrix of algebra elements, indexed `[row][column]`.
pub type Mat = Vec<Vec<Vec<Q>>>;

/// `P^{-1} → P^0` with `diff[r][c] ∈ e_{zero[r]} Λ e_{minus[c]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConcreteTwoTerm {
    pub minus: Vec<usize>,
    pub zero: Vec<usize>,
    pub diff: Mat,
}

impl ConcreteTwoTerm {
    pub fn new(minus: Vec<usize>, zero: Vec<usize>, diff: Mat) -> Self {
        ConcreteTwoTerm { minus, zero, diff }
    }

    /// `P_k` in degree 0.
    pub fn stalk(zero: Vec<usize>) -> Self {
        let diff = vec![Vec::new(); zero.len()];
        ConcreteTwoTerm {
            minus: Vec::new(),
            zero,
            diff,
        }
    }

    /// `P[1]`, i.e. the projectives in degree −1.
    pub fn shifted(minus: Vec<usize>) -> Self {
        ConcreteTwoTerm {
            minus,
            zero: Vec::new(),
            diff: Vec::new(),
        }
    }

    /// Appends shifted projectives `P_k[1]` with zero differential columns.
    pub fn with_shifted(mut self, alg: &FiniteDimAlgebra, extra: &[usize]) -> Self {
        for &k in extra {
            self.minus.push(k);
            for row in self.diff.iter_mut() {
                row.push(zeros(alg.dim()));
            }
        }
        self
    }

    pub fn direct_sum(alg: &FiniteDimAlgebra, parts: &[ConcreteTwoTerm]) -> Self {
        let minus: Vec<usize> = parts.iter().flat_map(|x| x.minus.iter().copied()).collect();
        let zero: Vec<usize> = parts.iter().flat_map(|x| x.zero.iter().copied()).collect();
        let mut diff = vec![vec![zeros(alg.dim()); minus.len()]; zero.len()];
        let (mut r0, mut c0) = (0, 0);
        for x in parts {
            for (r, row) in x.diff.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    diff[r0 + r][c0 + c] = e.clone();
                }
            }
            r0 += x.zero.len();
            c0 += x.minus.len();
        }
        ConcreteTwoTerm { minus, zero, diff }
    }

    /// Class `[X^0] − [X^{-1}]` over vertices `1..=n`.
    pub fn g_vector(&self, n: usize) -> Vec<i64> {
        let mut g = vec![0i64; n];
        for &k in &self.zero {
            g[k - 1] += 1;
        }
        for &k in &self.minus {
            g[k - 1] -= 1;
        }
        g
    }

    /// The complex `X_i` with shortest-path differential entries.
    pub fn realize(alg: &FiniteDimAlgebra, line: &LineQuiver, i: &XiIndex) -> Result<Self> {
        let shape = i.shape();
        if shape.rank != alg.vertices() {
            return Err(Error::RankMismatch {
                left: shape.rank,
                right: alg.vertices(),
            });
        }
        let mut diff = vec![vec![zeros(alg.dim()); shape.minus_one.len()]; shape.zero.len()];
        for &(src, dst) in &shape.differential {
            let c = shape
                .minus_one
                .iter()
                .position(|&x| x == src)
                .expect("label in degree -1");
            let r = shape
                .zero
                .iter()
                .position(|&x| x == dst)
                .expect("label in degree 0");
            diff[r][c] = alg.path_element(&line.shortest_path(dst, src));
        }
        Ok(ConcreteTwoTerm {
            minus: shape.minus_one,
            zero: shape.zero,
            diff,
        })
    }

    /// The `(r, c)` entries lie in the right corners of the algebra.
    pub fn is_well_formed(&self, alg: &FiniteDimAlgebra) -> bool {
        self.diff.len() == self.zero.len()
            && self.diff.iter().enumerate().all(|(r, row)| {
                row.len() == self.minus.len()
                    && row.iter().enumerate().all(|(c, e)| {
                        e.len() == alg.dim()
                            && e.iter().enumerate().all(|(b, x)| {
                                x.is_zero()
                                    || (alg.basis()[b].start == self.zero[r]
                                        && alg.basis()[b].end == self.minus[c])
                            })
                    })
            })
    }

    /// No label occurs in both degrees.
    pub fn has_no_common_summand(&self) -> bool {
        self.minus.iter().all(|k| !self.zero.contains(k))
    }
}

/// Basis of `Hom(⊕ P_{src}, ⊕ P_{dst})`: one entry per `(r, c, b)` with `b`
/// a basis element of `e_{dst_r} Λ e_{src_c}`.
pub struct HomSpace {
    pub src: Vec<usize>,
    pub dst: Vec<usize>,
    basis: Vec<(usize, usize, usize)>,
    lookup: Vec<Vec<Vec<Option<usize>>>>,
}

impl HomSpace {
    pub fn new(alg: &FiniteDimAlgebra, src: &[usize], dst: &[usize]) -> Self {
        let mut basis = Vec::new();
        let mut lookup = vec![vec![vec![None; alg.dim()]; src.len()]; dst.len()];
        for (r, &y) in dst.iter().enumerate() {
            for (c, &x) in src.iter().enumerate() {
                for b in alg.corner(y, x) {
                    lookup[r][c][b] = Some(basis.len());
                    basis.push((r, c, b));
                }
            }
        }
        HomSpace {
            src: src.to_vec(),
            dst: dst.to_vec(),
            basis,
            lookup,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn element(&self, alg: &FiniteDimAlgebra, idx: usize) -> Mat {
        let mut m = vec![vec![zeros(alg.dim()); self.src.len()]; self.dst.len()];
        let (r, c, b) = self.basis[idx];
        m[r][c][b] = Q::from_integer(1.into());
        m
    }

    pub fn from_coords(&self, alg: &FiniteDimAlgebra, coords: &[Q]) -> Mat {
        let mut m = vec![vec![zeros(alg.dim()); self.src.len()]; self.dst.len()];
        for (x, &(r, c, b)) in coords.iter().zip(&self.basis) {
            m[r][c][b] = x.clone();
        }
        m
    }

    pub fn coords(&self, m: &Mat) -> Vec<Q> {
        let mut out = zeros(self.dim());
        for (r, row) in m.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                for (b, x) in e.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let idx = self.lookup[r][c][b].expect("entry lies in its corner");
                    out[idx] = x.clone();
                }
            }
        }
        out
    }
}

/// `g ∘ f` for `f: A → B` (`|B| × |A|`) and `g: B → C` (`|C| × |B|`).
pub fn compose(alg: &FiniteDimAlgebra, g: &Mat, f: &Mat, inner: usize, cols: usize) -> Mat {
    let mut out = vec![vec![zeros(alg.dim()); cols]; g.len()];
    for (r, grow) in g.iter().enumerate() {
        for (k, gk) in grow.iter().enumerate().take(inner) {
            if is_zero_vec(gk) {
                continue;
            }
            for (c, fkc) in f[k].iter().enumerate() {
                if is_zero_vec(fkc) {
                    continue;
                }
                let p = alg.mul(gk, fkc);
                for (acc, x) in out[r][c].iter_mut().zip(p) {
                    *acc += x;
                }
            }
        }
    }
    out
}

/// `Hom(X, Y[1]) = 0` in the homotopy category, i.e. every map
/// `X^{-1} → Y^0` has the form `h ∘ d_X + d_Y ∘ h'`.
pub fn homotopy_vanishes(alg: &FiniteDimAlgebra, x: &ConcreteTwoTerm, y: &ConcreteTwoTerm) -> bool {
    let target = HomSpace::new(alg, &x.minus, &y.zero);
    if target.dim() == 0 {
        return true;
    }
    let mut image = Echelon::new(target.dim());
    let h_space = HomSpace::new(alg, &x.zero, &y.zero);
    for idx in 0..h_space.dim() {
        let h = h_space.element(alg, idx);
        let hd = compose(alg, &h, &x.diff, x.zero.len(), x.minus.len());
        image.insert(target.coords(&hd));
    }
    let h2_space = HomSpace::new(alg, &x.minus, &y.minus);
    for idx in 0..h2_space.dim() {
        let h = h2_space.element(alg, idx);
        let dh = compose(alg, &y.diff, &h, y.minus.len(), x.minus.len());
        image.insert(target.coords(&dh));
    }
    image.dim() == target.dim()
}

/// `Hom(X, X[1]) = 0`.
pub fn is_presilting(alg: &FiniteDimAlgebra, x: &ConcreteTwoTerm) -> bool {
    homotopy_vanishes(alg, x, x)
}

/// Dimension of `End(X)` in the homotopy category and of its Jacobson
/// radical, computed with the trace form (characteristic zero).
pub fn endomorphism_dims(alg: &FiniteDimAlgebra, x: &ConcreteTwoTerm) -> (usize, usize) {
    let u_space = HomSpace::new(alg, &x.minus, &x.minus);
    let v_space = HomSpace::new(alg, &x.zero, &x.zero);
    let target = HomSpace::new(alg, &x.minus, &x.zero);
    let (du, dv) = (u_space.dim(), v_space.dim());
    let width = du + dv;

    // chain maps: v ∘ d − d ∘ u = 0
    let mut columns = Vec::with_capacity(width);
    for idx in 0..du {
        let u = u_space.element(alg, idx);
        let du_ = compose(alg, &x.diff, &u, x.minus.len(), x.minus.len());
        columns.push(
            target
                .coords(&du_)
                .into_iter()
                .map(|q| -q)
                .collect::<Vec<_>>(),
        );
    }
    for idx in 0..dv {
        let v = v_space.element(alg, idx);
        let vd = compose(alg, &v, &x.diff, x.zero.len(), x.minus.len());
        columns.push(target.coords(&vd));
    }
    let rows: Vec<Vec<Q>> = (0..target.dim())
        .map(|t| columns.iter().map(|col| col[t].clone()).collect())
        .collect();
    let chain = nullspace(&rows, width);

    // null-homotopic: (h ∘ d, d ∘ h) for h: X^0 → X^{-1}
    let h_space = HomSpace::new(alg, &x.zero, &x.minus);
    let mut null = Vec::new();
    for idx in 0..h_space.dim() {
        let h = h_space.element(alg, idx);
        let hd = compose(alg, &h, &x.diff, x.zero.len(), x.minus.len());
        let dh = compose(alg, &x.diff, &h, x.minus.len(), x.zero.len());
        let mut v = u_space.coords(&hd);
        v.extend(v_space.coords(&dh));
        null.push(v);
    }
    let quo = Quotient::new(width, &chain, &null);
    let e = quo.dim();
    if e == 0 {
        return (0, 0);
    }
    let split = |v: &[Q]| {
        (
            u_space.from_coords(alg, &v[..du]),
            v_space.from_coords(alg, &v[du..]),
        )
    };
    let reps: Vec<(Mat, Mat)> = quo.reps.iter().map(|r| split(r)).collect();
    // structure constants c[p][q] = coords(rep_p ∘ rep_q)
    let mut c = vec![vec![Vec::new(); e]; e];
    for p in 0..e {
        for q in 0..e {
            let uu = compose(alg, &reps[p].0, &reps[q].0, x.minus.len(), x.minus.len());
            let vv = compose(alg, &reps[p].1, &reps[q].1, x.zero.len(), x.zero.len());
            let mut v = u_space.coords(&uu);
            v.extend(v_space.coords(&vv));
            c[p][q] = quo.coords(&v);
        }
    }
    let tau: Vec<Q> = (0..e)
        .map(|t| (0..e).map(|s| c[t][s][s].clone()).sum())
        .collect();
    let form: Vec<Vec<Q>> = (0..e)
        .map(|p| {
            (0..e)
                .map(|q| c[p][q].iter().zip(&tau).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();
    let rad = e - rank(&form, e);
    (e, rad)
}

/// `End(X)` in the homotopy category is local.
pub fn is_local_endomorphism(alg: &FiniteDimAlgebra, x: &ConcreteTwoTerm) -> bool {
    let (e, rad) = endomorphism_dims(alg, x);
    e > 0 && e - rad == 1
}
