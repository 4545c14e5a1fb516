//! Right modules given by vertex-graded bases and arrow actions, built as
//! subquotients of indecomposable projectives.

use num_traits::Zero;

use crate::linalg::{is_zero_vec, nullspace, zeros, Echelon, Quotient, Q};
use crate::oracle::algebra::FiniteDimAlgebra;
use crate::oracle::complex::{ConcreteTwoTerm, Mat};

/// A finite dimensional right module.
///
/// Each basis vector lives at one vertex; `action[a]` has one row per basis
/// vector, holding the coordinates of `v · a`.
#[derive(Clone, Debug, PartialEq)]
pub struct RightModule {
    vertex_of: Vec<usize>,
    action: Vec<Vec<Vec<Q>>>,
}

/// Smallest right submodule of `Λ` (in algebra coordinates) containing `gens`.
pub fn submodule_closure(alg: &FiniteDimAlgebra, gens: &[Vec<Q>]) -> Echelon {
    let mut span = Echelon::new(alg.dim());
    let mut queue: Vec<Vec<Q>> = Vec::new();
    for g in gens {
        // split into vertex components so the span is graded by end vertex
        for j in 1..=alg.vertices() {
            let gj = alg.project_end(g, j);
            if span.insert(gj.clone()) {
                queue.push(gj);
            }
        }
    }
    while let Some(v) = queue.pop() {
        for a in 0..alg.presentation().arrows.len() {
            let w = alg.mul_arrow(&v, a);
            if span.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    span
}

impl RightModule {
    pub fn zero(alg: &FiniteDimAlgebra) -> Self {
        RightModule {
            vertex_of: Vec::new(),
            action: vec![Vec::new(); alg.presentation().arrows.len()],
        }
    }

    /// `Z / B` for right submodules `B ⊆ Z` of `Λ`, each given by generators.
    pub fn subquotient(alg: &FiniteDimAlgebra, z_gens: &[Vec<Q>], b_gens: &[Vec<Q>]) -> Self {
        let z = submodule_closure(alg, z_gens);
        let b = submodule_closure(alg, b_gens);
        debug_assert!(z.contains_all(&b));
        let width = alg.dim();
        let mut vertex_of = Vec::new();
        let mut reps = Vec::new();
        let mut quotients = Vec::new();
        let mut offsets = Vec::new();
        for j in 1..=alg.vertices() {
            let zj: Vec<Vec<Q>> = z.rows().iter().map(|r| alg.project_end(r, j)).collect();
            let bj: Vec<Vec<Q>> = b.rows().iter().map(|r| alg.project_end(r, j)).collect();
            let quo = Quotient::new(width, &zj, &bj);
            offsets.push(reps.len());
            for r in &quo.reps {
                vertex_of.push(j);
                reps.push(r.clone());
            }
            quotients.push(quo);
        }
        let dim = reps.len();
        let arrows = &alg.presentation().arrows;
        let mut action = vec![vec![zeros(dim); dim]; arrows.len()];
        for (a, arrow) in arrows.iter().enumerate() {
            for (idx, r) in reps.iter().enumerate() {
                if vertex_of[idx] != arrow.source {
                    continue;
                }
                let img = alg.mul_arrow(r, a);
                let k = arrow.target;
                let coords = quotients[k - 1].coords(&img);
                for (c, x) in coords.into_iter().enumerate() {
                    action[a][idx][offsets[k - 1] + c] = x;
                }
            }
        }
        RightModule { vertex_of, action }
    }

    /// The indecomposable projective `P_i = e_i Λ`.
    pub fn projective(alg: &FiniteDimAlgebra, i: usize) -> Self {
        RightModule::subquotient(alg, &[alg.idempotent(i)], &[])
    }

    /// `e_i Λ / e_i Λ (1 − Σ_{k∈keep} e_k) Λ`.
    pub fn cyclic_quotient(alg: &FiniteDimAlgebra, i: usize, keep: &[usize]) -> Self {
        let killed: Vec<Vec<Q>> = alg
            .row(i)
            .into_iter()
            .filter(|&b| !keep.contains(&alg.basis()[b].end))
            .map(|b| crate::linalg::unit(alg.dim(), b))
            .collect();
        RightModule::subquotient(alg, &[alg.idempotent(i)], &killed)
    }

    pub fn direct_sum(alg: &FiniteDimAlgebra, parts: &[RightModule]) -> Self {
        let dim: usize = parts.iter().map(|m| m.dim()).sum();
        let mut vertex_of = Vec::with_capacity(dim);
        let mut action = vec![vec![zeros(dim); dim]; alg.presentation().arrows.len()];
        let mut off = 0;
        for m in parts {
            vertex_of.extend(&m.vertex_of);
            for (a, mat) in m.action.iter().enumerate() {
                for (r, row) in mat.iter().enumerate() {
                    for (c, x) in row.iter().enumerate() {
                        action[a][off + r][off + c] = x.clone();
                    }
                }
            }
            off += m.dim();
        }
        RightModule { vertex_of, action }
    }

    pub fn dim(&self) -> usize {
        self.vertex_of.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vertex_of.is_empty()
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.vertex_of.iter().filter(|&&x| x == v).count()
    }

    pub fn vertex_of(&self) -> &[usize] {
        &self.vertex_of
    }

    /// Vertices `v` with `M e_v ≠ 0`, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.vertex_of.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn act_arrow(&self, v: &[Q], a: usize) -> Vec<Q> {
        let mut out = zeros(self.dim());
        for (r, x) in v.iter().enumerate() {
            if !x.is_zero() {
                crate::linalg::axpy(&mut out, x, &self.action[a][r]);
            }
        }
        out
    }

    /// `v · λ` for the basis element `λ = b` of the algebra.
    pub fn act_basis(&self, alg: &FiniteDimAlgebra, v: &[Q], b: usize) -> Vec<Q> {
        let el = &alg.basis()[b];
        let mut cur: Vec<Q> = v
            .iter()
            .enumerate()
            .map(|(r, x)| {
                if self.vertex_of[r] == el.start {
                    x.clone()
                } else {
                    Q::zero()
                }
            })
            .collect();
        for &a in &el.path {
            cur = self.act_arrow(&cur, a);
        }
        cur
    }

    /// Every relation of the presentation acts as zero.
    pub fn respects_relations(&self, alg: &FiniteDimAlgebra) -> bool {
        let dim = self.dim();
        alg.presentation().relations.iter().all(|rel| {
            (0..dim).all(|r| {
                let mut acc = zeros(dim);
                for (c, path) in &rel.terms {
                    let mut cur = crate::linalg::unit(dim, r);
                    for &a in path {
                        cur = self.act_arrow(&cur, a);
                    }
                    crate::linalg::axpy(&mut acc, c, &cur);
                }
                is_zero_vec(&acc)
            })
        })
    }

    /// Basis of the radical `Σ_a M·a`.
    fn radical(&self) -> Echelon {
        let mut e = Echelon::new(self.dim());
        for mat in &self.action {
            for row in mat {
                e.insert(row.clone());
            }
        }
        e
    }

    /// Vertices of the top `M / rad M`, with multiplicity, plus a lift of
    /// each top basis vector.
    fn top_generators(&self) -> Vec<(usize, Vec<Q>)> {
        let mut span = self.radical();
        let mut gens = Vec::new();
        for (r, &v) in self.vertex_of.iter().enumerate() {
            let u = crate::linalg::unit(self.dim(), r);
            if span.insert(u.clone()) {
                gens.push((v, u));
            }
        }
        gens
    }

    /// Minimal projective presentation `P_1 → P_0 → M → 0`.
    pub fn minimal_presentation(&self, alg: &FiniteDimAlgebra) -> ConcreteTwoTerm {
        let gens = self.top_generators();
        let cover = FreeCoords::new(alg, gens.iter().map(|(v, _)| *v).collect());
        // columns: images of the free basis in M
        let images: Vec<Vec<Q>> = cover
            .index
            .iter()
            .map(|&(k, b)| self.act_basis(alg, &gens[k].1, b))
            .collect();
        let rows: Vec<Vec<Q>> = (0..self.dim())
            .map(|r| images.iter().map(|col| col[r].clone()).collect())
            .collect();
        let kernel = nullspace(&rows, cover.len());

        let mut rad = Echelon::new(cover.len());
        for x in &kernel {
            for a in 0..alg.presentation().arrows.len() {
                rad.insert(cover.mul_arrow(alg, x, a));
            }
        }
        let mut minus = Vec::new();
        let mut columns: Vec<Vec<Q>> = Vec::new();
        for j in 1..=alg.vertices() {
            for x in &kernel {
                let xj = cover.project_end(alg, x, j);
                if rad.insert(xj.clone()) {
                    minus.push(j);
                    columns.push(xj);
                }
            }
        }
        let zero = cover.summands.clone();
        let diff: Mat = (0..zero.len())
            .map(|k| columns.iter().map(|g| cover.block(alg, g, k)).collect())
            .collect();
        ConcreteTwoTerm::new(minus, zero, diff)
    }
}

/// Coordinates on a free module `⊕_k e_{v_k} Λ`.
struct FreeCoords {
    summands: Vec<usize>,
    index: Vec<(usize, usize)>,
    local: Vec<Vec<Option<usize>>>,
}

impl FreeCoords {
    fn new(alg: &FiniteDimAlgebra, summands: Vec<usize>) -> Self {
        let mut index = Vec::new();
        let mut local = Vec::new();
        for (k, &v) in summands.iter().enumerate() {
            let mut map = vec![None; alg.dim()];
            for b in alg.row(v) {
                map[b] = Some(index.len());
                index.push((k, b));
            }
            local.push(map);
        }
        FreeCoords {
            summands,
            index,
            local,
        }
    }

    fn len(&self) -> usize {
        self.index.len()
    }

    /// Component in summand `k` as an algebra element.
    fn block(&self, alg: &FiniteDimAlgebra, x: &[Q], k: usize) -> Vec<Q> {
        let mut out = zeros(alg.dim());
        for (pos, &(kk, b)) in self.index.iter().enumerate() {
            if kk == k {
                out[b] = x[pos].clone();
            }
        }
        out
    }

    fn join_blocks(&self, blocks: &[Vec<Q>]) -> Vec<Q> {
        let mut out = zeros(self.len());
        for (k, blk) in blocks.iter().enumerate() {
            for (b, x) in blk.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let pos = self.local[k][b].expect("element lies in the summand");
                out[pos] = x.clone();
            }
        }
        out
    }

    fn mul_arrow(&self, alg: &FiniteDimAlgebra, x: &[Q], a: usize) -> Vec<Q> {
        let blocks: Vec<Vec<Q>> = (0..self.summands.len())
            .map(|k| alg.mul_arrow(&self.block(alg, x, k), a))
            .collect();
        self.join_blocks(&blocks)
    }

    fn project_end(&self, alg: &FiniteDimAlgebra, x: &[Q], j: usize) -> Vec<Q> {
        x.iter()
            .zip(&self.index)
            .map(|(c, &(_, b))| {
                if alg.basis()[b].end == j {
                    c.clone()
                } else {
                    Q::zero()
                }
            })
            .collect()
    }
}
