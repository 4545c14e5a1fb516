//! Structural checks on a presented algebra: the loop-free part of the quiver
//! is a double line, arrows generate their corners from both sides, and
//! shortest paths between vertices survive in the algebra.

use serde::Serialize;

use crate::linalg::{is_zero_vec, unit, Echelon};
use crate::oracle::algebra::FiniteDimAlgebra;
use crate::oracle::quiver::QuiverPresentation;

/// Arrow indices of a double line `1 ⇄ 2 ⇄ ⋯ ⇄ n`, ignoring loops.
#[derive(Clone, Debug)]
pub struct LineQuiver {
    /// `up[k-1]` is the arrow `k → k+1`.
    pub up: Vec<usize>,
    /// `down[k-1]` is the arrow `k+1 → k`.
    pub down: Vec<usize>,
}

impl LineQuiver {
    /// `None` unless the non-loop arrows are exactly one `k → k+1` and one
    /// `k+1 → k` for each `k`.
    pub fn detect(p: &QuiverPresentation) -> Option<Self> {
        let n = p.vertices;
        let mut up = vec![None; n.saturating_sub(1)];
        let mut down = vec![None; n.saturating_sub(1)];
        for (idx, a) in p.arrows.iter().enumerate() {
            if a.is_loop() {
                continue;
            }
            let slot = if a.target == a.source + 1 {
                &mut up[a.source - 1]
            } else if a.source == a.target + 1 {
                &mut down[a.target - 1]
            } else {
                return None;
            };
            if slot.replace(idx).is_some() {
                return None;
            }
        }
        Some(LineQuiver {
            up: up.into_iter().collect::<Option<Vec<_>>>()?,
            down: down.into_iter().collect::<Option<Vec<_>>>()?,
        })
    }

    /// The loop-free path from `a` to `b` (empty when `a == b`).
    pub fn shortest_path(&self, a: usize, b: usize) -> Vec<usize> {
        if a <= b {
            (a..b).map(|k| self.up[k - 1]).collect()
        } else {
            (b..a).rev().map(|k| self.down[k - 1]).collect()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub double_line: bool,
    pub corners_generated: bool,
    /// Not evaluated when the quiver is not a double line.
    pub shortest_paths_nonzero: Option<bool>,
}

impl ConditionReport {
    pub fn passes(&self) -> bool {
        self.double_line && self.corners_generated && self.shortest_paths_nonzero == Some(true)
    }
}

fn span_of(alg: &FiniteDimAlgebra, vs: impl IntoIterator<Item = Vec<crate::linalg::Q>>) -> Echelon {
    Echelon::from_rows(alg.dim(), vs)
}

pub fn check_condition(alg: &FiniteDimAlgebra) -> ConditionReport {
    let p = alg.presentation();
    let line = LineQuiver::detect(p);
    let corners_generated = p
        .arrows
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_loop())
        .all(|(idx, a)| {
            let (i, j) = (a.source, a.target);
            let x = alg.path_element(&[idx]);
            let corner = span_of(
                alg,
                alg.corner(i, j).into_iter().map(|b| unit(alg.dim(), b)),
            );
            let right = span_of(
                alg,
                alg.corner(j, j)
                    .into_iter()
                    .map(|b| alg.mul(&x, &unit(alg.dim(), b))),
            );
            let left = span_of(
                alg,
                alg.corner(i, i)
                    .into_iter()
                    .map(|b| alg.mul(&unit(alg.dim(), b), &x)),
            );
            corner.same_span(&right) && corner.same_span(&left)
        });
    let shortest_paths_nonzero = line.as_ref().map(|line| {
        let n = p.vertices;
        (1..=n).all(|a| {
            (1..=n).all(|b| a == b || !is_zero_vec(&alg.path_element(&line.shortest_path(a, b))))
        })
    });
    ConditionReport {
        double_line: line.is_some(),
        corners_generated,
        shortest_paths_nonzero,
    }
}

/// `e_i (rad Λ) x = x (rad Λ) e_j` for every non-loop arrow `x: i → j`.
pub fn radical_sides_agree(alg: &FiniteDimAlgebra) -> bool {
    let p = alg.presentation();
    let radical: Vec<usize> = (0..alg.dim())
        .filter(|&b| alg.basis()[b].degree > 0)
        .collect();
    p.arrows
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_loop())
        .all(|(idx, a)| {
            let x = alg.path_element(&[idx]);
            let left = span_of(
                alg,
                radical
                    .iter()
                    .filter(|&&b| {
                        alg.basis()[b].start == a.source && alg.basis()[b].end == a.source
                    })
                    .map(|&b| alg.mul(&unit(alg.dim(), b), &x)),
            );
            let right = span_of(
                alg,
                radical
                    .iter()
                    .filter(|&&b| {
                        alg.basis()[b].start == a.target && alg.basis()[b].end == a.target
                    })
                    .map(|&b| alg.mul(&x, &unit(alg.dim(), b))),
            );
            left.same_span(&right)
        })
}
