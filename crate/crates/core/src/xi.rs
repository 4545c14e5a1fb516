//! Index sets labelling the indecomposable two-term presilting complexes of a
//! rank-`n` algebra whose loop-free quiver is the double line `1 ⇄ 2 ⇄ ⋯ ⇄ n`,
//! together with the combinatorial test for `Hom(X_i, X_j[1]) = 0`.
//!
//! An index `i = {i_0 < i_1 < ⋯ < i_{2m}} ⊆ {0, …, n+1}` describes the complex
//! with `P_{i_0} ⊕ P_{i_2} ⊕ ⋯` in degree −1, `P_{i_1} ⊕ P_{i_3} ⊕ ⋯` in
//! degree 0, and differential built from shortest paths between neighbouring
//! labels. The labels `0` and `n+1` stand for the zero projective.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct XiIndex {
    rank: usize,
    entries: Vec<usize>,
}

impl XiIndex {
    pub fn new(rank: usize, entries: Vec<usize>) -> Result<Self> {
        let bad = || Error::InvalidXiIndex {
            entries: entries.clone(),
            rank,
        };
        if rank == 0
            || entries.len().is_multiple_of(2)
            || entries.windows(2).any(|w| w[0] >= w[1])
            || entries.iter().any(|&x| x > rank + 1)
            || entries == [0]
            || entries == [rank + 1]
        {
            return Err(bad());
        }
        Ok(XiIndex { rank, entries })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `m` for an index of cardinality `2m + 1`.
    pub fn m(&self) -> usize {
        (self.entries.len() - 1) / 2
    }

    /// The shifted projective `P_k[1]`.
    pub fn shifted_projective(rank: usize, k: usize) -> Result<Self> {
        XiIndex::new(rank, vec![k])
    }

    /// The stalk projective `P_k` in degree 0.
    pub fn projective(rank: usize, k: usize) -> Result<Self> {
        XiIndex::new(rank, vec![0, k, rank + 1])
    }

    /// Entry at position `k`, with the boundary conventions
    /// `i_{-1} = -1`, `i_{≤-2} = -2`, `i_{2m+1} = n+2`, `i_{≥2m+2} = n+3`.
    pub fn at(&self, k: i64) -> i64 {
        let len = self.entries.len() as i64;
        let n = self.rank as i64;
        match k {
            k if k <= -2 => -2,
            -1 => -1,
            k if k < len => self.entries[k as usize] as i64,
            k if k == len => n + 2,
            _ => n + 3,
        }
    }

    /// Relabelling `k ↦ n+1-k`.
    pub fn mirrored(&self) -> XiIndex {
        let n1 = self.rank + 1;
        XiIndex {
            rank: self.rank,
            entries: self.entries.iter().rev().map(|&x| n1 - x).collect(),
        }
    }

    pub fn shape(&self) -> TwoTermShape {
        let real = |x: &usize| *x >= 1 && *x <= self.rank;
        let minus_one: Vec<usize> = self
            .entries
            .iter()
            .step_by(2)
            .copied()
            .filter(real)
            .collect();
        let zero: Vec<usize> = self
            .entries
            .iter()
            .skip(1)
            .step_by(2)
            .copied()
            .filter(real)
            .collect();
        let mut arrows = Vec::new();
        for (p, &src) in self.entries.iter().enumerate().step_by(2) {
            if !real(&src) {
                continue;
            }
            for q in [p.wrapping_sub(1), p + 1] {
                if let Some(&dst) = self.entries.get(q) {
                    if real(&dst) {
                        arrows.push((src, dst));
                    }
                }
            }
        }
        TwoTermShape {
            rank: self.rank,
            minus_one,
            zero,
            differential: arrows,
        }
    }

    pub fn g_vector(&self) -> GVector {
        let mut coords = vec![0i64; self.rank];
        for (p, &x) in self.entries.iter().enumerate() {
            if x >= 1 && x <= self.rank {
                coords[x - 1] += if p % 2 == 1 { 1 } else { -1 };
            }
        }
        GVector { coords }
    }
}

impl fmt::Display for XiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// All odd subsets of `{0, …, n+1}` other than `{0}` and `{n+1}`, in
/// lexicographic order of their entry lists.
pub fn enumerate_xi(n: usize) -> Result<Vec<XiIndex>> {
    if n == 0 {
        return Err(Error::InvalidRank(n));
    }
    if n > 24 {
        return Err(Error::BudgetExceeded {
            what: "index enumeration",
            requested: n,
            limit: 24,
        });
    }
    let top = n + 1;
    let mut out = Vec::with_capacity((1usize << (n + 1)) - 2);
    for mask in 1u32..(1u32 << (top + 1)) {
        if mask.count_ones() % 2 == 0 {
            continue;
        }
        let entries: Vec<usize> = (0..=top).filter(|&b| mask & (1 << b) != 0).collect();
        if entries == [0] || entries == [top] {
            continue;
        }
        out.push(XiIndex { rank: n, entries });
    }
    out.sort();
    Ok(out)
}

/// Degree pattern of a complex `X_i` with zero projectives removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoTermShape {
    pub rank: usize,
    pub minus_one: Vec<usize>,
    pub zero: Vec<usize>,
    /// Nonzero differential components `(source label, target label)`,
    /// each carried by the shortest path map `P_source → P_target`.
    pub differential: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GVector {
    pub coords: Vec<i64>,
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Which pairs of summands a set of sequences is built for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Pairs with `0 < i_{2t} < j_{2s+1} < n+1`.
    Forward,
    /// Pairs with `n+1 > i_{2t} > j_{2s-1} > 0`.
    Mirrored,
}

/// The four monotone sequences attached to a pair `(t, s)`.
///
/// `t_plus[r]` is `t_r` for `r ≥ 0` and `t_minus[r]` is `t_{-r}`; both start
/// at `t_0 = t`, likewise for `s`. Each sequence is stored until it reaches
/// its terminal value, after which it is constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigiditySequences {
    pub direction: Direction,
    pub t_plus: Vec<i64>,
    pub s_plus: Vec<i64>,
    pub t_minus: Vec<i64>,
    pub s_minus: Vec<i64>,
}

impl RigiditySequences {
    /// `t_r` for any integer `r`, extending constantly past the stored range.
    pub fn t(&self, r: i64) -> i64 {
        pick(&self.t_plus, &self.t_minus, r)
    }

    pub fn s(&self, r: i64) -> i64 {
        pick(&self.s_plus, &self.s_minus, r)
    }

    pub fn plus_len(&self) -> i64 {
        self.t_plus.len() as i64
    }

    pub fn minus_len(&self) -> i64 {
        self.t_minus.len() as i64
    }
}

fn pick(plus: &[i64], minus: &[i64], r: i64) -> i64 {
    if r >= 0 {
        let r = r as usize;
        *plus.get(r).unwrap_or_else(|| plus.last().unwrap())
    } else {
        let r = (-r) as usize;
        *minus.get(r).unwrap_or_else(|| minus.last().unwrap())
    }
}

fn step_cap(i: &XiIndex, j: &XiIndex) -> usize {
    2 * (i.m() + j.m() + 4)
}

fn max_below<F: Fn(i64) -> bool>(hi: i64, lo: i64, pred: F) -> Option<i64> {
    (lo..=hi).rev().find(|&x| pred(x))
}

fn min_above<F: Fn(i64) -> bool>(lo: i64, hi: i64, pred: F) -> Option<i64> {
    (lo..=hi).find(|&x| pred(x))
}

fn inconsistent(what: &str) -> Error {
    Error::Inconsistent(format!(
        "rigidity sequence rule has no applicable case: {what}"
    ))
}

/// Builds the sequences for the pair `(t, s)`.
pub fn build_sequences(
    i: &XiIndex,
    j: &XiIndex,
    t: usize,
    s: usize,
    direction: Direction,
) -> Result<RigiditySequences> {
    if i.rank != j.rank {
        return Err(Error::RankMismatch {
            left: i.rank,
            right: j.rank,
        });
    }
    let n1 = i.rank as i64 + 1;
    let (ti, si) = (t as i64, s as i64);
    let ok = match direction {
        Direction::Forward => {
            let (a, b) = (i.at(2 * ti), j.at(2 * si + 1));
            ti <= i.m() as i64 && si <= j.m() as i64 && 0 < a && a < b && b < n1
        }
        Direction::Mirrored => {
            let (a, b) = (i.at(2 * ti), j.at(2 * si - 1));
            ti <= i.m() as i64 && si >= 1 && si <= j.m() as i64 && n1 > a && a > b && b > 0
        }
    };
    if !ok {
        return Err(Error::SequencePrecondition { t, s });
    }
    match direction {
        Direction::Forward => forward_sequences(i, j, ti, si),
        Direction::Mirrored => mirrored_sequences(i, j, ti, si),
    }
}

fn forward_sequences(i: &XiIndex, j: &XiIndex, t: i64, s: i64) -> Result<RigiditySequences> {
    let (mi, mj) = (i.m() as i64, j.m() as i64);
    let cap = step_cap(i, j);

    let (mut tp, mut sp) = (vec![t], vec![s]);
    while !(tp.last() == Some(&(mi + 2)) && sp.last() == Some(&(mj + 1))) {
        if tp.len() > cap {
            return Err(Error::SequenceDiverged { cap });
        }
        let (tprev, sprev) = (*tp.last().unwrap(), *sp.last().unwrap());
        let tr = if sprev < mj {
            let target = j.at(2 * sprev + 1);
            max_below(mi + 1, -1, |x| i.at(2 * x - 2) < target)
                .ok_or_else(|| inconsistent("(i)"))?
        } else if tprev <= mi {
            mi + 1
        } else {
            mi + 2
        };
        let sr = if tr <= mi {
            let target = i.at(2 * tr);
            max_below(mj, -1, |x| j.at(2 * x - 1) < target).ok_or_else(|| inconsistent("(ii)"))?
        } else if sprev < mj && tr == mi + 1 {
            mj
        } else if sprev >= mj {
            mj + 1
        } else {
            return Err(inconsistent("(ii) fallthrough"));
        };
        tp.push(tr);
        sp.push(sr);
    }

    let (mut tm, mut sm) = (vec![t], vec![s]);
    while !(tm.last() == Some(&-2) && sm.last() == Some(&-2)) {
        if tm.len() > cap {
            return Err(Error::SequenceDiverged { cap });
        }
        let (tnext, snext) = (*tm.last().unwrap(), *sm.last().unwrap());
        let sr = if tnext >= 0 {
            let target = i.at(2 * tnext);
            min_above(-1, mj + 1, |x| j.at(2 * x + 3) > target)
                .ok_or_else(|| inconsistent("(iii)"))?
        } else if snext >= 0 {
            -1
        } else {
            -2
        };
        let tr = if sr >= 0 {
            let target = j.at(2 * sr + 1);
            min_above(-1, mi + 1, |x| i.at(2 * x + 2) > target)
                .ok_or_else(|| inconsistent("(iv)"))?
        } else if sr == -1 && tnext >= 0 {
            -1
        } else if tnext <= -1 {
            -2
        } else {
            return Err(inconsistent("(iv) fallthrough"));
        };
        tm.push(tr);
        sm.push(sr);
    }

    Ok(RigiditySequences {
        direction: Direction::Forward,
        t_plus: tp,
        s_plus: sp,
        t_minus: tm,
        s_minus: sm,
    })
}

fn mirrored_sequences(i: &XiIndex, j: &XiIndex, t: i64, s: i64) -> Result<RigiditySequences> {
    let (mi, mj) = (i.m() as i64, j.m() as i64);
    let cap = step_cap(i, j);

    // Decreasing branch, rules (i) and (ii).
    let (mut tp, mut sp) = (vec![t], vec![s]);
    while !(tp.last() == Some(&-2) && sp.last() == Some(&-1)) {
        if tp.len() > cap {
            return Err(Error::SequenceDiverged { cap });
        }
        let (tprev, sprev) = (*tp.last().unwrap(), *sp.last().unwrap());
        let tr = if sprev >= 1 {
            let target = j.at(2 * sprev - 1);
            min_above(-1, mi + 1, |x| i.at(2 * x + 2) > target)
                .ok_or_else(|| inconsistent("mirrored (i)"))?
        } else if tprev >= 0 {
            -1
        } else {
            -2
        };
        let sr = if tr >= 0 {
            let target = i.at(2 * tr);
            min_above(0, mj + 1, |x| j.at(2 * x + 1) > target)
                .ok_or_else(|| inconsistent("mirrored (ii)"))?
        } else if tr == -1 && sprev >= 1 {
            0
        } else if sprev <= 0 {
            -1
        } else {
            return Err(inconsistent("mirrored (ii) fallthrough"));
        };
        tp.push(tr);
        sp.push(sr);
    }

    // Increasing branch, rules (iii) and (iv).
    let (mut tm, mut sm) = (vec![t], vec![s]);
    while !(tm.last() == Some(&(mi + 2)) && sm.last() == Some(&(mj + 2))) {
        if tm.len() > cap {
            return Err(Error::SequenceDiverged { cap });
        }
        let (tnext, snext) = (*tm.last().unwrap(), *sm.last().unwrap());
        let sr = if tnext <= mi {
            let target = i.at(2 * tnext);
            max_below(mj + 1, -1, |x| j.at(2 * x - 3) < target)
                .ok_or_else(|| inconsistent("mirrored (iii)"))?
        } else if tnext == mi + 1 && snext <= mj {
            mj + 1
        } else if snext > mj {
            mj + 2
        } else {
            return Err(inconsistent("mirrored (iii) fallthrough"));
        };
        let tr = if sr <= mj {
            let target = j.at(2 * sr - 1);
            max_below(mi + 1, -1, |x| i.at(2 * x - 2) < target)
                .ok_or_else(|| inconsistent("mirrored (iv)"))?
        } else if tnext <= mi {
            mi + 1
        } else {
            mi + 2
        };
        tm.push(tr);
        sm.push(sr);
    }

    Ok(RigiditySequences {
        direction: Direction::Mirrored,
        t_plus: tp,
        s_plus: sp,
        t_minus: tm,
        s_minus: sm,
    })
}

/// Knobs for evaluating the criterion; the defaults are the real criterion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CriterionOptions {
    /// Evaluate mirrored pairs with the direct mirrored rules instead of
    /// relabelling `k ↦ n+1-k` and reusing the forward rules.
    pub direct_mirror: bool,
    /// Flip the upper inequality of condition (1)(a). Only for exercising the
    /// oracle comparison; never set in real runs.
    pub sabotage: bool,
}

/// Condition (1): the chain of inequalities along the increasing branch.
pub fn condition1_holds(i: &XiIndex, j: &XiIndex, seq: &RigiditySequences) -> bool {
    condition1_with(i, j, seq, false)
}

/// Condition (2): the chain of inequalities along the decreasing branch.
pub fn condition2_holds(i: &XiIndex, j: &XiIndex, seq: &RigiditySequences) -> bool {
    match seq.direction {
        Direction::Forward => forward_condition2(i, j, seq),
        Direction::Mirrored => mirrored_condition2(i, j, seq),
    }
}

fn condition1_with(i: &XiIndex, j: &XiIndex, seq: &RigiditySequences, sabotage: bool) -> bool {
    match seq.direction {
        Direction::Forward => forward_condition1(i, j, seq, sabotage),
        Direction::Mirrored => mirrored_condition1(i, j, seq),
    }
}

fn forward_condition1(i: &XiIndex, j: &XiIndex, q: &RigiditySequences, sabotage: bool) -> bool {
    let (mi, mj) = (i.m() as i64, j.m() as i64);
    let last = q.plus_len();
    for r in 0..last {
        let (t, s) = (q.t(r), q.s(r));
        // (a)
        if t <= mi {
            let upper = if sabotage {
                i.at(2 * t + 1) > j.at(2 * s + 1)
            } else {
                i.at(2 * t + 1) <= j.at(2 * s + 1)
            };
            if !(i.at(2 * t) < i.at(2 * t + 1) && upper) {
                return false;
            }
        }
        if r == 0 {
            continue;
        }
        let sp = q.s(r - 1);
        // (b)
        if t <= mi + 1
            && !(i.at(2 * t - 2) < i.at(2 * t - 1) && i.at(2 * t - 1) <= j.at(2 * sp + 1))
        {
            return false;
        }
        if s <= mj {
            // (c)
            if !(j.at(2 * sp + 1) < j.at(2 * sp + 2) && j.at(2 * sp + 2) <= i.at(2 * t)) {
                return false;
            }
            // (d)
            if !(j.at(2 * s - 1) < j.at(2 * s) && j.at(2 * s) <= i.at(2 * t)) {
                return false;
            }
        }
    }
    true
}

fn forward_condition2(i: &XiIndex, j: &XiIndex, q: &RigiditySequences) -> bool {
    let last = q.minus_len();
    for k in 0..last {
        let r = -k;
        let (t, s) = (q.t(r), q.s(r));
        // (a')
        if s >= 0 && !(j.at(2 * s + 1) > j.at(2 * s) && j.at(2 * s) >= i.at(2 * t)) {
            return false;
        }
        if r == 0 {
            continue;
        }
        let tn = q.t(r + 1);
        // (b')
        if s >= -1 && !(j.at(2 * s + 3) > j.at(2 * s + 2) && j.at(2 * s + 2) >= i.at(2 * tn)) {
            return false;
        }
        if t >= -1 {
            // (c')
            if !(i.at(2 * tn) > i.at(2 * tn - 1) && i.at(2 * tn - 1) >= j.at(2 * s + 1)) {
                return false;
            }
            // (d')
            if !(i.at(2 * t + 2) > i.at(2 * t + 1) && i.at(2 * t + 1) >= j.at(2 * s + 1)) {
                return false;
            }
        }
    }
    true
}

fn mirrored_condition1(i: &XiIndex, j: &XiIndex, q: &RigiditySequences) -> bool {
    let last = q.plus_len();
    for r in 0..last {
        let (t, s) = (q.t(r), q.s(r));
        // (d)
        if t >= 0 && !(i.at(2 * t) > i.at(2 * t - 1) && i.at(2 * t - 1) >= j.at(2 * s - 1)) {
            return false;
        }
        if r == 0 {
            continue;
        }
        let sp = q.s(r - 1);
        // (a)
        if t >= -1 && !(i.at(2 * t + 2) > i.at(2 * t + 1) && i.at(2 * t + 1) >= j.at(2 * sp - 1)) {
            return false;
        }
        if s >= 0 {
            // (b)
            if !(j.at(2 * sp - 1) > j.at(2 * sp - 2) && j.at(2 * sp - 2) >= i.at(2 * t)) {
                return false;
            }
            // (c)
            if !(j.at(2 * s + 1) > j.at(2 * s) && j.at(2 * s) >= i.at(2 * t)) {
                return false;
            }
        }
    }
    true
}

fn mirrored_condition2(i: &XiIndex, j: &XiIndex, q: &RigiditySequences) -> bool {
    let (mi, mj) = (i.m() as i64, j.m() as i64);
    let last = q.minus_len();
    for k in 0..last {
        let r = -k;
        if r == 0 {
            continue;
        }
        let (t, s) = (q.t(r), q.s(r));
        // (d')
        if s <= mj && !(j.at(2 * s - 1) < j.at(2 * s) && j.at(2 * s) <= i.at(2 * t)) {
            return false;
        }
        let tn = q.t(r + 1);
        // (a')
        if s <= mj + 1 && !(j.at(2 * s - 3) < j.at(2 * s - 2) && j.at(2 * s - 2) <= i.at(2 * tn)) {
            return false;
        }
        if t <= mi + 1 {
            // (b')
            if !(i.at(2 * tn) < i.at(2 * tn + 1) && i.at(2 * tn + 1) <= j.at(2 * s - 1)) {
                return false;
            }
            // (c')
            if !(i.at(2 * t - 2) < i.at(2 * t - 1) && i.at(2 * t - 1) <= j.at(2 * s - 1)) {
                return false;
            }
        }
    }
    true
}

/// Shared label between an even position of `i` and an odd position of `j`.
fn degenerate(i: &XiIndex, j: &XiIndex) -> bool {
    let n = i.rank;
    i.entries
        .iter()
        .step_by(2)
        .any(|&a| a >= 1 && a <= n && j.entries.iter().skip(1).step_by(2).any(|&b| b == a))
}

fn forward_pairs(i: &XiIndex, j: &XiIndex) -> Vec<(usize, usize)> {
    let n1 = i.rank + 1;
    let mut out = Vec::new();
    for t in 0..=i.m() {
        for s in 0..j.m() {
            let (a, b) = (i.entries[2 * t], j.entries[2 * s + 1]);
            if 0 < a && a < b && b < n1 {
                out.push((t, s));
            }
        }
    }
    out
}

fn mirrored_pairs(i: &XiIndex, j: &XiIndex) -> Vec<(usize, usize)> {
    let n1 = i.rank + 1;
    let mut out = Vec::new();
    for t in 0..=i.m() {
        for s in 1..=j.m() {
            let (a, b) = (i.entries[2 * t], j.entries[2 * s - 1]);
            if n1 > a && a > b && b > 0 {
                out.push((t, s));
            }
        }
    }
    out
}

fn forward_part(i: &XiIndex, j: &XiIndex, sabotage: bool) -> Result<bool> {
    for (t, s) in forward_pairs(i, j) {
        let seq = build_sequences(i, j, t, s, Direction::Forward)?;
        if !(condition1_with(i, j, &seq, sabotage) || forward_condition2(i, j, &seq)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Hom(X_i, X_j[1]) = 0`, decided combinatorially.
pub fn hom_vanishes(i: &XiIndex, j: &XiIndex) -> Result<bool> {
    hom_vanishes_with(i, j, CriterionOptions::default())
}

pub fn hom_vanishes_with(i: &XiIndex, j: &XiIndex, opts: CriterionOptions) -> Result<bool> {
    if i.rank != j.rank {
        return Err(Error::RankMismatch {
            left: i.rank,
            right: j.rank,
        });
    }
    if degenerate(i, j) {
        return Ok(false);
    }
    if !forward_part(i, j, opts.sabotage)? {
        return Ok(false);
    }
    if opts.direct_mirror {
        for (t, s) in mirrored_pairs(i, j) {
            let seq = build_sequences(i, j, t, s, Direction::Mirrored)?;
            if !(mirrored_condition1(i, j, &seq) || mirrored_condition2(i, j, &seq)) {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        forward_part(&i.mirrored(), &j.mirrored(), opts.sabotage)
    }
}

/// Mutual vanishing of `Hom(X_i, X_j[1])` and `Hom(X_j, X_i[1])`.
pub fn compatible(i: &XiIndex, j: &XiIndex) -> Result<bool> {
    Ok(hom_vanishes(i, j)? && hom_vanishes(j, i)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(n: usize, e: &[usize]) -> XiIndex {
        XiIndex::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_small_ranks() {
        let two: Vec<Vec<usize>> = enumerate_xi(2)
            .unwrap()
            .into_iter()
            .map(|x| x.entries)
            .collect();
        assert_eq!(
            two,
            vec![
                vec![0, 1, 2],
                vec![0, 1, 3],
                vec![0, 2, 3],
                vec![1],
                vec![1, 2, 3],
                vec![2]
            ]
        );
        assert_eq!(enumerate_xi(1).unwrap().len(), 2);
        assert_eq!(enumerate_xi(4).unwrap().len(), 30);
        assert!(enumerate_xi(0).is_err());
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(XiIndex::new(2, vec![0]).is_err());
        assert!(XiIndex::new(2, vec![3]).is_err());
        assert!(XiIndex::new(2, vec![1, 2]).is_err());
        assert!(XiIndex::new(2, vec![2, 1, 3]).is_err());
        assert!(XiIndex::new(2, vec![0, 1, 4]).is_err());
    }

    #[test]
    fn shapes_and_g_vectors() {
        let p1 = xi(3, &[2]).shape();
        assert_eq!((p1.minus_one, p1.zero), (vec![2], vec![]));
        let proj = xi(3, &[0, 2, 4]).shape();
        assert_eq!((proj.minus_one, proj.zero), (vec![], vec![2]));
        let x1 = xi(2, &[0, 1, 2]).shape();
        assert_eq!((x1.minus_one, x1.zero.clone()), (vec![2], vec![1]));
        assert_eq!(x1.differential, vec![(2, 1)]);

        assert_eq!(xi(3, &[2]).g_vector().coords, vec![0, -1, 0]);
        assert_eq!(xi(3, &[0, 2, 4]).g_vector().coords, vec![0, 1, 0]);
        assert_eq!(xi(2, &[0, 1, 2]).g_vector().coords, vec![1, -1]);
    }

    #[test]
    fn sentinels() {
        let i = xi(2, &[1]);
        assert_eq!(i.at(-1), -1);
        assert_eq!(i.at(-2), -2);
        assert_eq!(i.at(-5), -2);
        assert_eq!(i.at(0), 1);
        assert_eq!(i.at(1), 4);
        assert_eq!(i.at(2), 5);
        assert_eq!(i.at(7), 5);
    }

    #[test]
    fn hand_traced_sequences() {
        let i = xi(2, &[1]);
        let j = xi(2, &[1, 2, 3]);
        let seq = build_sequences(&i, &j, 0, 0, Direction::Forward).unwrap();
        assert_eq!(seq.t(1), 1);
        assert_eq!(seq.s(1), 1);
        assert_eq!(seq.s(-1), -1);
        assert_eq!(seq.t(-1), -1);
        assert!(!condition1_holds(&i, &j, &seq));
        assert!(condition2_holds(&i, &j, &seq));
    }

    #[test]
    fn sequence_preconditions() {
        let i = xi(2, &[0, 1, 2]);
        let j = xi(2, &[2]);
        assert!(forward_pairs(&i, &j).is_empty());
        assert!(mirrored_pairs(&i, &j).is_empty());
        assert!(build_sequences(&i, &j, 0, 0, Direction::Forward).is_err());
        assert!(build_sequences(&xi(3, &[1]), &j, 0, 0, Direction::Forward).is_err());
    }

    #[test]
    fn hom_vanishing_examples() {
        let x1 = xi(2, &[0, 1, 2]);
        let p2_shift = xi(2, &[2]);
        let p2 = xi(2, &[0, 2, 3]);
        assert!(hom_vanishes(&x1, &p2_shift).unwrap());
        assert!(hom_vanishes(&p2_shift, &x1).unwrap());
        assert!(!hom_vanishes(&x1, &p2).unwrap());
        // Hom(P, X[1]) is the first cohomology of X, which is zero.
        for a in enumerate_xi(3).unwrap() {
            for k in 1..=3 {
                assert!(hom_vanishes(&XiIndex::projective(3, k).unwrap(), &a).unwrap());
            }
        }
        // The reverse direction fails for a shifted copy of the same projective.
        assert!(!hom_vanishes(&xi(3, &[2]), &XiIndex::projective(3, 2).unwrap()).unwrap());
        assert!(hom_vanishes(&x1, &xi(3, &[1])).is_err());
    }

    #[test]
    fn compatibility_examples() {
        assert!(compatible(&xi(2, &[1]), &xi(2, &[2])).unwrap());
        assert!(compatible(&xi(2, &[0, 1, 2]), &xi(2, &[2])).unwrap());
        assert!(!compatible(&xi(2, &[0, 1, 2]), &xi(2, &[0, 2, 3])).unwrap());
    }

    #[test]
    fn mirror_is_an_involution() {
        for a in enumerate_xi(4).unwrap() {
            let m = a.mirrored();
            assert!(XiIndex::new(4, m.entries().to_vec()).is_ok());
            assert_eq!(m.mirrored(), a);
        }
    }
}
