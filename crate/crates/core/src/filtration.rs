//! Base set of a cyclic Nakayama algebra, filtrations by it, and the
//! syzygy filtered algebra `epsilon(A)`.
//!
//! For a cyclic algebra let `S` be the set of socle vertices of the
//! projectives and `S'` the set of their successors. For each `s` in `S'` the
//! base module `D(s)` runs from `s` to the first vertex of `S` reached going
//! forward. These modules tile the cycle of vertices. A module is filtered by
//! them when its top lies in `S'` and its socle in `S`; its B-length is the
//! number of base modules it is built from. `epsilon(A)` has one vertex per
//! element of `S'`, and its Kupisch entry there is the B-length of `P(s)`.

use crate::algebra::{Algebra, UniserialModule};
use crate::error::{Error, Result};

struct BaseSet {
    /// 0-based tops in increasing order
    tops: Vec<usize>,
    lengths: Vec<u32>,
    /// block index of each vertex that is a top
    block_of: Vec<Option<usize>>,
}

impl BaseSet {
    fn new(a: &Algebra) -> Result<BaseSet> {
        if !a.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        let n = a.rank();
        let mut is_socle = vec![false; n];
        for i in 0..n {
            is_socle[a.socle0(i, a.c0(i))] = true;
        }
        let tops: Vec<usize> = (0..n).filter(|&v| is_socle[(v + n - 1) % n]).collect();
        let lengths = tops
            .iter()
            .map(|&t| {
                let mut len = 1;
                while !is_socle[(t + len as usize - 1) % n] {
                    len += 1;
                }
                len
            })
            .collect();
        let mut block_of = vec![None; n];
        for (k, &t) in tops.iter().enumerate() {
            block_of[t] = Some(k);
        }
        Ok(BaseSet {
            tops,
            lengths,
            block_of,
        })
    }

    /// Consecutive base modules making up the module `(t, l)`, if any.
    fn blocks(&self, t: usize, l: u32) -> Option<Vec<usize>> {
        let mut k = self.block_of[t]?;
        let mut acc = 0;
        let mut out = Vec::new();
        while acc < l {
            out.push(k);
            acc += self.lengths[k];
            k = (k + 1) % self.tops.len();
        }
        (acc == l).then_some(out)
    }
}

/// Socle vertices of the indecomposable projectives, sorted.
pub fn socle_set(a: &Algebra) -> Result<Vec<usize>> {
    if !a.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let mut s: Vec<usize> = (0..a.rank()).map(|i| a.socle0(i, a.c0(i)) + 1).collect();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

/// The base modules, ordered by top vertex.
pub fn base_set(a: &Algebra) -> Result<Vec<UniserialModule>> {
    let b = BaseSet::new(a)?;
    Ok(b.tops
        .iter()
        .zip(&b.lengths)
        .map(|(&t, &l)| UniserialModule::new(t + 1, l))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFiltration {
    /// Base modules from top to socle.
    pub factors: Vec<UniserialModule>,
    pub b_length: usize,
}

pub fn b_filtration(a: &Algebra, m: UniserialModule) -> Result<BFiltration> {
    a.check_module(m)?;
    let b = BaseSet::new(a)?;
    let blocks = b.blocks(m.top - 1, m.length).ok_or(Error::NotFiltered {
        top: m.top,
        length: m.length,
    })?;
    Ok(BFiltration {
        b_length: blocks.len(),
        factors: blocks
            .iter()
            .map(|&k| UniserialModule::new(b.tops[k] + 1, b.lengths[k]))
            .collect(),
    })
}

/// The syzygy filtered algebra. Its vertices are the elements of `S'` in
/// increasing order; when the result has linear components it is rotated to
/// start at a component.
pub fn epsilon(a: &Algebra) -> Result<Algebra> {
    let b = BaseSet::new(a)?;
    let mut series: Vec<u32> = b
        .tops
        .iter()
        .map(|&t| {
            let blocks = b
                .blocks(t, a.c0(t))
                .expect("projectives at base tops are filtered");
            blocks.len() as u32
        })
        .collect();
    if let Some(k) = series.iter().position(|&c| c == 1) {
        series.rotate_left(k + 1);
    }
    Algebra::from_series(series)
}

/// Successive images `epsilon(A), epsilon^2(A), ...`, stopping at the first
/// image that is not cyclic or is self-injective. A self-injective input
/// gives the one-element chain `[A]`.
pub fn epsilon_chain(a: &Algebra, max_steps: usize) -> Result<Vec<Algebra>> {
    if !a.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let mut chain = Vec::new();
    let mut cur = a.clone();
    loop {
        if chain.len() == max_steps {
            return Err(Error::StepLimitExceeded { chain });
        }
        let next = epsilon(&cur)?;
        let done = !next.is_cyclic() || next.is_self_injective();
        chain.push(next.clone());
        if done {
            return Ok(chain);
        }
        cur = next;
    }
}
