//! Nakayama algebras given by Kupisch series, and their uniserial modules.
//!
//! Every algebra is stored as one cyclic sequence `c_1, ..., c_n`. A cyclic
//! Nakayama algebra has all entries at least 2. An entry equal to 1 marks the
//! last vertex of a linear component, so a connected linear algebra is a
//! sequence ending in its only 1, and a Nakayama cycle (a direct sum of linear
//! algebras taken in a fixed cyclic order) is the concatenation of its
//! components. With this encoding the same module arithmetic works for all of
//! them: the projective `P_i` has top `S_i`, composition factors
//! `S_i, S_{i+1}, ..., S_{i+c_i-1}` (indices mod n) and length `c_i`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Indecomposable module over a Nakayama algebra, given by its top vertex
/// (1-based) and its length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct UniserialModule {
    pub top: usize,
    pub length: u32,
}

impl UniserialModule {
    pub fn new(top: usize, length: u32) -> Self {
        UniserialModule { top, length }
    }
}

impl fmt::Display for UniserialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M(top {}, length {})", self.top, self.length)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// No entry equals 1.
    Cyclic,
    /// Exactly one linear component with at least two vertices.
    Linear,
    /// Several linear components arranged in a cycle.
    NakayamaCycle,
    /// Every entry equals 1.
    Semisimple,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Algebra {
    series: Vec<u32>,
    // envelope[j] = length of the injective envelope of S_{j+1}
    envelope: Vec<u32>,
}

/// Validates a raw Kupisch series.
///
/// A series without 1s is read as a cyclic algebra. A series containing 1s
/// must end with 1 and is read as the concatenation of linear components.
pub fn validate(raw: &[u32]) -> Result<Algebra> {
    Algebra::from_series(raw.to_vec())
}

/// Lexicographically smallest rotation of a sequence.
pub fn canonical_cyclic(series: &[u32]) -> Vec<u32> {
    let n = series.len();
    let mut best = series.to_vec();
    for k in 1..n {
        let rot: Vec<u32> = series[k..].iter().chain(&series[..k]).copied().collect();
        if rot < best {
            best = rot;
        }
    }
    best
}

/// True if `series` equals its own smallest rotation.
pub fn is_canonical_cyclic(series: &[u32]) -> bool {
    let n = series.len();
    (1..n).all(|k| {
        let rot = series[k..].iter().chain(&series[..k]);
        // compare rotation against series lexicographically
        for (a, b) in rot.zip(series) {
            if a != b {
                return a > b;
            }
        }
        true
    })
}

fn check_kupisch(series: &[u32]) -> Result<()> {
    let n = series.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    for (i, &c) in series.iter().enumerate() {
        if c == 0 {
            return Err(Error::InvalidKupisch(format!(
                "c_{} = 0, every entry must be at least 1",
                i + 1
            )));
        }
    }
    for i in 0..n {
        let next = (i + 1) % n;
        if series[i] > series[next] + 1 {
            return Err(Error::InvalidKupisch(format!(
                "c_{} = {} exceeds c_{} + 1 = {}",
                i + 1,
                series[i],
                next + 1,
                series[next] + 1
            )));
        }
    }
    Ok(())
}

impl Algebra {
    /// Cyclic Nakayama algebra: entries at least 2 and `c_i <= c_{i+1} + 1`
    /// cyclically.
    pub fn cyclic(series: Vec<u32>) -> Result<Algebra> {
        if series.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(i) = series.iter().position(|&c| c < 2) {
            return Err(Error::InvalidKupisch(format!(
                "c_{} = {} but a cyclic algebra needs every entry at least 2",
                i + 1,
                series[i]
            )));
        }
        Algebra::from_series(series)
    }

    /// Connected linear Nakayama algebra: last entry 1, all others at least
    /// 2, and `c_i <= c_{i+1} + 1`.
    pub fn linear(series: Vec<u32>) -> Result<Algebra> {
        check_component(&series, 1)?;
        Algebra::from_series(series)
    }

    /// Nakayama cycle from its linear components in cyclic order.
    pub fn from_components(components: &[Vec<u32>]) -> Result<Algebra> {
        if components.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (k, comp) in components.iter().enumerate() {
            check_component(comp, k + 1)?;
        }
        Algebra::from_series(components.concat())
    }

    /// Any validated flat series, see [`validate`].
    pub fn from_series(series: Vec<u32>) -> Result<Algebra> {
        check_kupisch(&series)?;
        if series.contains(&1) && *series.last().unwrap() != 1 {
            return Err(Error::InvalidKupisch(format!(
                "c_{} = {}: a series with linear components must end with 1",
                series.len(),
                series[series.len() - 1]
            )));
        }
        Ok(Algebra::build(series))
    }

    fn build(series: Vec<u32>) -> Algebra {
        let n = series.len();
        let envelope = (0..n)
            .map(|j| {
                let mut len = 1u32;
                // lengths with a fixed socle form an interval [1, L]
                while series[(j + n - (len as usize % n)) % n] > len {
                    len += 1;
                }
                len
            })
            .collect();
        Algebra { series, envelope }
    }

    /// Relabels vertices so that old vertex `k + 1` becomes vertex 1.
    /// Non-cyclic algebras must be rotated onto a component start.
    pub fn rotated(&self, k: usize) -> Result<Algebra> {
        let n = self.rank();
        let k = k % n;
        let s: Vec<u32> = self.series[k..]
            .iter()
            .chain(&self.series[..k])
            .copied()
            .collect();
        Algebra::from_series(s)
    }

    /// Cyclic rotation with the smallest series. For non-cyclic algebras only
    /// rotations starting at a component are considered.
    pub fn canonical(&self) -> Algebra {
        if self.is_cyclic() {
            return Algebra::build(canonical_cyclic(&self.series));
        }
        let n = self.rank();
        let best = (0..n)
            .filter(|&k| self.series[(k + n - 1) % n] == 1)
            .map(|k| {
                self.series[k..]
                    .iter()
                    .chain(&self.series[..k])
                    .copied()
                    .collect::<Vec<u32>>()
            })
            .min()
            .unwrap();
        Algebra::build(best)
    }

    /// Equality up to relabelling the vertices by a rotation.
    pub fn rotation_equal(&self, other: &Algebra) -> bool {
        self.rank() == other.rank() && self.canonical().series == other.canonical().series
    }

    pub fn series(&self) -> &[u32] {
        &self.series
    }

    pub fn rank(&self) -> usize {
        self.series.len()
    }

    /// Kupisch entry `c_i`, 1-based.
    pub fn entry(&self, i: usize) -> Result<u32> {
        self.check_vertex(i)?;
        Ok(self.series[i - 1])
    }

    pub fn shape(&self) -> Shape {
        let ones = self.series.iter().filter(|&&c| c == 1).count();
        match ones {
            0 => Shape::Cyclic,
            _ if ones == self.rank() => Shape::Semisimple,
            1 => Shape::Linear,
            _ => Shape::NakayamaCycle,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.shape() == Shape::Cyclic
    }

    pub fn is_semisimple(&self) -> bool {
        self.shape() == Shape::Semisimple
    }

    /// Self-injective means all projectives have the same length.
    pub fn is_self_injective(&self) -> bool {
        self.series.iter().all(|&c| c == self.series[0])
    }

    /// Linear components in stored order. Empty for a cyclic algebra.
    pub fn components(&self) -> Vec<Vec<u32>> {
        if self.is_cyclic() {
            return Vec::new();
        }
        self.series
            .split_inclusive(|&c| c == 1)
            .map(|s| s.to_vec())
            .collect()
    }

    pub(crate) fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::VertexOutOfRange {
                vertex: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// Validated module with top `S_top` and the given length.
    pub fn module(&self, top: usize, length: u32) -> Result<UniserialModule> {
        self.check_vertex(top)?;
        if length == 0 || length > self.series[top - 1] {
            return Err(Error::InvalidModule { top, length });
        }
        Ok(UniserialModule { top, length })
    }

    pub(crate) fn check_module(&self, m: UniserialModule) -> Result<()> {
        self.module(m.top, m.length).map(|_| ())
    }

    /// All indecomposable modules, ordered by top then length.
    pub fn modules(&self) -> impl Iterator<Item = UniserialModule> + '_ {
        self.series
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| (1..=c).map(move |l| UniserialModule::new(i + 1, l)))
    }

    pub fn simple(&self, i: usize) -> Result<UniserialModule> {
        self.module(i, 1)
    }

    pub fn projective(&self, i: usize) -> Result<UniserialModule> {
        self.check_vertex(i)?;
        Ok(UniserialModule::new(i, self.series[i - 1]))
    }

    /// Injective envelope of the simple module `S_j`.
    pub fn injective_envelope(&self, j: usize) -> Result<UniserialModule> {
        self.check_vertex(j)?;
        let (t, l) = self.envelope0(j - 1);
        Ok(UniserialModule::new(t + 1, l))
    }

    /// Vertex of the simple socle.
    pub fn socle(&self, m: UniserialModule) -> Result<usize> {
        self.check_module(m)?;
        Ok(self.socle0(m.top - 1, m.length) + 1)
    }

    pub fn is_projective(&self, m: UniserialModule) -> Result<bool> {
        self.check_module(m)?;
        Ok(self.is_projective0(m.top - 1, m.length))
    }

    pub fn is_injective(&self, m: UniserialModule) -> Result<bool> {
        self.check_module(m)?;
        Ok(self.is_injective0(m.top - 1, m.length))
    }

    /// Kernel of the projective cover, `None` for a projective module.
    pub fn syzygy(&self, m: UniserialModule) -> Result<Option<UniserialModule>> {
        self.check_module(m)?;
        Ok(self
            .syzygy0(m.top - 1, m.length)
            .map(|(t, l)| UniserialModule::new(t + 1, l)))
    }

    /// Cokernel of the injective envelope, `None` for an injective module.
    pub fn cosyzygy(&self, m: UniserialModule) -> Result<Option<UniserialModule>> {
        self.check_module(m)?;
        Ok(self
            .cosyzygy0(m.top - 1, m.length)
            .map(|(t, l)| UniserialModule::new(t + 1, l)))
    }

    // 0-based helpers used by the hot loops

    pub(crate) fn c0(&self, i: usize) -> u32 {
        self.series[i]
    }

    pub(crate) fn shift(&self, i: usize, k: u32) -> usize {
        (i + k as usize) % self.rank()
    }

    pub(crate) fn socle0(&self, t: usize, l: u32) -> usize {
        self.shift(t, l - 1)
    }

    pub(crate) fn envelope0(&self, j: usize) -> (usize, u32) {
        let n = self.rank();
        let l = self.envelope[j];
        ((j + n - ((l as usize - 1) % n)) % n, l)
    }

    pub(crate) fn is_projective0(&self, t: usize, l: u32) -> bool {
        self.series[t] == l
    }

    pub(crate) fn is_injective0(&self, t: usize, l: u32) -> bool {
        self.envelope[self.socle0(t, l)] == l
    }

    pub(crate) fn syzygy0(&self, t: usize, l: u32) -> Option<(usize, u32)> {
        let c = self.series[t];
        (l < c).then(|| (self.shift(t, l), c - l))
    }

    pub(crate) fn cosyzygy0(&self, t: usize, l: u32) -> Option<(usize, u32)> {
        let (et, el) = self.envelope0(self.socle0(t, l));
        (l < el).then_some((et, el - l))
    }
}

fn check_component(comp: &[u32], index: usize) -> Result<()> {
    if comp.is_empty() {
        return Err(Error::EmptyInput);
    }
    let last = comp.len() - 1;
    if comp[last] != 1 {
        return Err(Error::InvalidKupisch(format!(
            "component {index} ends with {} but a linear component must end with 1",
            comp[last]
        )));
    }
    if let Some(i) = comp[..last].iter().position(|&c| c < 2) {
        return Err(Error::InvalidKupisch(format!(
            "component {index}: c_{} = {} before the last vertex, entries there must be at least 2",
            i + 1,
            comp[i]
        )));
    }
    for i in 0..last {
        if comp[i] > comp[i + 1] + 1 {
            return Err(Error::InvalidKupisch(format!(
                "component {index}: c_{} = {} exceeds c_{} + 1 = {}",
                i + 1,
                comp[i],
                i + 2,
                comp[i + 1] + 1
            )));
        }
    }
    Ok(())
}
