//! Projective and injective resolutions, and the numerical invariants built
//! from them.

use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{Algebra, UniserialModule};
use crate::dim::Dim;
use crate::error::Result;

/// Minimal relations and the projective/injective classes they induce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationSystem {
    /// Pairs `(k, s)`: the path of length `c_k` starting at `k` is zero, and
    /// `S_s` is the socle of `P_k`. One pair per minimal projective.
    pub relations: Vec<(usize, usize)>,
    /// Projectives grouped by common socle, in socle order.
    pub projective_classes: Vec<Vec<usize>>,
    /// Injectives grouped by common top, in top order. Each entry is the
    /// socle vertex of the injective.
    pub injective_classes: Vec<Vec<usize>>,
    /// Vertices whose projective is also injective.
    pub projective_injective: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologicalSummary {
    pub gldim: Dim,
    pub domdim: Dim,
    pub findim: Dim,
    pub defect: usize,
    pub num_relations: usize,
    pub is_self_injective: bool,
    pub is_gorenstein: bool,
    pub is_higher_auslander: bool,
}

impl Algebra {
    /// Projective dimension by iterating syzygies; a repeated module means
    /// the resolution never ends.
    pub fn pdim(&self, m: UniserialModule) -> Result<Dim> {
        self.check_module(m)?;
        Ok(self.pdim0(m.top - 1, m.length))
    }

    pub(crate) fn pdim0(&self, mut t: usize, mut l: u32) -> Dim {
        let mut seen = HashSet::new();
        let mut steps = 0;
        loop {
            match self.syzygy0(t, l) {
                None => return Dim::Finite(steps),
                Some(next) => {
                    if !seen.insert((t, l)) {
                        return Dim::Infinite;
                    }
                    (t, l) = next;
                    steps += 1;
                }
            }
        }
    }

    /// Injective dimension by iterating cosyzygies.
    pub fn injdim(&self, m: UniserialModule) -> Result<Dim> {
        self.check_module(m)?;
        Ok(self.injdim0(m.top - 1, m.length))
    }

    fn injdim0(&self, mut t: usize, mut l: u32) -> Dim {
        let mut seen = HashSet::new();
        let mut steps = 0;
        loop {
            match self.cosyzygy0(t, l) {
                None => return Dim::Finite(steps),
                Some(next) => {
                    if !seen.insert((t, l)) {
                        return Dim::Infinite;
                    }
                    (t, l) = next;
                    steps += 1;
                }
            }
        }
    }

    /// Maximum projective dimension of the simple modules.
    pub fn gldim(&self) -> Dim {
        let mut best = Dim::Finite(0);
        for t in 0..self.rank() {
            let d = self.pdim0(t, 1);
            if d == Dim::Infinite {
                return d;
            }
            best = best.max(d);
        }
        best
    }

    /// Number of initial projective terms in the minimal injective
    /// coresolution of `P_i`; infinite if every term is projective.
    pub fn domdim_of_projective(&self, i: usize) -> Result<Dim> {
        self.check_vertex(i)?;
        Ok(self.domdim_projective0(i - 1))
    }

    fn domdim_projective0(&self, i: usize) -> Dim {
        let (mut t, mut l) = (i, self.c0(i));
        let mut seen = HashSet::new();
        let mut count = 0;
        loop {
            let (et, el) = self.envelope0(self.socle0(t, l));
            if !self.is_projective0(et, el) {
                return Dim::Finite(count);
            }
            count += 1;
            if el == l || !seen.insert((t, l)) {
                return Dim::Infinite;
            }
            (t, l) = (et, el - l);
        }
    }

    /// Minimum over projectives of [`Algebra::domdim_of_projective`];
    /// infinite when every projective is injective.
    pub fn domdim(&self) -> Dim {
        (0..self.rank())
            .map(|i| self.domdim_projective0(i))
            .min()
            .unwrap_or(Dim::Infinite)
    }

    /// Largest finite projective dimension over all indecomposables.
    pub fn findim(&self) -> Dim {
        let mut best = 0;
        for (i, &c) in self.series().iter().enumerate() {
            for l in 1..=c {
                if let Dim::Finite(d) = self.pdim0(i, l) {
                    best = best.max(d);
                }
            }
        }
        Dim::Finite(best)
    }

    /// True if some component is a single vertex (type A_1).
    pub fn has_simple_component(&self) -> bool {
        (0..self.rank()).any(|v| self.is_isolated_vertex(v))
    }

    fn is_isolated_vertex(&self, v: usize) -> bool {
        let n = self.rank();
        self.c0(v) == 1 && self.c0((v + n - 1) % n) == 1
    }

    /// Number of proper quotients of `P_i` that are injective. A vertex
    /// forming a component of type A_1 counts 1, so that these numbers add up
    /// to [`Algebra::defect`].
    pub fn defect_of_projective(&self, i: usize) -> Result<usize> {
        self.check_vertex(i)?;
        Ok(self.defect_of_projective0(i - 1))
    }

    pub(crate) fn defect_of_projective0(&self, i: usize) -> usize {
        if self.is_isolated_vertex(i) {
            return 1;
        }
        (1..self.c0(i))
            .filter(|&l| self.is_injective0(i, l))
            .count()
    }

    /// Number of non-projective indecomposable injectives, plus one for each
    /// component of type A_1.
    pub fn defect(&self) -> usize {
        let n = self.rank();
        let non_projective = (0..n)
            .filter(|&j| {
                let (t, l) = self.envelope0(j);
                !self.is_projective0(t, l)
            })
            .count();
        non_projective + (0..n).filter(|&v| self.is_isolated_vertex(v)).count()
    }

    /// A projective `P_i` is minimal when its radical is not projective,
    /// i.e. `c_{i+1} >= c_i`.
    pub fn is_minimal_projective(&self, i: usize) -> Result<bool> {
        self.check_vertex(i)?;
        Ok(self.is_minimal0(i - 1))
    }

    fn is_minimal0(&self, i: usize) -> bool {
        let n = self.rank();
        self.c0((i + 1) % n) >= self.c0(i)
    }

    pub fn num_relations(&self) -> usize {
        (0..self.rank()).filter(|&i| self.is_minimal0(i)).count()
    }

    pub fn relations(&self) -> RelationSystem {
        let n = self.rank();
        let relations = (0..n)
            .filter(|&i| self.is_minimal0(i))
            .map(|i| (i + 1, self.socle0(i, self.c0(i)) + 1))
            .collect();
        let mut projective_classes = vec![Vec::new(); n];
        for i in 0..n {
            projective_classes[self.socle0(i, self.c0(i))].push(i + 1);
        }
        let mut injective_classes = vec![Vec::new(); n];
        for j in 0..n {
            injective_classes[self.envelope0(j).0].push(j + 1);
        }
        let projective_injective = (0..n)
            .filter(|&i| self.is_injective0(i, self.c0(i)))
            .map(|i| i + 1)
            .collect();
        RelationSystem {
            relations,
            projective_classes: projective_classes
                .into_iter()
                .filter(|c| !c.is_empty())
                .collect(),
            injective_classes: injective_classes
                .into_iter()
                .filter(|c| !c.is_empty())
                .collect(),
            projective_injective,
        }
    }

    /// Gorenstein here means every indecomposable injective has finite
    /// projective dimension.
    pub fn is_gorenstein(&self) -> bool {
        (0..self.rank()).all(|j| {
            let (t, l) = self.envelope0(j);
            self.pdim0(t, l).is_finite()
        })
    }

    /// Global dimension finite and equal to the dominant dimension.
    pub fn is_higher_auslander(&self) -> bool {
        let g = self.gldim();
        g.is_finite() && g == self.domdim()
    }

    pub fn summary(&self) -> HomologicalSummary {
        let gldim = self.gldim();
        let domdim = self.domdim();
        HomologicalSummary {
            gldim,
            domdim,
            findim: self.findim(),
            defect: self.defect(),
            num_relations: self.num_relations(),
            is_self_injective: self.is_self_injective(),
            is_gorenstein: self.is_gorenstein(),
            is_higher_auslander: gldim.is_finite() && gldim == domdim,
        }
    }
}
