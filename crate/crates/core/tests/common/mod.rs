//! Brute-force reference computations on raw Kupisch series.
//!
//! Modules are handled as explicit lists of composition factors (0-based
//! vertices, top first). Nothing here calls into the library's module
//! arithmetic, so agreement with it is a real cross-check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use nakayama::{Algebra, Dim};
use proptest::prelude::*;

pub type Factors = Vec<usize>;

pub struct Oracle {
    pub c: Vec<u32>,
    pub n: usize,
    modules: Vec<Factors>,
}

impl Oracle {
    pub fn new(c: &[u32]) -> Oracle {
        let n = c.len();
        let mut modules = Vec::new();
        for (t, &ct) in c.iter().enumerate() {
            for l in 1..=ct as usize {
                modules.push((0..l).map(|k| (t + k) % n).collect());
            }
        }
        Oracle {
            c: c.to_vec(),
            n,
            modules,
        }
    }

    pub fn modules(&self) -> &[Factors] {
        &self.modules
    }

    pub fn projective(&self, t: usize) -> Factors {
        (0..self.c[t] as usize).map(|k| (t + k) % self.n).collect()
    }

    pub fn is_projective(&self, m: &Factors) -> bool {
        *m == self.projective(m[0])
    }

    /// Kernel of the projective cover: the factors of the cover below `m`.
    pub fn syzygy(&self, m: &Factors) -> Option<Factors> {
        let p = self.projective(m[0]);
        assert!(p.starts_with(m), "{m:?} is not a quotient of {p:?}");
        let k = p[m.len()..].to_vec();
        (!k.is_empty()).then_some(k)
    }

    /// Terms of the minimal projective resolution, stopping at the first
    /// repeated kernel (returned as `None`, meaning infinite).
    pub fn projective_resolution(&self, m: &Factors) -> Option<Vec<Factors>> {
        let mut terms = Vec::new();
        let mut seen = HashSet::new();
        let mut cur = m.clone();
        loop {
            if !seen.insert(cur.clone()) {
                return None;
            }
            terms.push(self.projective(cur[0]));
            match self.syzygy(&cur) {
                None => return Some(terms),
                Some(k) => cur = k,
            }
        }
    }

    pub fn pdim(&self, m: &Factors) -> Dim {
        match self.projective_resolution(m) {
            Some(terms) => Dim::Finite(terms.len() as u32 - 1),
            None => Dim::Infinite,
        }
    }

    /// Maximum projective dimension over every indecomposable.
    pub fn gldim_all_modules(&self) -> Dim {
        self.modules.iter().map(|m| self.pdim(m)).max().unwrap()
    }

    pub fn findim(&self) -> Dim {
        let best = self
            .modules
            .iter()
            .filter_map(|m| self.pdim(m).finite())
            .max()
            .unwrap_or(0);
        Dim::Finite(best)
    }

    /// Longest indecomposable having `m` as a submodule.
    pub fn envelope(&self, m: &Factors) -> Factors {
        self.modules
            .iter()
            .filter(|x| x.ends_with(m))
            .max_by_key(|x| x.len())
            .unwrap()
            .clone()
    }

    pub fn is_injective(&self, m: &Factors) -> bool {
        self.envelope(m).len() == m.len()
    }

    pub fn cosyzygy(&self, m: &Factors) -> Option<Factors> {
        let e = self.envelope(m);
        let q = e[..e.len() - m.len()].to_vec();
        (!q.is_empty()).then_some(q)
    }

    pub fn domdim(&self) -> Dim {
        let mut best = Dim::Infinite;
        for t in 0..self.n {
            let mut cur = self.projective(t);
            let mut seen = HashSet::new();
            let mut count = 0;
            let d = loop {
                let e = self.envelope(&cur);
                if !self.is_projective(&e) {
                    break Dim::Finite(count);
                }
                count += 1;
                match self.cosyzygy(&cur) {
                    None => break Dim::Infinite,
                    Some(q) => {
                        if !seen.insert(q.clone()) {
                            break Dim::Infinite;
                        }
                        cur = q;
                    }
                }
            };
            best = best.min(d);
        }
        best
    }

    pub fn injectives(&self) -> Vec<Factors> {
        let mut out: Vec<Factors> = self
            .modules
            .iter()
            .filter(|m| self.is_injective(m))
            .cloned()
            .collect();
        out.sort();
        out
    }

    fn simple_components(&self) -> usize {
        (0..self.n)
            .filter(|&v| self.c[v] == 1 && self.c[(v + self.n - 1) % self.n] == 1)
            .count()
    }

    pub fn defect(&self) -> usize {
        let non_projective = self
            .injectives()
            .iter()
            .filter(|m| !self.is_projective(m))
            .count();
        non_projective + self.simple_components()
    }

    pub fn socles(&self) -> BTreeSet<usize> {
        (0..self.n)
            .map(|t| *self.projective(t).last().unwrap())
            .collect()
    }

    /// Syzygy filtered algebra: vertices are the successors of projective
    /// socles, and the entry at `s` counts the projective socles among the
    /// composition factors of `P_s`.
    pub fn epsilon(&self) -> Vec<u32> {
        let socles = self.socles();
        let tops: BTreeSet<usize> = socles.iter().map(|s| (s + 1) % self.n).collect();
        tops.iter()
            .map(|&s| {
                self.projective(s)
                    .iter()
                    .filter(|v| socles.contains(v))
                    .count() as u32
            })
            .collect()
    }
}

/// Every rotation of `s`, lexicographically smallest first.
pub fn min_rotation(s: &[u32]) -> Vec<u32> {
    (0..s.len())
        .map(|k| {
            let mut r = s.to_vec();
            r.rotate_left(k);
            r
        })
        .min()
        .unwrap_or_default()
}

/// All valid cyclic series of rank `n` with entries in `2..=max`, one per
/// rotation class, by filtering the full cube.
pub fn brute_cyclic(n: usize, max: u32) -> BTreeSet<Vec<u32>> {
    let base = (max - 1) as usize;
    let mut out = BTreeSet::new();
    for mut code in 0..base.pow(n as u32) {
        let mut s = vec![0u32; n];
        for x in s.iter_mut() {
            *x = 2 + (code % base) as u32;
            code /= base;
        }
        if (0..n).all(|i| s[i] <= s[(i + 1) % n] + 1) {
            out.insert(min_rotation(&s));
        }
    }
    out
}

pub fn alg(s: &[u32]) -> Algebra {
    Algebra::from_series(s.to_vec()).unwrap()
}

pub fn text(s: &str) -> Algebra {
    nakayama::parse_algebra(s).unwrap()
}

/// Pushes entries up until `c_i <= c_{i+1} + 1` holds cyclically.
fn repair_cyclic(mut c: Vec<u32>) -> Vec<u32> {
    let n = c.len();
    loop {
        let mut changed = false;
        for i in 0..n {
            let j = (i + 1) % n;
            if c[i] > c[j] + 1 {
                c[j] = c[i] - 1;
                changed = true;
            }
        }
        if !changed {
            return c;
        }
    }
}

pub fn cyclic_series(max_rank: usize, max_entry: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2..=max_entry, 1..=max_rank).prop_map(repair_cyclic)
}

/// Linear component of the given rank range, built from its sink upwards.
pub fn linear_component(max_rank: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=3u32, 0..max_rank).prop_map(|steps| {
        let mut rev = vec![1u32];
        for s in steps {
            let next = *rev.last().unwrap();
            // entry before `next` is at least 2 and at most next + 1
            rev.push((2 + s).min(next + 1));
        }
        rev.reverse();
        rev
    })
}

pub fn nakayama_cycle(max_components: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(linear_component(5), 1..=max_components)
}
