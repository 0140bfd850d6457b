//! Rebuilding a cyclic algebra `B` with `epsilon(B) = A` from `A`.
//!
//! Write `d(i)` for the defect of `P_{i+1}` in `A`. The new algebra has a
//! block of vertices for every vertex `i` of `A`: the inherited vertex `i~`
//! followed by `d(i)` new vertices, so the base module at `i~` has length
//! `d(i) + 1` and the rank grows by `defect(A)`. The projective at `i~` is
//! the union of the `c_i` blocks starting at block `i`. The `j`-th new vertex
//! after `i~` is matched with the injective quotient of `P_{i+1}` of length
//! `c_i + j - 1`, whose socle is `T_i + j` where `T_i = i + c_i - 1`; its
//! projective starts at that vertex and ends at the bottom of block `T_i + j`.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::algebra::{canonical_cyclic, Algebra};
use crate::error::{Error, Result};
use crate::filtration::epsilon;

/// How the vertices of the constructed algebra relate to the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReverseBlueprint {
    /// `d(i)` for every vertex `i` of the input.
    pub defect_vector: Vec<usize>,
    /// Position (1-based) of each inherited vertex `i~` in the output.
    pub inherited: Vec<usize>,
    /// `(i, j, position)` for the `j`-th new vertex inserted after `i~`.
    pub new_vertices: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReverseResult {
    pub algebra: Algebra,
    pub blueprint: ReverseBlueprint,
    /// False when the input is not higher Auslander, or has a component of
    /// type A_1. The output then satisfies `epsilon(B) = A` but need not be
    /// unique, and its dimensions are not predicted from the input.
    pub higher_auslander_input: bool,
}

/// `d(i)` = defect of `P_{i+1}`, for `i = 1..n`.
pub fn defect_vector(a: &Algebra) -> Vec<usize> {
    let n = a.rank();
    (0..n)
        .map(|i| a.defect_of_projective0((i + 1) % n))
        .collect()
}

pub fn reverse_epsilon(a: &Algebra) -> Result<ReverseResult> {
    let n = a.rank();
    let d = defect_vector(a);
    let blen: Vec<u32> = d.iter().map(|&x| x as u32 + 1).collect();
    let mut offset = Vec::with_capacity(n);
    let mut total = 0usize;
    for &x in &d {
        offset.push(total);
        total += x + 1;
    }
    // sum of block lengths for blocks first .. first + count - 1 (mod n)
    let blocks_sum = |first: usize, count: u32| -> u32 {
        (0..count as usize).map(|k| blen[(first + k) % n]).sum()
    };

    let mut series = vec![0u32; total];
    let mut new_vertices = Vec::new();
    for i in 0..n {
        let c = a.c0(i);
        series[offset[i]] = blocks_sum(i, c);
        for j in 1..=d[i] {
            let own = (d[i] - j + 1) as u32;
            series[offset[i] + j] = own + blocks_sum(i + 1, c - 1 + j as u32);
            new_vertices.push((i + 1, j, offset[i] + j + 1));
        }
    }

    let built = Algebra::cyclic(series.clone()).map_err(|e| {
        Error::SelfCheckFailed(format!("constructed series {series:?} is invalid: {e}"))
    })?;
    let higher_auslander_input = a.is_higher_auslander() && !a.has_simple_component();
    self_check(a, &built, higher_auslander_input)?;
    Ok(ReverseResult {
        algebra: built,
        blueprint: ReverseBlueprint {
            defect_vector: d,
            inherited: offset.iter().map(|&o| o + 1).collect(),
            new_vertices,
        },
        higher_auslander_input,
    })
}

fn self_check(a: &Algebra, built: &Algebra, shift_expected: bool) -> Result<()> {
    let back = epsilon(built)?;
    if !back.rotation_equal(a) {
        return Err(Error::SelfCheckFailed(format!(
            "epsilon of {:?} is {:?}, expected {:?}",
            built.series(),
            back.series(),
            a.series()
        )));
    }
    if built.defect() != a.defect() {
        return Err(Error::SelfCheckFailed(format!(
            "defect {} differs from input defect {}",
            built.defect(),
            a.defect()
        )));
    }
    if shift_expected {
        let g = a.gldim().plus(2);
        if built.gldim() != g || built.domdim() != g {
            return Err(Error::SelfCheckFailed(format!(
                "expected gldim = domdim = {g}, got gldim {} and domdim {}",
                built.gldim(),
                built.domdim()
            )));
        }
    }
    Ok(())
}

/// Applies [`reverse_epsilon`] `steps` times and returns every result.
pub fn reverse_chain(a: &Algebra, steps: usize) -> Result<Vec<Algebra>> {
    let mut out = Vec::with_capacity(steps);
    let mut cur = a.clone();
    for _ in 0..steps {
        cur = reverse_epsilon(&cur)?.algebra;
        out.push(cur.clone());
    }
    Ok(out)
}

/// Nakayama cycles built from the given linear components, one per cyclic
/// ordering up to rotation, sorted by series.
pub fn cycle_orderings(components: &[Vec<u32>]) -> Result<Vec<Algebra>> {
    if components.is_empty() {
        return Err(Error::EmptyInput);
    }
    // validates each component
    Algebra::from_components(components)?;
    let mut kinds: Vec<&Vec<u32>> = components.iter().collect();
    kinds.sort();
    kinds.dedup();
    let labels: Vec<usize> = components
        .iter()
        .map(|c| kinds.iter().position(|k| *k == c).unwrap())
        .collect();
    let k = labels.len();
    let mut seen = BTreeSet::new();
    // fixing the first slot to a smallest label loses no ordering up to rotation
    let first = *labels.iter().min().unwrap();
    let mut rest = labels.clone();
    rest.remove(rest.iter().position(|&l| l == first).unwrap());
    for perm in rest.iter().copied().permutations(k - 1).unique() {
        let mut order = vec![first];
        order.extend(perm);
        let order: Vec<u32> = order.into_iter().map(|l| l as u32).collect();
        seen.insert(canonical_cyclic(&order));
    }
    seen.into_iter()
        .map(|order| {
            let comps: Vec<Vec<u32>> = order.iter().map(|&l| kinds[l as usize].clone()).collect();
            Algebra::from_components(&comps)
        })
        .collect()
}

fn totient(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Number of necklaces of length `n` over `t` colours up to rotation:
/// `(1/n) * sum over p | n of phi(p) * t^(n/p)`.
pub fn necklace_count(t: u64, n: u32) -> Result<u128> {
    if n == 0 {
        return Err(Error::BadParams("necklace length must be positive".into()));
    }
    let overflow = || Error::BadParams(format!("necklace count for t={t}, n={n} overflows"));
    let mut sum: u128 = 0;
    for p in (1..=n).filter(|p| n.is_multiple_of(*p)) {
        let power = (t as u128).checked_pow(n / p).ok_or_else(overflow)?;
        let term = power
            .checked_mul(totient(p as u64) as u128)
            .ok_or_else(overflow)?;
        sum = sum.checked_add(term).ok_or_else(overflow)?;
    }
    Ok(sum / n as u128)
}
