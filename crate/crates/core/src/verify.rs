//! Named self-verification suites run by `nakayama verify <suite>`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Algebra;
use crate::dim::Dim;
use crate::enumeration::{iterate_cyclic, spectrum_report, SearchConfig};
use crate::error::{Error, Result};
use crate::families::{cover, Family};
use crate::filtration::{epsilon, epsilon_chain};
use crate::reverse::{reverse_chain, reverse_epsilon};
use crate::text::parse_algebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Reductions,
    TheoremA,
    TheoremD,
    Roundtrip,
    Families,
    Chains,
    Spectrum,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Reductions,
        Suite::TheoremA,
        Suite::TheoremD,
        Suite::Roundtrip,
        Suite::Families,
        Suite::Chains,
        Suite::Spectrum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Reductions => "reductions",
            Suite::TheoremA => "theorem-a",
            Suite::TheoremD => "theorem-d",
            Suite::Roundtrip => "roundtrip",
            Suite::Families => "families",
            Suite::Chains => "chains",
            Suite::Spectrum => "spectrum",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown suite {s}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failures: Vec<String>, checked: usize) -> Check {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{checked} cases")
        } else {
            format!(
                "{} of {checked} cases failed, first: {}",
                failures.len(),
                failures[0]
            )
        };
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

pub fn run(suite: Suite, jobs: usize) -> Result<Vec<Check>> {
    match suite {
        Suite::Reductions => reductions(),
        Suite::TheoremA => theorem_a(),
        Suite::TheoremD => theorem_d(),
        Suite::Roundtrip => roundtrip(),
        Suite::Families => families(),
        Suite::Chains => chains(),
        Suite::Spectrum => spectra(jobs),
    }
}

/// Non-self-injective cyclic algebras of ranks `ranks` with entries at most
/// `max_entry` (or `2n - 1` when `None`).
pub fn census(ranks: std::ops::RangeInclusive<usize>, max_entry: Option<u32>) -> Vec<Algebra> {
    let mut out = Vec::new();
    for n in ranks {
        let mut cfg = SearchConfig::new(n);
        if let Some(m) = max_entry {
            cfg.max_entry = m;
        }
        out.extend(iterate_cyclic(&cfg).filter(|a| !a.is_self_injective()));
    }
    out
}

fn reductions() -> Result<Vec<Check>> {
    let algebras = census(2..=5, Some(8));
    let mut gl = (Vec::new(), 0);
    let mut dom = (Vec::new(), 0);
    let mut fin = (Vec::new(), 0);
    for a in &algebras {
        let e = epsilon(a)?;
        let (g, d, f) = (a.gldim(), a.domdim(), a.findim());
        if let Dim::Finite(k) = g {
            if k >= 2 {
                gl.1 += 1;
                if e.gldim().plus(2) != g {
                    gl.0.push(format!("{a}: gldim {g}, epsilon gldim {}", e.gldim()));
                }
            }
        }
        if d >= Dim::Finite(3) {
            dom.1 += 1;
            if e.domdim().plus(2) != d {
                dom.0
                    .push(format!("{a}: domdim {d}, epsilon domdim {}", e.domdim()));
            }
        }
        if f >= Dim::Finite(2) {
            fin.1 += 1;
            if e.findim().plus(2) != f {
                fin.0
                    .push(format!("{a}: findim {f}, epsilon findim {}", e.findim()));
            }
        }
    }
    Ok(vec![
        Check::new("gldim drops by 2 when 2 <= gldim < inf", gl.0, gl.1),
        Check::new("domdim drops by 2 when domdim >= 3", dom.0, dom.1),
        Check::new("findim drops by 2 when findim >= 2", fin.0, fin.1),
    ])
}

fn higher_auslander_census() -> Vec<Algebra> {
    census(2..=7, None)
        .into_iter()
        .filter(|a| a.is_higher_auslander())
        .collect()
}

fn theorem_a() -> Result<Vec<Check>> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for a in higher_auslander_census() {
        let g = a.gldim().finite().unwrap();
        if g < 3 {
            continue;
        }
        checked += 1;
        let e = epsilon(&a)?;
        let ok = e.is_higher_auslander()
            && e.gldim() == Dim::Finite(g - 2)
            && e.domdim() == Dim::Finite(a.domdim().finite().unwrap() - 2)
            && e.defect() == a.defect();
        if !ok {
            failures.push(format!(
                "{a} -> {e}: gldim {}, domdim {}, defect {} vs {}",
                e.gldim(),
                e.domdim(),
                e.defect(),
                a.defect()
            ));
        }
    }
    Ok(vec![Check::new(
        "epsilon of a higher Auslander algebra with gldim >= 3 is higher Auslander with gldim - 2 and equal defect",
        failures,
        checked,
    )])
}

fn theorem_d() -> Result<Vec<Check>> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for a in census(2..=5, Some(8)) {
        let e = epsilon(&a)?;
        for m in [2, 3] {
            checked += 1;
            let lhs = epsilon(&cover(&a, m)?)?;
            let rhs = cover(&e, m)?;
            if !lhs.rotation_equal(&rhs) {
                failures.push(format!("{a} with m = {m}: {lhs} vs {rhs}"));
            }
        }
    }
    let a = parse_algebra("5,4,4,3")?;
    checked += 1;
    let doubled = epsilon(&cover(&a, 2)?)?;
    if doubled.series() != [2, 2, 2, 2] {
        failures.push(format!("(5,4,4,3) doubled gives {doubled}"));
    }
    Ok(vec![Check::new(
        "epsilon commutes with m-fold covers",
        failures,
        checked,
    )])
}

fn roundtrip() -> Result<Vec<Check>> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for a in higher_auslander_census() {
        checked += 1;
        let e = epsilon(&a)?;
        match reverse_epsilon(&e) {
            Ok(r) if r.algebra.rotation_equal(&a) => {}
            Ok(r) => failures.push(format!("{a} -> {e} -> {}", r.algebra)),
            Err(err) => failures.push(format!("{a} -> {e}: {err}")),
        }
    }
    Ok(vec![Check::new(
        "reverse construction inverts epsilon on higher Auslander algebras",
        failures,
        checked,
    )])
}

fn check_family(f: Family, k: u32, failures: &mut Vec<String>) -> Result<()> {
    let a = f.algebra()?;
    let (g, d) = (a.gldim(), a.domdim());
    if g != Dim::Finite(k) || d != Dim::Finite(k) {
        failures.push(format!("{f} = {a}: gldim {g}, domdim {d}, expected {k}"));
    }
    Ok(())
}

fn families() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut failures = Vec::new();
    for n in 2..=12 {
        let f = Family::Gustafson { n };
        check_family(f, 2 * n - 2, &mut failures)?;
        let chain = epsilon_chain(&f.algebra()?, 64)?;
        let len = chain.len();
        let ends = len == (n - 1) as usize
            && chain[len - 1].series() == [1]
            && (len < 2 || chain[len - 2].series() == [3, 2]);
        if !ends {
            failures.push(format!("{f}: chain does not end with (3,2) then A_1"));
        }
    }
    checks.push(Check::new("gustafson(n), n <= 12", failures, 11));

    let mut failures = Vec::new();
    for d in 1..=8 {
        let f = Family::Ladder { d };
        check_family(f, d, &mut failures)?;
        if f.algebra()?.defect() != 1 {
            failures.push(format!("{f}: defect is not 1"));
        }
    }
    checks.push(Check::new("ladder(d), d <= 8", failures, 8));

    let mut failures = Vec::new();
    let mut count = 0;
    for a in 1..=4 {
        for d in 2..=6 {
            count += 1;
            let f = Family::Comb { a, d };
            check_family(f, d, &mut failures)?;
            if f.algebra()?.defect() != (a + 1) as usize {
                failures.push(format!("{f}: defect is not {}", a + 1));
            }
        }
    }
    checks.push(Check::new("comb(a, d), a <= 4, d <= 6", failures, count));

    let mut failures = Vec::new();
    let mut count = 0;
    for n in 2..=5 {
        for alpha in 0..=3 {
            count += 1;
            check_family(Family::Staircase { n, alpha }, 2 * alpha + 1, &mut failures)?;
        }
        for j in 1..=3 {
            count += 1;
            let f = Family::Bracket { j, n };
            check_family(f, 2 * j + 1, &mut failures)?;
            let (x, y) = crate::families::bracket_bounds(j, n)?;
            let e = epsilon(&f.algebra()?)?;
            let want = if j == 1 {
                Algebra::linear((1..=n).rev().collect())?
            } else {
                Algebra::from_series(crate::families::bracket(y, y - n + 1))?
            };
            if !e.rotation_equal(&want) {
                failures.push(format!("{f}: epsilon is {e}, expected {want} (X = {x})"));
            }
        }
    }
    checks.push(Check::new(
        "staircase and bracket, n <= 5, j <= 3",
        failures,
        count,
    ));

    let mut failures = Vec::new();
    let mut count = 0;
    for n in 2..=5 {
        for j in 1..=3 {
            for alpha in 0..=3 {
                for beta in 0..=3 {
                    count += 1;
                    let f = Family::Stacked { j, n, alpha, beta };
                    let a = f.algebra()?;
                    let e = epsilon(&a)?;
                    if alpha >= 1 {
                        let want = Family::Stacked {
                            j,
                            n,
                            alpha: alpha - 1,
                            beta: beta + 1,
                        }
                        .algebra()?;
                        if !e.rotation_equal(&want) {
                            failures.push(format!("{f}: epsilon is {e}, expected {want}"));
                        }
                    }
                    if e.is_higher_auslander() && !e.has_simple_component() {
                        let ok = a.is_higher_auslander() && a.gldim() == e.gldim().plus(2);
                        if !ok {
                            failures.push(format!(
                                "{f}: epsilon is higher Auslander but {a} has gldim {}, domdim {}",
                                a.gldim(),
                                a.domdim()
                            ));
                        }
                    }
                }
            }
        }
    }
    checks.push(Check::new(
        "stacked(j, n, alpha, beta), n <= 5, j, alpha, beta <= 3",
        failures,
        count,
    ));

    let mut failures = Vec::new();
    for (k, list) in [(4, LISTED_K4), (6, LISTED_K6)] {
        for s in list {
            let a = parse_algebra(s)?;
            if !(a.is_higher_auslander() && a.gldim() == Dim::Finite(k)) {
                failures.push(format!("{s}: gldim {}, domdim {}", a.gldim(), a.domdim()));
            }
        }
    }
    checks.push(Check::new(
        "listed examples with k = 4 and k = 6",
        failures,
        LISTED_K4.len() + LISTED_K6.len(),
    ));
    Ok(checks)
}

/// Higher Auslander Nakayama algebras of global dimension 4.
pub const LISTED_K4: &[&str] = &[
    "4,4,3",
    "3,2,2,2",
    "2,2,2,2,1",
    "4,4,3,4,4,3",
    "3,3,3,3,2,3,2",
    "3,2,2,2,3,2,2,2",
    "4,4,3,4,4,3,4,4,3",
    "3,3,4,4,3,3,3,2,3,2",
    "2,2,3,2,3,3,3,3,2,3,2",
    "3,2,2,2,3,2,2,2,3,2,2,2",
    "3,3,4,4,3,4,4,3,3,3,2,3,2",
    "3,3,3,3,2,3,2,3,3,3,3,2,3,2",
    "2,2,3,2,2,2,3,2,3,3,3,3,2,3,2",
];

/// Higher Auslander Nakayama algebras of global dimension 6.
pub const LISTED_K6: &[&str] = &[
    "5,5,5,4",
    "3,3,3,3,2",
    "3,2,2,2,2,2",
    "2,2,2,2,2,2,1",
    "5,5,5,4,5,5,5,4",
    "4,4,3,3,3,3,4,4,3",
    "3,3,3,3,2,3,3,3,3,2",
    "3,3,3,3,2,2,2,3,2,2,2",
    "3,2,2,2,2,2,3,2,2,2,2,2",
    "4,4,4,4,4,4,3,4,4,3,4,4,3",
    "4,4,3,3,3,3,4,4,3,3,3,2,3,3",
    "3,3,3,3,2,3,3,3,3,2,3,3,3,3,2",
];

/// Reverse chains: input, then the expected results up to rotation.
pub const GOLDEN_CHAINS: &[(&str, &[&str])] = &[
    (
        "2,3,2,2,1",
        &[
            "3,3,3,3,2,3,2",
            "3,3,4,4,3,4,4,3,3",
            "4,4,4,5,5,5,4,4,4,4,3",
        ],
    ),
    (
        "2,1|3,2,1",
        &[
            "4,3,3,3,4,3,2,2",
            "5,4,4,4,4,6,5,4,4,4,4",
            "7,6,6,6,6,6,6,7,6,5,5,5,5,5",
        ],
    ),
    (
        "2,2,1|2,3,2,2,1",
        &[
            "3,2,3,3,3,3,2,3,2,2,2",
            "4,4,3,3,3,3,4,4,3,3,3,2,3,3",
            "4,4,3,4,4,4,4,4,4,3,4,4,3,4,4,4,4",
            "5,5,4,4,4,4,4,5,5,5,4,5,5,5,4,4,4,4,4,5",
        ],
    ),
];

fn chains() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (input, expected) in GOLDEN_CHAINS {
        let a = parse_algebra(input)?;
        let mut failures = Vec::new();
        match reverse_chain(&a, expected.len()) {
            Ok(got) => {
                for (g, want) in got.iter().zip(expected.iter()) {
                    let want = parse_algebra(want)?;
                    if !g.rotation_equal(&want) {
                        failures.push(format!("got {g}, expected {want}"));
                    }
                }
            }
            Err(e) => failures.push(e.to_string()),
        }
        checks.push(Check::new(
            format!("reverse chain from {a}"),
            failures,
            expected.len(),
        ));
    }
    Ok(checks)
}

fn spectra(jobs: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 2..=8 {
        let mut cfg = SearchConfig::new(n);
        cfg.jobs = jobs;
        cfg.stability_probe = Some(2 * n as u32 + 2);
        let report = spectrum_report(&cfg)?;
        let failures = if report.passed() {
            Vec::new()
        } else {
            vec![format!(
                "found {:?}, expected {:?}, probe {:?}",
                report.found, report.expected, report.probe
            )]
        };
        checks.push(Check::new(format!("spectrum of rank {n}"), failures, 1));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn chains_suite_passes() {
        assert!(chains().unwrap().iter().all(|c| c.passed));
    }
}
