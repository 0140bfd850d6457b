mod common;

use common::{alg, brute_cyclic, min_rotation, Factors, Oracle};
use nakayama::{
    epsilon, iterate_cyclic, necklace_count, validate, Algebra, Dim, SearchConfig, UniserialModule,
};

fn to_module(f: &Factors) -> UniserialModule {
    UniserialModule::new(f[0] + 1, f.len() as u32)
}

fn to_factors(a: &Algebra, m: UniserialModule) -> Factors {
    (0..m.length as usize)
        .map(|k| (m.top - 1 + k) % a.rank())
        .collect()
}

fn compare(a: &Algebra) {
    let o = Oracle::new(a.series());
    for f in o.modules() {
        let m = to_module(f);
        assert_eq!(a.pdim(m).unwrap(), o.pdim(f), "pdim of {m} over {a}");
        assert_eq!(
            a.is_injective(m).unwrap(),
            o.is_injective(f),
            "{m} over {a}"
        );
        assert_eq!(
            a.is_projective(m).unwrap(),
            o.is_projective(f),
            "{m} over {a}"
        );
        let syz = a.syzygy(m).unwrap().map(|k| to_factors(a, k));
        assert_eq!(syz, o.syzygy(f), "syzygy of {m} over {a}");
        let cosyz = a.cosyzygy(m).unwrap().map(|k| to_factors(a, k));
        assert_eq!(cosyz, o.cosyzygy(f), "cosyzygy of {m} over {a}");
    }
    for j in 1..=a.rank() {
        let e = a.injective_envelope(j).unwrap();
        assert_eq!(
            to_factors(a, e),
            o.envelope(&vec![j - 1]),
            "envelope of S_{j} over {a}"
        );
    }
    assert_eq!(a.gldim(), o.gldim_all_modules(), "gldim of {a}");
    assert_eq!(a.domdim(), o.domdim(), "domdim of {a}");
    assert_eq!(a.findim(), o.findim(), "findim of {a}");
    assert_eq!(a.defect(), o.defect(), "defect of {a}");
    let per_projective: usize = (1..=a.rank())
        .map(|i| a.defect_of_projective(i).unwrap())
        .sum();
    assert_eq!(per_projective, a.defect(), "defect sum of {a}");
    if a.is_cyclic() {
        let e = epsilon(a).unwrap();
        assert_eq!(
            min_rotation(e.series()),
            min_rotation(&o.epsilon()),
            "epsilon of {a}"
        );
    }
}

#[test]
fn cyclic_algebras_agree_with_module_census() {
    let mut count = 0;
    for n in 1..=5 {
        for s in brute_cyclic(n, 8) {
            compare(&alg(&s));
            count += 1;
        }
    }
    assert!(count > 200, "only {count} algebras checked");
}

/// Independent reading of the validity rule for series containing 1s.
fn valid_with_ones(c: &[u32]) -> bool {
    let n = c.len();
    c.iter().all(|&x| x >= 1)
        && (0..n).all(|i| c[i] <= c[(i + 1) % n] + 1)
        && (!c.contains(&1) || c[n - 1] == 1)
}

#[test]
fn algebras_with_linear_components_agree_with_module_census() {
    let mut count = 0;
    for n in 1..=7usize {
        for mut code in 0..5usize.pow(n as u32) {
            let mut c = vec![0u32; n];
            for x in c.iter_mut() {
                *x = 1 + (code % 5) as u32;
                code /= 5;
            }
            if !c.contains(&1) {
                continue;
            }
            let parsed = validate(&c);
            assert_eq!(parsed.is_ok(), valid_with_ones(&c), "{c:?}");
            if let Ok(a) = parsed {
                compare(&a);
                count += 1;
            }
        }
    }
    assert!(count > 100, "only {count} algebras checked");
}

#[test]
fn enumeration_matches_filtered_cube() {
    for n in 1..=6 {
        for max in 2..=(if n <= 4 { 9 } else { 7 }) {
            let mut cfg = SearchConfig::new(n);
            cfg.max_entry = max;
            let got: Vec<Vec<u32>> = iterate_cyclic(&cfg).map(|a| a.series().to_vec()).collect();
            let want: Vec<Vec<u32>> = brute_cyclic(n, max).into_iter().collect();
            let mut sorted = got.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), got.len(), "duplicates for n={n}, max={max}");
            let canon: Vec<Vec<u32>> = {
                let mut v: Vec<Vec<u32>> = got.iter().map(|s| min_rotation(s)).collect();
                v.sort();
                v
            };
            assert_eq!(canon, want, "n={n}, max={max}");
        }
    }
}

#[test]
fn necklaces_match_burnside_enumeration() {
    for t in 1..=3u64 {
        for n in 1..=8u32 {
            let mut seen = std::collections::BTreeSet::new();
            for mut code in 0..t.pow(n) {
                let mut w = vec![0u32; n as usize];
                for x in w.iter_mut() {
                    *x = (code % t) as u32;
                    code /= t;
                }
                seen.insert(min_rotation(&w));
            }
            assert_eq!(
                necklace_count(t, n).unwrap(),
                seen.len() as u128,
                "t={t}, n={n}"
            );
        }
    }
}

#[test]
fn dominant_dimension_is_positive_unless_semisimple() {
    for n in 1..=5 {
        for s in brute_cyclic(n, 7) {
            let a = alg(&s);
            assert!(a.domdim() >= Dim::Finite(1), "{a}");
            assert_eq!(a.domdim() == Dim::Infinite, a.is_self_injective(), "{a}");
        }
    }
}
