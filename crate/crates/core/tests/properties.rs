use joinortho::cli::{enumerate_pairs, Bounds};
use joinortho::compat::{d_exact, dtilde_constructive, dtilde_exact, validate_witness};
use joinortho::suitability::{assess, iota_max, thm1_condition_iv};
use joinortho::classifier::{AjoStatus, Classifier};
use joinortho::IntTuple;

fn domain(max_total: u32, max_l: usize) -> Vec<(IntTuple, IntTuple)> {
    enumerate_pairs(&Bounds {
        max_total,
        max_k: max_l,
        max_l,
        k: None,
        l: None,
    })
}

#[test]
fn dtilde_members_respect_the_necessary_conditions() {
    for (m, n) in domain(8, 5) {
        if m.total() != n.total() {
            continue;
        }
        let out = dtilde_exact(&m, &n, u64::MAX);
        if !out.is_member() {
            continue;
        }
        assert_eq!(validate_witness(out.witness.as_ref().unwrap()), Ok(()));
        let (k, l) = (m.len(), n.len());
        let psi = l.div_ceil(k) as u32;
        assert!(m.all_at_least(psi), "{m} {n}");
        if k < l {
            assert!(n.iota() as u64 <= iota_max(k, l).unwrap(), "{m} {n}");
        }
    }
}

#[test]
fn constructive_implies_exact() {
    for (m, n) in domain(7, 5) {
        if let Some(w) = dtilde_constructive(&m, &n) {
            assert_eq!(validate_witness(&w), Ok(()));
            assert!(d_exact(&m, &n, u64::MAX).is_member(), "{m} {n}");
        }
    }
}

#[test]
fn d_members_satisfy_condition_iv() {
    for (m, n) in domain(7, 5) {
        let out = d_exact(&m, &n, u64::MAX);
        if out.is_member() {
            let w = out.witness.unwrap();
            assert_eq!(validate_witness(&w), Ok(()));
            assert!(thm1_condition_iv(&m, &n), "{m} {n}");
        }
    }
}

#[test]
fn dtilde_growth_by_unit_pairs() {
    for (m, n) in domain(6, 4) {
        if m.total() != n.total() || !dtilde_exact(&m, &n, u64::MAX).is_member() {
            continue;
        }
        for i in 0..m.len() {
            for j in 0..n.len() {
                let mm = m.add(&IntTuple::unit(m.len(), i));
                let nn = n.add(&IntTuple::unit(n.len(), j));
                assert!(dtilde_exact(&mm, &nn, u64::MAX).is_member(), "{mm} {nn}");
            }
        }
    }
}

#[test]
fn verification_mode_cascade_over_domain() {
    let c = Classifier::verifying(u64::MAX);
    for (m, n) in domain(7, 5) {
        let v = c.classify(&m, &n);
        assert_ne!(v.ajo, AjoStatus::Unknown, "{m} {n}");
        assert!(v.ajo != AjoStatus::Yes || v.sjo);
        if v.ajo == AjoStatus::Yes {
            assert!(assess(&m, &n).weak);
        }
    }
}

#[test]
fn unsorted_inputs_match_sorted() {
    let cases = [
        ("1,3,1,1", "2,2,2"),
        ("1,2,1,2", "2,2"),
        ("2,3,2", "1,2,3,1"),
        ("1,1,1,1,1,3", "2,2,2,2"),
    ];
    let c = Classifier::new(u64::MAX);
    for (a, b) in cases {
        let (m, n): (IntTuple, IntTuple) = (a.parse().unwrap(), b.parse().unwrap());
        let v = c.classify(&m, &n);
        let s = c.classify(&m.sorted_tuple(), &n.sorted_tuple());
        assert_eq!(v.ajo, s.ajo, "{m} {n}");
        if let Some(w) = v.witness {
            assert_eq!(validate_witness(&w), Ok(()));
            assert_eq!((w.m, w.n), (m, n));
        }
    }
}
