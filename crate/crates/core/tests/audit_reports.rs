use accdom::audit::{GraphSource, KNOWN_FINDINGS};
use accdom::*;

fn range(id: FormulaId) -> std::ops::RangeInclusive<usize> {
    use FormulaId::*;
    match id {
        GammaAHypercube | DaHypercube => 1..=3,
        GammaALadder | GammaABook | DaBook => 2..=6,
        GammaAFriendship | DaFriendshipPrinted => 1..=3,
        GammaACorona | DaCoronaCount | CoronaPolyPrinted | CoronaPolyCorrected => 1..=4,
        Threshold => 1..=7,
        _ => 1..=9,
    }
}

#[test]
fn every_formula_audit_has_only_registered_violations() {
    let auditor = Auditor::default();
    for id in FormulaId::ALL {
        let report = auditor.formula(id, range(id)).unwrap();
        assert!(!report.records.is_empty(), "{id}");
        let unexpected = report.unexpected_violations();
        assert!(unexpected.is_empty(), "{id}: {unexpected:?}");
        assert_eq!(report.summary.values().sum::<usize>(), report.records.len());
    }
}

#[test]
fn every_bound_audit_has_only_registered_violations() {
    let auditor = Auditor::default();
    for id in BoundId::ALL {
        let report = auditor.bound(id, 1..=12).unwrap();
        assert!(report.unexpected_violations().is_empty(), "{id}");
        let direction_ok = report.records.iter().all(|r| match r.verdict {
            Verdict::LowerBoundHolds => id.direction() == Direction::Lower,
            Verdict::UpperBoundHolds => id.direction() == Direction::Upper,
            _ => true,
        });
        assert!(direction_ok, "{id}");
    }
}

#[test]
fn registered_findings_are_actually_observed() {
    let auditor = Auditor::default();
    let mut seen = std::collections::BTreeSet::new();
    for id in FormulaId::ALL {
        for r in auditor.formula(id, range(id)).unwrap().violations() {
            seen.insert(r.known_finding().unwrap().id);
        }
    }
    for id in BoundId::ALL {
        for r in auditor.bound(id, 1..=12).unwrap().violations() {
            seen.insert(r.known_finding().unwrap().id);
        }
    }
    for r in auditor.path_vs_cycle(1..=12).unwrap().violations() {
        seen.insert(r.known_finding().unwrap().id);
    }
    for r in auditor
        .llano_cycle_resolution(3..=9)
        .unwrap()
        .report
        .violations()
    {
        seen.insert(r.known_finding().unwrap().id);
    }
    // the Q_4 value needs d = 4, outside the ranges above
    let q4 = auditor.formula(FormulaId::GammaAHypercube, 4..=4).unwrap();
    for r in q4.violations() {
        seen.insert(r.known_finding().unwrap().id);
    }
    for f in KNOWN_FINDINGS {
        assert!(seen.contains(f.id), "finding {} never observed", f.id);
    }
}

#[test]
fn json_records_have_the_documented_shape() {
    let report = Auditor::default().bound(BoundId::PathUpper, 6..=8).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    let rec = &v["records"][0];
    let mut keys: Vec<&str> = rec
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        [
            "oracle_value",
            "point",
            "printed_value",
            "slack",
            "subject",
            "verdict"
        ]
    );
    assert!(rec["printed_value"].is_string());
    assert!(rec["slack"].is_string());
    for verdict in Verdict::ALL {
        assert!(
            v["summary"].get(verdict.name()).is_some(),
            "{}",
            verdict.name()
        );
    }
    let eq = Auditor::default()
        .formula(FormulaId::GammaAPath, 1..=3)
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&eq.to_json()).unwrap();
    assert!(v["records"][0]["slack"].is_null());
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let one = Auditor::new(Sweep::with_parts(1));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let four = Auditor::new(Sweep::with_parts(4));
    let a = one
        .bound(BoundId::CycleRecursiveLower, 3..=12)
        .unwrap()
        .to_json();
    let b = pool
        .install(|| four.bound(BoundId::CycleRecursiveLower, 3..=12))
        .unwrap()
        .to_json();
    assert_eq!(a, b);
    let source = GraphSource::Random {
        seed: 7,
        count: 30,
        orders: 4..=8,
    };
    let a = one.threshold_equality(&source).unwrap().to_json();
    let b = pool
        .install(|| four.threshold_equality(&source))
        .unwrap()
        .to_json();
    assert_eq!(a, b);
}

#[test]
fn records_are_sorted_by_point() {
    let report = Auditor::default().path_vs_cycle(3..=10).unwrap();
    assert!(report
        .records
        .windows(2)
        .all(|w| (&w[0].point, &w[0].subject) <= (&w[1].point, &w[1].subject)));
}

#[test]
fn oversized_bound_sweep_is_a_capacity_error() {
    let small = Auditor::new(Sweep {
        max_vertices: 10,
        parts: 1,
    });
    assert!(matches!(
        small.bound(BoundId::PathLower, 1..=12),
        Err(Error::Capacity { .. })
    ));
}
