use std::time::Instant;

use gradekit::catalog::{entries, splitting_context};
use gradekit::grading::{run_instance, InstanceRequest, Outcome, Which};

#[test]
fn every_catalog_instance_passes() {
    for e in entries() {
        let (g, n) = e.build().unwrap();
        for &p in e.primes {
            let t = Instant::now();
            let ctx = splitting_context(&g, &n, p, 0).unwrap();
            let req = InstanceRequest {
                l: None,
                s: None,
                which: Which::All,
                seed: 0,
            };
            let reports = run_instance(&ctx, &req).unwrap();
            let outcomes: Vec<Outcome> = reports.iter().map(|r| r.outcome()).collect();
            println!("{} p={p} k={} {:?} {:?}", e.name, ctx.field().degree(), outcomes, t.elapsed());
            for r in &reports {
                assert!(
                    matches!(r.outcome(), Outcome::Pass | Outcome::NotApplicable),
                    "{}",
                    r.to_json()
                );
            }
        }
    }
}
