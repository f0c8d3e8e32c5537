use folding::constructions::*;
use folding::covering::li_patch_check;

fn main() {
    for (name, cov) in [
        ("pos16", positive_covering(16).unwrap()),
        ("pos32", positive_covering(32).unwrap()),
        ("alt16", alternating_covering(16).unwrap()),
        ("alt32", alternating_covering(32).unwrap()),
    ] {
        for k in [4i64, 6] {
            let r = li_patch_check(&cov, k);
            println!(
                "{name} k={k}: verdict={} rec={:?} uniform={} aligned={} classes={}",
                r.verdict, r.recurrence_window, r.uniform_type, r.aligned_levels,
                r.fingerprint_classes.len()
            );
        }
    }
}
