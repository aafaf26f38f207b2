use nldim_core::verify::{run, CampaignParams, TheoremId};
use std::time::Instant;

fn main() {
    let params = CampaignParams::default();
    for id in TheoremId::ALL {
        let t = Instant::now();
        let r = run(id, &params);
        println!(
            "{:<7} instances {:>6} failures {:>2} skipped {:>2} status {:?} in {:?}",
            id.as_str(), r.instances, r.failures.len(), r.skipped.len(), r.status, t.elapsed()
        );
        for f in r.failures.iter().take(4) {
            println!("    FAIL [{}] {} expected {} actual {}", f.graph, f.context, f.expected, f.actual);
        }
    }
}
