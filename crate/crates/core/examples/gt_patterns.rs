//! Gelfand-Tsetlin patterns, the left/right/special statistics, and the
//! per-entry weights w and d.

use hlgt::gt;
use hlgt::Partition;

fn main() {
    let top = Partition::from([3, 1, 0]);
    let strict = gt::enumerate_gt_patterns(&top, true).unwrap();
    let all = gt::enumerate_gt_patterns(&top, false).unwrap();
    println!("top row {top}: {} patterns, {} strict\n", all.len(), strict.len());

    for t in &strict {
        let s = t.classic_stats();
        println!("{t}m = {:?}  l = {}  r = {}  z = {}\n", t.weight_m(), s.left, s.right, s.special);
    }

    let alpha = Partition::from([5, 3, 1]);
    println!("GT2{alpha}:");
    for mu in gt::enumerate_gt2(&alpha).unwrap() {
        let labels: Vec<String> = (0..mu.len())
            .map(|i| {
                let lab = gt::entry_properties(&alpha, &mu, i).unwrap();
                let w = gt::stat_w(&alpha, &mu, i).unwrap();
                format!("{}:{}/{} w={w}", mu[i], lab.left, lab.right)
            })
            .collect();
        println!("  {mu}  d = {}  [{}]", gt::stat_d(&alpha, &mu, 1).unwrap(), labels.join(", "));
    }
}
