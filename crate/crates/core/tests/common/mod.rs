#![allow(dead_code)]

use crystals::tableau::Partition;

/// Every partition with `1 <= |λ| <= 6` and `n = 2, 3, 4` parts (zeros allowed).
pub fn corpus() -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for size in 1..=6 {
            out.extend(Partition::all_of_size(size, n));
        }
    }
    out
}

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}
