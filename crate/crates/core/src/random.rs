//! Seeded generators for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::cord::{Column, Cord, CordDiagram, EndKind, Endpoint, Slab};
use crate::diagram::{braid_closure, PlanarDiagram};
use crate::error::Result;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` cords with uniformly shuffled endpoints and random disjoint slabs.
pub fn random_cord_diagram(rng: &mut TestRng, n: usize) -> CordDiagram {
    let mut boundary: Vec<Endpoint> = (0..n)
        .flat_map(|c| [Endpoint { cord: c, kind: EndKind::Start }, Endpoint { cord: c, kind: EndKind::End }])
        .collect();
    boundary.shuffle(rng);
    let mut z = 0;
    let cords = (0..n)
        .map(|_| {
            let lo = z + rng.gen_range(0..2);
            let hi = lo + rng.gen_range(0..3);
            z = hi + 1;
            Cord::abstract_cord(Slab::new(lo, hi))
        })
        .collect();
    CordDiagram { column: Column { cx: 0, cy: 0 }, cords, boundary }
}

/// Closure of a random braid word on up to `max_strands` strands with
/// between 1 and `max_crossings` letters.
pub fn random_braid_diagram(rng: &mut TestRng, max_strands: usize, max_crossings: usize) -> Result<PlanarDiagram> {
    let strands = rng.gen_range(2..=max_strands.max(2));
    let len = rng.gen_range(1..=max_crossings.max(1));
    let word: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    braid_closure(strands, &word)
}
