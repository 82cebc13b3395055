//! Seeded random instances for property sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gauss::{GaussCode, Passage, Sign};
use crate::ribbon::{Handle, RibbonData};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sign(rng: &mut impl Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// A uniformly shuffled code with `crossings` crossings cut into
/// `components` components. Components may be empty.
pub fn random_code_with(rng: &mut impl Rng, crossings: usize, components: usize) -> GaussCode {
    let mut passages = Vec::with_capacity(2 * crossings);
    for id in 1..=crossings as u32 {
        let s = sign(rng);
        passages.push(Passage::over(id, s));
        passages.push(Passage::under(id, s));
    }
    passages.shuffle(rng);
    let components = components.max(1);
    let mut cuts: Vec<usize> = (0..components - 1).map(|_| rng.gen_range(0..=passages.len())).collect();
    cuts.sort_unstable();
    cuts.push(passages.len());
    let mut out = Vec::with_capacity(components);
    let mut from = 0;
    for c in cuts {
        out.push(passages[from..c].to_vec());
        from = c;
    }
    GaussCode::new(out).expect("every crossing has one over and one under passage of equal sign")
}

/// A code with at most `max_crossings` crossings; two components one time
/// in four.
pub fn random_code(rng: &mut impl Rng, max_crossings: usize) -> GaussCode {
    let crossings = rng.gen_range(0..=max_crossings);
    let components = if rng.gen_range(0..4) == 0 { 2 } else { 1 };
    random_code_with(rng, crossings, components)
}

pub fn random_knot(rng: &mut impl Rng, max_crossings: usize) -> GaussCode {
    let crossings = rng.gen_range(0..=max_crossings);
    random_code_with(rng, crossings, 1)
}

/// Connected ribbon data: a random spanning tree on the bases plus extra
/// handles, each with a random passage word.
pub fn random_ribbon(rng: &mut impl Rng, max_bases: usize, max_handles: usize, max_word: usize) -> RibbonData {
    let bases = rng.gen_range(1..=max_bases.max(1));
    let total = rng.gen_range(bases - 1..=max_handles.max(bases - 1));
    let mut handles = Vec::with_capacity(total);
    for k in 2..=bases {
        let other = rng.gen_range(1..k);
        let (start, end) = if rng.gen_bool(0.5) { (k, other) } else { (other, k) };
        handles.push((start, end));
    }
    while handles.len() < total {
        handles.push((rng.gen_range(1..=bases), rng.gen_range(1..=bases)));
    }
    handles.shuffle(rng);
    let handles = handles
        .into_iter()
        .map(|(start, end)| {
            let len = rng.gen_range(0..=max_word);
            let passes = (0..len).map(|_| (rng.gen_range(1..=bases), sign(rng).to_i8())).collect();
            Handle { start, passes, end }
        })
        .collect();
    RibbonData::new(bases, handles).expect("spanning tree keeps the data connected")
}
