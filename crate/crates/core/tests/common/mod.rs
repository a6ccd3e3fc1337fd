//! Shared helpers for the integration suites: seeded random itineraries and
//! homotopy moves used to probe the canonical form.

use arcsys_core::{canonicalize, CanonicalArc, Crossing, Itinerary, SurfaceGluing};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_symbol(g: &SurfaceGluing, rng: &mut ChaCha8Rng) -> Crossing {
    let pos = rng.gen_range(0..g.num_corners());
    g.symbol_at(pos)
}

/// A random raw itinerary with a freely reduced word of length <= max_len.
pub fn random_itinerary(g: &SurfaceGluing, max_len: usize, rng: &mut ChaCha8Rng) -> Itinerary {
    let n = g.num_corners();
    let len = rng.gen_range(0..=max_len);
    let mut word: Vec<Crossing> = Vec::with_capacity(len);
    while word.len() < len {
        let c = random_symbol(g, rng);
        if word.last() == Some(&c.inverse()) {
            continue;
        }
        word.push(c);
    }
    Itinerary::new(rng.gen_range(0..n), word, rng.gen_range(0..n))
}

/// Insert a crossing immediately undone, anywhere in the word.
pub fn bigon_move(g: &SurfaceGluing, itin: &Itinerary, rng: &mut ChaCha8Rng) -> Itinerary {
    let mut word = itin.word.clone();
    let at = rng.gen_range(0..=word.len());
    let c = random_symbol(g, rng);
    word.insert(at, c.inverse());
    word.insert(at, c);
    Itinerary::new(itin.start, word, itin.end)
}

/// Push the end of the path across one of the two sides incident to its end
/// corner; the inverse of end reduction.
pub fn end_push_move(g: &SurfaceGluing, itin: &Itinerary, rng: &mut ChaCha8Rng) -> Itinerary {
    let n = g.num_corners();
    let flip = rng.gen_bool(0.5);
    let base = if flip { itin.reversed() } else { itin.clone() };
    let end = base.end;
    let (p, new_end) = if rng.gen_bool(0.5) {
        (end, (g.partner(end) + 1) % n)
    } else {
        let p = (end + n - 1) % n;
        (p, g.partner(p))
    };
    let mut word = base.word;
    word.push(g.symbol_at(p));
    let pushed = Itinerary::new(base.start, word, new_end);
    if flip {
        pushed.reversed()
    } else {
        pushed
    }
}

pub fn random_move(g: &SurfaceGluing, itin: &Itinerary, rng: &mut ChaCha8Rng) -> Itinerary {
    if rng.gen_bool(0.5) {
        bigon_move(g, itin, rng)
    } else {
        end_push_move(g, itin, rng)
    }
}

/// A pool of distinct canonical simple essential arcs drawn from random
/// itineraries.
pub fn sample_arcs(
    g: &SurfaceGluing,
    max_len: usize,
    attempts: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<CanonicalArc> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..attempts {
        let raw = random_itinerary(g, max_len, rng);
        let arc = canonicalize(g, &raw).expect("valid raw itinerary");
        if !arcsys_core::is_essential(g, &arc) {
            continue;
        }
        if arcsys_core::self_intersection(g, &arc).unwrap() > 0 {
            continue;
        }
        if seen.insert(arc.itinerary().clone()) {
            out.push(arc);
        }
    }
    out
}
