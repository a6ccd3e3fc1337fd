//! Pairwise intersecting chords on circle points, with the interval
//! certificate extracted from the one-dimensional Helly property.
//!
//! Convention: chords intersect when they share an endpoint or their
//! endpoint pairs strictly interleave in the cyclic order; a degenerate
//! chord {p, p} intersects exactly the chords having p as an endpoint.

use crate::clique::{max_clique, Graph};
use crate::error::{Error, Result};
use serde::Serialize;

/// Largest point count for which the exhaustive search is run.
pub const EXHAUSTIVE_BOUND: usize = 8;

/// Points 0..l-1 on a circle plus a set of chords, degenerate ones allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordFamily {
    pub points: usize,
    pub chords: Vec<(usize, usize)>,
}

impl ChordFamily {
    pub fn new(points: usize, chords: Vec<(usize, usize)>) -> Result<Self> {
        let mut normalized: Vec<(usize, usize)> =
            chords.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        normalized.sort_unstable();
        let before = normalized.len();
        normalized.dedup();
        if normalized.len() != before {
            return Err(Error::InvalidInput("duplicate chords in family".into()));
        }
        for &(a, b) in &normalized {
            if b >= points {
                return Err(Error::InvalidInput(format!(
                    "chord ({a},{b}) outside 0..{points}"
                )));
            }
        }
        Ok(ChordFamily { points, chords: normalized })
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn is_pairwise_intersecting(&self) -> bool {
        self.offending_pair().is_none()
    }

    fn offending_pair(&self) -> Option<((usize, usize), (usize, usize))> {
        for (i, &c1) in self.chords.iter().enumerate() {
            for &c2 in &self.chords[i + 1..] {
                if !chords_intersect(c1, c2, self.points) {
                    return Some((c1, c2));
                }
            }
        }
        None
    }
}

/// Shared endpoint, or strict interleaving around the circle.
pub fn chords_intersect(c1: (usize, usize), c2: (usize, usize), l: usize) -> bool {
    let (a, b) = (c1.0.min(c1.1), c1.0.max(c1.1));
    let (c, d) = (c2.0.min(c2.1), c2.0.max(c2.1));
    debug_assert!(b < l && d < l);
    if a == c || a == d || b == c || b == d {
        return true;
    }
    // strict interleaving: exactly one of c, d inside the arc (a, b)
    let inside = |x: usize| x > a && x < b;
    inside(c) != inside(d)
}

/// All chords on l points including degenerate ones, in lexicographic order.
pub fn all_chords(l: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(l * (l + 1) / 2);
    for a in 0..l {
        for b in a..l {
            v.push((a, b));
        }
    }
    v
}

/// Exhaustively find a maximum family of pairwise intersecting chords.
pub fn max_pairwise_family(l: usize) -> Result<ChordFamily> {
    if l == 0 || l > EXHAUSTIVE_BOUND {
        return Err(Error::TooLarge(l, EXHAUSTIVE_BOUND));
    }
    let universe = all_chords(l);
    let mut g = Graph::new(universe.len());
    for i in 0..universe.len() {
        for j in i + 1..universe.len() {
            if chords_intersect(universe[i], universe[j], l) {
                g.add_edge(i, j);
            }
        }
    }
    let clique = max_clique(&g, None)?;
    let chords = clique.into_iter().map(|i| universe[i]).collect();
    ChordFamily::new(l, chords)
}

/// Certificate extracted from the interval picture: a common integer point
/// of all intervals, plus the doubled interval centers, which are pairwise
/// distinct for a pairwise-intersecting family.
#[derive(Clone, Debug, Serialize)]
pub struct HellyCertificate {
    pub common_point: usize,
    pub doubled_centers: Vec<usize>,
}

/// Map chords to intervals of the line through the cyclic labeling and
/// return a common point. Intersecting chords give intersecting intervals,
/// so the max-of-left-endpoints lies in every interval; distinct chords of a
/// pairwise-intersecting family never share a center, since equal-center
/// nested intervals come from disjoint chords.
pub fn helly_certificate(fam: &ChordFamily) -> Result<HellyCertificate> {
    if let Some((c1, c2)) = fam.offending_pair() {
        return Err(Error::NotPairwiseIntersecting(c1, c2));
    }
    if fam.chords.is_empty() {
        return Err(Error::InvalidInput("empty chord family".into()));
    }
    let common_point = fam.chords.iter().map(|&(a, _)| a).max().unwrap();
    let right = fam.chords.iter().map(|&(_, b)| b).min().unwrap();
    assert!(common_point <= right, "pairwise-intersecting intervals must share a point");
    let mut doubled_centers: Vec<usize> = fam.chords.iter().map(|&(a, b)| a + b).collect();
    doubled_centers.sort_unstable();
    let deduped = {
        let mut d = doubled_centers.clone();
        d.dedup();
        d
    };
    assert_eq!(
        deduped.len(),
        doubled_centers.len(),
        "chords of a pairwise-intersecting family have pairwise distinct centers"
    );
    Ok(HellyCertificate { common_point, doubled_centers })
}
