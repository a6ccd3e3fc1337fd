//! The universal cover of a polygon gluing as a tree of tiles.
//!
//! Cutting the surface along its side arcs tiles the universal cover by
//! copies of the polygon. Since the fundamental group of a punctured surface
//! is free on the side pairings, the adjacency graph of tiles is a tree:
//! tiles are reduced words over the oriented side symbols, and crossing out
//! of a tile through a side appends that side's symbol.
//!
//! Ideal vertices of the tiling are orbits of (tile, corner) pairs under the
//! side matching; each orbit is a line of tiles (the fan around the ideal
//! point) and has a unique representative whose tile word is shortest. The
//! circular order of ideal points on the boundary of the tree is computed
//! through integer addresses: walking from the base tile, each step records
//! the counterclockwise position of the branch taken (or of the final
//! corner) relative to the side through which the tile was entered.

use crate::surface::{Crossing, SurfaceGluing};
use std::cmp::Ordering;

/// A tile of the universal cover: a reduced word in the side symbols.
pub type Tile = Vec<Crossing>;

/// Product of reduced words, with cancellation at the seam.
pub fn mul(a: &[Crossing], b: &[Crossing]) -> Tile {
    let mut out: Tile = a.to_vec();
    for &c in b {
        if out.last() == Some(&c.inverse()) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

/// Inverse of a reduced word.
pub fn inv(a: &[Crossing]) -> Tile {
    a.iter().rev().map(|c| c.inverse()).collect()
}

/// An ideal vertex of the tiling, stored as the fan-minimal representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdealPoint {
    pub tile: Tile,
    pub corner: usize,
}

/// Transport (tile, corner) across the side that starts at the corner.
/// Rotates one step around the ideal point.
pub fn fan_next(g: &SurfaceGluing, tile: &[Crossing], corner: usize) -> (Tile, usize) {
    let n = g.num_corners();
    let sym = g.symbol_at(corner);
    let q = g.partner(corner);
    (mul(tile, &[sym]), (q + 1) % n)
}

/// Transport (tile, corner) across the side that ends at the corner.
pub fn fan_prev(g: &SurfaceGluing, tile: &[Crossing], corner: usize) -> (Tile, usize) {
    let n = g.num_corners();
    let p = (corner + n - 1) % n;
    let sym = g.symbol_at(p);
    let q = g.partner(p);
    (mul(tile, &[sym]), q)
}

impl IdealPoint {
    /// Canonical representative: walk the fan toward the base tile while the
    /// word shortens. Tile distances along a fan line are strictly unimodal,
    /// so the greedy walk reaches the unique minimum.
    pub fn new(g: &SurfaceGluing, tile: Tile, corner: usize) -> Self {
        let mut cur = (tile, corner);
        loop {
            let next = fan_next(g, &cur.0, cur.1);
            if next.0.len() < cur.0.len() {
                cur = next;
                continue;
            }
            let prev = fan_prev(g, &cur.0, cur.1);
            if prev.0.len() < cur.0.len() {
                cur = prev;
                continue;
            }
            return IdealPoint { tile: cur.0, corner: cur.1 };
        }
    }

    /// Translate by a deck transformation and re-canonicalize.
    pub fn translated(&self, g: &SurfaceGluing, by: &[Crossing]) -> IdealPoint {
        IdealPoint::new(g, mul(by, &self.tile), self.corner)
    }
}

/// Counterclockwise position of side `p` among the boundary items of a tile
/// entered through side `q`. Items are enumerated starting just after the
/// entry side's start corner.
pub(crate) fn rel_side_index(n: usize, q: usize, p: usize) -> i64 {
    2 * (((p + n - q - 1) % n) as i64)
}

/// Counterclockwise position of corner `c` in the same frame. The entry
/// side's endpoints sort below and above every interior item.
pub(crate) fn rel_corner_index(n: usize, q: usize, c: usize) -> i64 {
    2 * (((c + n - q - 1) % n) as i64) - 1
}

/// Exact boundary address of an ideal point as seen from the base tile.
/// Lexicographic order of addresses is the circular order of the boundary
/// circle cut at corner 0 of the base tile.
pub fn boundary_address(g: &SurfaceGluing, p: &IdealPoint) -> Vec<i64> {
    let n = g.num_corners();
    let mut addr = Vec::with_capacity(p.tile.len() + 1);
    let mut entry: Option<usize> = None;
    for &sym in &p.tile {
        let pos = g.position_of(sym).expect("symbol of the surface");
        addr.push(match entry {
            None => 2 * pos as i64 + 1,
            Some(q) => rel_side_index(n, q, pos),
        });
        entry = Some(g.partner(pos));
    }
    addr.push(match entry {
        None => 2 * p.corner as i64,
        Some(q) => rel_corner_index(n, q, p.corner),
    });
    addr
}

/// Do the chords {a1, a2} and {b1, b2} of the boundary circle link?
/// Chords sharing an endpoint do not link.
pub fn link(g: &SurfaceGluing, a1: &IdealPoint, a2: &IdealPoint, b1: &IdealPoint, b2: &IdealPoint) -> bool {
    if a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 {
        return false;
    }
    let (mut lo, mut hi) = (boundary_address(g, a1), boundary_address(g, a2));
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let inside = |x: &Vec<i64>| *x > lo && *x < hi;
    let c1 = boundary_address(g, b1);
    let c2 = boundary_address(g, b2);
    inside(&c1) != inside(&c2)
}

/// Compare two ideal points in the boundary order (cut at corner 0 of the
/// base tile).
pub fn boundary_cmp(g: &SurfaceGluing, a: &IdealPoint, b: &IdealPoint) -> Ordering {
    boundary_address(g, a).cmp(&boundary_address(g, b))
}
