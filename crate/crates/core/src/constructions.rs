//! Generators for the extremal arc configurations on standard gluings.
//!
//! Planar constructions are pinned to the standard planar gluing
//! a1 A1 ... am Am, drawn as a star of m disjoint rays from a common
//! puncture p (the cusp of corner 0) to the remaining punctures; the ray to
//! the distinguished far puncture p' is the last letter, and corner cycles
//! fix the clockwise order of rays around p. Arcs described by pictures are
//! traced across this star, the crossings recorded, and the itineraries
//! canonicalized; sizes and pairwise bounds are then verified against the
//! closed forms.

use crate::arcs::{canonicalize, CanonicalArc, Itinerary};
use crate::error::{Error, Result};
use crate::formulas;
use crate::surface::{standard_planar_gluing, Crossing, SurfaceGluing};
use crate::systems::ArcSystem;
use std::collections::BTreeSet;

fn side_arc(g: &SurfaceGluing, letter: u8) -> Result<CanonicalArc> {
    let p = g.position_of(Crossing { letter, upper: false }).unwrap();
    let p_star = p.min(g.partner(p));
    canonicalize(g, &Itinerary::new(p_star, Vec::new(), p_star + 1))
}

fn side_arcs(g: &SurfaceGluing) -> Result<Vec<CanonicalArc>> {
    g.letters().into_iter().map(|l| side_arc(g, l)).collect()
}

fn adjacent(n: usize, a: usize, b: usize) -> bool {
    (a + 1) % n == b || (b + 1) % n == a
}

fn collect_distinct(
    g: &SurfaceGluing,
    arcs: Vec<CanonicalArc>,
    expected: usize,
    what: &str,
) -> Result<Vec<CanonicalArc>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in arcs {
        if seen.insert(a.itinerary().clone()) {
            out.push(a);
        }
    }
    if out.len() != expected {
        return Err(Error::DegenerateSystem(format!(
            "{what} on {g}: expected {expected} distinct arcs, got {}",
            out.len()
        )));
    }
    Ok(out)
}

/// All diagonals of the polygon together with the glued sides; a 1-system
/// of size 2|chi|(|chi|+1) on any accepted gluing.
pub fn ideal_polygon_system(g: &SurfaceGluing) -> Result<ArcSystem> {
    let n = g.num_corners();
    let mut arcs = side_arcs(g)?;
    for a in 0..n {
        for b in a + 1..n {
            if !adjacent(n, a, b) {
                arcs.push(canonicalize(g, &Itinerary::new(a, Vec::new(), b))?);
            }
        }
    }
    let expected = formulas::one_system_bound(g.abs_chi() as u64) as usize;
    let arcs = collect_distinct(g, arcs, expected, "polygon system")?;
    ArcSystem::new(g.clone(), arcs)
}

/// The glued sides plus the fan of diagonals from corner 0: 3|chi| pairwise
/// disjoint arcs.
pub fn triangulation_system(g: &SurfaceGluing) -> Result<ArcSystem> {
    let n = g.num_corners();
    let mut arcs = side_arcs(g)?;
    for b in 2..n - 1 {
        arcs.push(canonicalize(g, &Itinerary::new(0, Vec::new(), b))?);
    }
    let expected = formulas::disjoint_bound(g.abs_chi() as u64) as usize;
    let arcs = collect_distinct(g, arcs, expected, "triangulation system")?;
    ArcSystem::new(g.clone(), arcs)
}

/// Concentric construction: on the (|chi|+2)-punctured sphere with the
/// middle punctures split over k+1 concentric circles between p and p',
/// the arcs from p to p' crossing each circle once and avoiding a fixed
/// reference arc. Pairwise at most k crossings; size
/// (|chi|/(k+1)+1)^(k+1) - 1.
///
/// Tracing: middle puncture j sits on circle j/c + 1 at angular station
/// 2(j+1), the reference cut at station 0, and crossing slots just past a
/// station; between consecutive circles an arc sweeps monotonically between
/// its slots, crossing the rays of punctures on higher circles. Sweeps of
/// increasing station cross rays in the lowercase direction.
pub fn concentric_system(abs_chi: usize, k: usize) -> Result<ArcSystem> {
    let parts = k + 1;
    if abs_chi % parts != 0 {
        return Err(Error::DivisibilityError { divisor: parts as u64, value: abs_chi as u64 });
    }
    let per_circle = abs_chi / parts;
    let g = standard_planar_gluing(abs_chi)?;
    let m = abs_chi + 1;
    let n = 2 * m;

    let station = |j: usize| 2 * (j + 1) as i64;
    // slot g on circle s (1-based): 0 is just past the reference cut,
    // g >= 1 just past the (g-1)-th puncture of the circle
    let slot = |s: usize, gap: usize| -> i64 {
        if gap == 0 {
            1
        } else {
            2 * ((s - 1) * per_circle + gap) as i64 + 1
        }
    };

    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..parts {
        let mut next = Vec::new();
        for t in &tuples {
            for gap in 0..=per_circle {
                let mut t2 = t.clone();
                t2.push(gap);
                next.push(t2);
            }
        }
        tuples = next;
    }

    let mut arcs = Vec::new();
    for t in &tuples {
        let start = 2 * t[0];
        let mut word = Vec::new();
        for s in 1..parts {
            let from = slot(s, t[s - 1]);
            let to = slot(s + 1, t[s]);
            // rays reaching past circle s
            let mut crossed: Vec<usize> = (s * per_circle..=m.saturating_sub(2))
                .filter(|&j| {
                    let a = station(j);
                    a > from.min(to) && a < from.max(to)
                })
                .collect();
            crossed.sort_by_key(|&j| station(j));
            let upper = to < from;
            if upper {
                crossed.reverse();
            }
            for j in crossed {
                word.push(Crossing { letter: j as u8, upper });
            }
        }
        arcs.push(canonicalize(&g, &Itinerary::new(start, word, n - 1))?);
    }

    let expected = formulas::k_system_lower_bound(abs_chi as u64, k as u64)? as usize;
    let arcs = collect_distinct(&g, arcs, expected, "concentric system")?;
    ArcSystem::new(g, arcs)
}

/// Arcs from p back to p: one for each unordered pair of cusp sectors at p,
/// realized by the diagonals joining the even corners of the standard
/// planar polygon. Size |chi|(|chi|+1)/2, pairwise at most one crossing.
pub fn same_puncture_system(abs_chi: usize) -> Result<ArcSystem> {
    let g = standard_planar_gluing(abs_chi)?;
    let m = abs_chi + 1;
    let mut arcs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            arcs.push(canonicalize(&g, &Itinerary::new(2 * i, Vec::new(), 2 * j))?);
        }
    }
    let expected = formulas::fixed_endpoints_bound(abs_chi as u64) as usize;
    let arcs = collect_distinct(&g, arcs, expected, "same-puncture system")?;
    ArcSystem::new(g, arcs)
}

/// Arcs from p to p' weaving along the chain of middle punctures: for each
/// pair of chain segments s1 < s2 the arc swaps sides of the chain at those
/// segments, passing the intermediate punctures on one side. Size
/// |chi|(|chi|+1)/2, pairwise at most one crossing.
pub fn two_puncture_system(abs_chi: usize) -> Result<ArcSystem> {
    let g = standard_planar_gluing(abs_chi)?;
    let m = abs_chi + 1;
    let n = 2 * m;
    let mut arcs = Vec::new();
    for s1 in 1..=m {
        for s2 in s1 + 1..=m {
            let word: Vec<Crossing> =
                (s1 - 1..s2 - 1).map(|j| Crossing { letter: j as u8, upper: false }).collect();
            arcs.push(canonicalize(&g, &Itinerary::new(0, word, n - 1))?);
        }
    }
    let expected = formulas::fixed_endpoints_bound(abs_chi as u64) as usize;
    let arcs = collect_distinct(&g, arcs, expected, "two-puncture system")?;
    ArcSystem::new(g, arcs)
}

/// Twelve arcs on the four-punctured sphere seen as the boundary of a
/// tetrahedron with its vertices removed: the six edges, plus for each edge
/// the arc joining the opposite vertices of the two adjacent faces through
/// the edge midpoint. A 1-system of size 12 distinct from the polygon
/// system.
pub fn tetrahedron_system() -> Result<ArcSystem> {
    let g = standard_planar_gluing(2)?;
    let texts: [&str; 12] = [
        // edges at the star vertex: the glued sides
        "side:a",
        "side:b",
        "side:c",
        // outer edges of the tetrahedron
        "c1::c3",
        "c3::c5",
        "c1::c5",
        // midpoint arcs through the star edges
        "c3:A:c5",
        "c1:b:c5",
        "c1:C:c3",
        // midpoint arcs through the outer edges
        "c2::c5",
        "c1::c4",
        "c0::c3",
    ];
    let mut arcs = Vec::new();
    for t in texts {
        arcs.push(crate::arcs::parse_arc(&g, t)?);
    }
    let arcs = collect_distinct(&g, arcs, 12, "tetrahedron system")?;
    ArcSystem::new(g, arcs)
}

/// CLI construction names.
pub const CONSTRUCTION_NAMES: [&str; 6] =
    ["polygon", "triangulation", "concentric", "same-puncture", "two-punctures", "tetrahedron"];
