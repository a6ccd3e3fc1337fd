//! Closed-form bound calculators. All integer arithmetic, no floats.

use crate::error::{Error, Result};
use serde::Serialize;

/// Maximal size of a set of arcs pairwise intersecting at most once:
/// 2|chi|(|chi|+1).
pub fn one_system_bound(abs_chi: u64) -> u64 {
    2 * abs_chi * (abs_chi + 1)
}

/// Maximal size of a set of pairwise disjoint arcs: 3|chi|.
pub fn disjoint_bound(abs_chi: u64) -> u64 {
    3 * abs_chi
}

/// Maximal size of a disjoint set of arcs joining one part of a puncture
/// partition to the other: 2|chi|.
pub fn bipartite_disjoint_bound(abs_chi: u64) -> u64 {
    2 * abs_chi
}

/// Bound for closed curves pairwise intersecting at most once:
/// g(2f(|chi|)+1) + |chi| - 1.
pub fn curve_one_system_bound(genus: u64, abs_chi: u64) -> u64 {
    genus * (2 * one_system_bound(abs_chi) + 1) + abs_chi - 1
}

/// Maximal size with both endpoints pinned to chosen punctures of a
/// punctured sphere: |chi|(|chi|+1)/2.
pub fn fixed_endpoints_bound(abs_chi: u64) -> u64 {
    abs_chi * (abs_chi + 1) / 2
}

/// Lower bound attained by the concentric construction:
/// (|chi|/(k+1) + 1)^(k+1) - 1. Requires (k+1) | |chi|.
pub fn k_system_lower_bound(abs_chi: u64, k: u64) -> Result<u64> {
    let parts = k + 1;
    if abs_chi % parts != 0 {
        return Err(Error::DivisibilityError { divisor: parts, value: abs_chi });
    }
    Ok((abs_chi / parts + 1).pow(parts as u32) - 1)
}

/// Multiplicity bound for the ideal triangles spanned at cusps by
/// consecutive arcs of a 1-system: 2(|chi|+1).
pub fn overlap_bound(abs_chi: u64) -> u64 {
    2 * (abs_chi + 1)
}

/// Maximal size of a family of pairwise intersecting chords (degenerate
/// chords allowed) on l circle points: l.
pub fn chord_family_bound(l: u64) -> u64 {
    l
}

/// Growth degrees in |chi| for arc and curve systems with at most k
/// pairwise intersections: (k+1, k^2+k+1).
pub fn growth_degrees(k: u64) -> (u64, u64) {
    (k + 1, k * k + k + 1)
}

/// Parameters accepted by the named-formula evaluator.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundQuery {
    pub abs_chi: u64,
    pub k: Option<u64>,
    pub genus: Option<u64>,
    pub points: Option<u64>,
}

/// Evaluate a formula by CLI name. `degrees` yields the arc degree;
/// `curve-degree` the curve degree.
pub fn evaluate(name: &str, q: &BoundQuery) -> Result<u64> {
    let need_k = || q.k.ok_or_else(|| Error::InvalidInput(format!("formula '{name}' needs --k")));
    let need_g =
        || q.genus.ok_or_else(|| Error::InvalidInput(format!("formula '{name}' needs --genus")));
    match name {
        "one-system" => Ok(one_system_bound(q.abs_chi)),
        "disjoint" => Ok(disjoint_bound(q.abs_chi)),
        "bipartite-disjoint" => Ok(bipartite_disjoint_bound(q.abs_chi)),
        "curve-one-system" => Ok(curve_one_system_bound(need_g()?, q.abs_chi)),
        "fixed-endpoints" => Ok(fixed_endpoints_bound(q.abs_chi)),
        "k-system-lower" => k_system_lower_bound(q.abs_chi, need_k()?),
        "overlap" => Ok(overlap_bound(q.abs_chi)),
        "chord-family" => {
            let l = q.points.ok_or_else(|| {
                Error::InvalidInput("formula 'chord-family' needs --points".into())
            })?;
            Ok(chord_family_bound(l))
        }
        "arc-degree" => Ok(growth_degrees(need_k()?).0),
        "curve-degree" => Ok(growth_degrees(need_k()?).1),
        other => Err(Error::InvalidInput(format!("unknown formula '{other}'"))),
    }
}
