//! Punctured oriented surfaces presented as an ideal polygon with glued sides.
//!
//! A gluing word such as `aAbB` lists the 2m oriented sides of a 2m-gon in
//! counterclockwise order. Case encodes direction: each letter appears exactly
//! once lowercase and once uppercase, which makes the identification
//! orientation-preserving. Corners of the polygon are ideal vertices; their
//! orbits under the side identifications are the cusps (punctures) of the
//! quotient surface.
//!
//! Conventions used throughout the crate:
//! - corner `i` lies counterclockwise-between side `i-1` and side `i`, so
//!   side `p` runs from corner `p` to corner `p+1` (indices mod 2m);
//! - gluing side `p` to its partner `q` identifies corner `p` with corner
//!   `q+1` and corner `p+1` with corner `q` (adjacent polygons induce
//!   opposite orientations on a shared side).

use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// An oriented side symbol: a side pair (letter) plus the direction crossed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Crossing {
    /// Letter index, 0 for 'a' through 25 for 'z'.
    pub letter: u8,
    /// True for the uppercase copy.
    pub upper: bool,
}

impl Crossing {
    pub fn from_char(c: char) -> Result<Self> {
        if c.is_ascii_lowercase() {
            Ok(Crossing { letter: c as u8 - b'a', upper: false })
        } else if c.is_ascii_uppercase() {
            Ok(Crossing { letter: c as u8 - b'A', upper: true })
        } else {
            Err(Error::BadCharacter(c))
        }
    }

    pub fn to_char(self) -> char {
        let base = if self.upper { b'A' } else { b'a' };
        (base + self.letter) as char
    }

    /// The same side pair crossed in the opposite direction.
    pub fn inverse(self) -> Self {
        Crossing { letter: self.letter, upper: !self.upper }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// An oriented punctured surface with chi < 0, presented as a 2m-gon with
/// paired sides. Immutable after construction.
#[derive(Clone, Debug)]
pub struct SurfaceGluing {
    text: String,
    word: Vec<Crossing>,
    m: usize,
    partner: Vec<usize>,
    /// letter -> (lowercase position, uppercase position)
    positions: [Option<(usize, usize)>; 26],
    cusp_of: Vec<usize>,
    cusp_cycles: Vec<Vec<usize>>,
    euler: i64,
    genus: usize,
}

impl PartialEq for SurfaceGluing {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}
impl Eq for SurfaceGluing {}

impl fmt::Display for SurfaceGluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text)
    }
}

/// Parse a gluing word and derive all invariants.
pub fn parse_gluing(text: &str) -> Result<SurfaceGluing> {
    let mut word = Vec::with_capacity(text.len());
    for c in text.chars() {
        word.push(Crossing::from_char(c)?);
    }

    let mut lower_count = [0usize; 26];
    let mut upper_count = [0usize; 26];
    for c in &word {
        if c.upper {
            upper_count[c.letter as usize] += 1;
        } else {
            lower_count[c.letter as usize] += 1;
        }
    }
    for l in 0u8..26 {
        let (lo, up) = (lower_count[l as usize], upper_count[l as usize]);
        if lo + up != 0 && lo + up != 2 {
            return Err(Error::UnpairedLetter((b'a' + l) as char));
        }
    }
    for l in 0u8..26 {
        let (lo, up) = (lower_count[l as usize], upper_count[l as usize]);
        if lo + up == 2 && lo != 1 {
            return Err(Error::NonOrientable((b'a' + l) as char));
        }
    }

    let m = word.len() / 2;
    let chi = 1 - m as i64;
    if chi >= 0 {
        return Err(Error::EulerTooLarge { pairs: m, chi });
    }

    let mut positions: [Option<(usize, usize)>; 26] = [None; 26];
    for (i, c) in word.iter().enumerate() {
        let slot = &mut positions[c.letter as usize];
        let (lo, up) = slot.unwrap_or((usize::MAX, usize::MAX));
        *slot = if c.upper { Some((lo, i)) } else { Some((i, up)) };
    }
    let n = word.len();
    let mut partner = vec![0usize; n];
    for (lo, up) in positions.iter().flatten() {
        partner[*lo] = *up;
        partner[*up] = *lo;
    }

    // Cusp cycles: rotating around a puncture, the corner after `c` is
    // reached by transporting corner c across side c.
    let mut cusp_of = vec![usize::MAX; n];
    let mut cusp_cycles = Vec::new();
    for start in 0..n {
        if cusp_of[start] != usize::MAX {
            continue;
        }
        let id = cusp_cycles.len();
        let mut cycle = Vec::new();
        let mut c = start;
        loop {
            cusp_of[c] = id;
            cycle.push(c);
            c = (partner[c] + 1) % n;
            if c == start {
                break;
            }
        }
        cusp_cycles.push(cycle);
    }

    let punctures = cusp_cycles.len();
    let two_minus = 2 - punctures as i64 - chi;
    assert!(
        two_minus >= 0 && two_minus % 2 == 0,
        "orientable gluing must have integral non-negative genus"
    );
    let genus = (two_minus / 2) as usize;

    Ok(SurfaceGluing {
        text: text.to_string(),
        word,
        m,
        partner,
        positions,
        cusp_of,
        cusp_cycles,
        euler: chi,
        genus,
    })
}

/// The sphere word a1 A1 a2 A2 ... am Am with m = abs_chi + 1 pairs.
/// Gives genus 0 and abs_chi + 2 punctures.
pub fn standard_planar_gluing(abs_chi: usize) -> Result<SurfaceGluing> {
    if abs_chi == 0 {
        return Err(Error::EulerTooLarge { pairs: 1, chi: 0 });
    }
    let m = abs_chi + 1;
    if m > 26 {
        return Err(Error::AlphabetExhausted);
    }
    let mut text = String::with_capacity(2 * m);
    for l in 0..m as u8 {
        text.push((b'a' + l) as char);
        text.push((b'A' + l) as char);
    }
    parse_gluing(&text)
}

impl SurfaceGluing {
    pub fn word_str(&self) -> &str {
        &self.text
    }

    pub fn word(&self) -> &[Crossing] {
        &self.word
    }

    /// Number of side pairs.
    pub fn side_pairs(&self) -> usize {
        self.m
    }

    /// Number of polygon sides (and corners), 2m.
    pub fn num_corners(&self) -> usize {
        2 * self.m
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    pub fn abs_chi(&self) -> usize {
        (-self.euler) as usize
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn punctures(&self) -> usize {
        self.cusp_cycles.len()
    }

    pub fn symbol_at(&self, position: usize) -> Crossing {
        self.word[position]
    }

    pub fn partner(&self, position: usize) -> usize {
        self.partner[position]
    }

    /// Polygon position carrying the given oriented symbol.
    pub fn position_of(&self, c: Crossing) -> Option<usize> {
        self.positions[c.letter as usize].map(|(lo, up)| if c.upper { up } else { lo })
    }

    pub fn has_letter(&self, letter: u8) -> bool {
        (letter as usize) < 26 && self.positions[letter as usize].is_some()
    }

    /// Letters actually used by the gluing, ascending.
    pub fn letters(&self) -> Vec<u8> {
        (0u8..26).filter(|&l| self.positions[l as usize].is_some()).collect()
    }

    pub fn cusp_of_corner(&self, corner: usize) -> usize {
        self.cusp_of[corner]
    }

    pub fn cusp_cycles(&self) -> &[Vec<usize>] {
        &self.cusp_cycles
    }

    pub fn longest_cusp_cycle(&self) -> usize {
        self.cusp_cycles.iter().map(Vec::len).max().unwrap_or(0)
    }
}
