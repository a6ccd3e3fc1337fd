//! Arc systems, k-system verification, bounded enumeration and exact
//! extremal search.

use crate::arcs::{self, canonicalize, CanonicalArc, Itinerary};
use crate::clique::{max_clique, Graph};
use crate::error::{Error, Result};
use crate::intersection::{intersection_matrix, intersection_number, self_intersection, IntersectionMatrix};
use crate::surface::{parse_gluing, Crossing, SurfaceGluing};
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

/// A finite set of pairwise distinct, simple, essential canonical arcs on
/// one surface.
#[derive(Clone, Debug)]
pub struct ArcSystem {
    surface: SurfaceGluing,
    arcs: Vec<CanonicalArc>,
}

impl ArcSystem {
    pub fn new(surface: SurfaceGluing, arcs: Vec<CanonicalArc>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for a in &arcs {
            if a.surface_word() != surface.word_str() {
                return Err(Error::SurfaceMismatch(
                    surface.word_str().to_string(),
                    a.surface_word().to_string(),
                ));
            }
            if !arcs::is_essential(&surface, a) {
                return Err(Error::InessentialArc(a.to_text(&surface)));
            }
            let s = self_intersection(&surface, a)?;
            if s > 0 {
                return Err(Error::NonSimpleArc { arc: a.to_text(&surface), count: s });
            }
            if !seen.insert(a.itinerary().clone()) {
                return Err(Error::DegenerateSystem(format!(
                    "duplicate arc {}",
                    a.to_text(&surface)
                )));
            }
        }
        Ok(ArcSystem { surface, arcs })
    }

    pub fn surface(&self) -> &SurfaceGluing {
        &self.surface
    }

    pub fn arcs(&self) -> &[CanonicalArc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Line-based file format: `surface <word>`, then one arc per line.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("surface {}\n", self.surface.word_str());
        for a in &self.arcs {
            out.push_str(&a.to_text(&self.surface));
            out.push('\n');
        }
        out
    }

    pub fn verify(&self, k: u64) -> Result<KSystemReport> {
        verify_k_system(&self.surface, &self.arcs, k)
    }
}

/// Parse a system file. Arcs are canonicalized on load; duplicates are kept
/// so that verification can report them.
pub fn parse_system(text: &str) -> Result<(SurfaceGluing, Vec<CanonicalArc>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty system file".into()))?;
    let word = header
        .trim()
        .strip_prefix("surface ")
        .ok_or_else(|| Error::InvalidInput("first line must be `surface <word>`".into()))?;
    let g = parse_gluing(word.trim())?;
    let mut arcs = Vec::new();
    for line in lines {
        arcs.push(arcs::parse_arc(&g, line)?);
    }
    Ok((g, arcs))
}

/// A violating pair in a k-system check.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub arc_i: String,
    pub arc_j: String,
    pub count: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct KSystemReport {
    pub k: u64,
    pub size: usize,
    pub max_pair: u64,
    pub ok: bool,
    pub duplicates: Vec<(usize, usize)>,
    pub witnesses: Vec<Witness>,
    pub matrix: IntersectionMatrix,
}

/// Full k-system check: pairwise intersection numbers at most k, zero
/// self-intersections, no duplicate classes.
pub fn verify_k_system(g: &SurfaceGluing, arcs: &[CanonicalArc], k: u64) -> Result<KSystemReport> {
    let matrix = intersection_matrix(g, arcs)?;
    let mut duplicates = Vec::new();
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            if arcs[i].itinerary() == arcs[j].itinerary() {
                duplicates.push((i, j));
            }
        }
    }
    let mut witnesses = Vec::new();
    let mut max_pair = 0;
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            let v = matrix.get(i, j);
            max_pair = max_pair.max(v);
            if v > k {
                witnesses.push(Witness {
                    i,
                    j,
                    arc_i: arcs[i].to_text(g),
                    arc_j: arcs[j].to_text(g),
                    count: v,
                });
            }
        }
    }
    let diag_ok = (0..arcs.len()).all(|i| matrix.get(i, i) == 0);
    let ok = duplicates.is_empty() && diag_ok && witnesses.is_empty();
    Ok(KSystemReport { k, size: arcs.len(), max_pair, ok, duplicates, witnesses, matrix })
}

/// Which endpoint pairs an enumeration keeps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum EndpointFilter {
    None,
    /// Keep arcs with one endpoint cusp in `from` and the other in `to`.
    /// Singletons give the fixed-endpoints filter; disjoint sets give the
    /// bipartite filter.
    Between { from: BTreeSet<usize>, to: BTreeSet<usize> },
}

impl EndpointFilter {
    pub fn none() -> Self {
        EndpointFilter::None
    }

    pub fn fixed(p: usize, q: usize) -> Self {
        EndpointFilter::Between { from: BTreeSet::from([p]), to: BTreeSet::from([q]) }
    }

    pub fn bipartite(from: BTreeSet<usize>, to: BTreeSet<usize>) -> Self {
        EndpointFilter::Between { from, to }
    }

    pub fn validate(&self, g: &SurfaceGluing) -> Result<()> {
        if let EndpointFilter::Between { from, to } = self {
            for &c in from.iter().chain(to.iter()) {
                if c >= g.punctures() {
                    return Err(Error::InvalidCusp(c, g.punctures()));
                }
            }
            if from.is_empty() || to.is_empty() {
                return Err(Error::InvalidInput("empty endpoint filter set".into()));
            }
        }
        Ok(())
    }

    pub fn admits(&self, endpoints: (usize, usize)) -> bool {
        match self {
            EndpointFilter::None => true,
            EndpointFilter::Between { from, to } => {
                let (a, b) = endpoints;
                (from.contains(&a) && to.contains(&b)) || (from.contains(&b) && to.contains(&a))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchConfig {
    pub max_word_len: usize,
    pub k: u64,
    pub filter: EndpointFilter,
    #[serde(skip)]
    pub time_budget: Option<Duration>,
}

impl SearchConfig {
    pub fn new(max_word_len: usize, k: u64) -> Self {
        SearchConfig { max_word_len, k, filter: EndpointFilter::None, time_budget: None }
    }
}

struct Budget {
    deadline: Option<Instant>,
    budget: Duration,
}

impl Budget {
    fn new(b: Option<Duration>) -> Self {
        Budget { deadline: b.map(|d| Instant::now() + d), budget: b.unwrap_or_default() }
    }

    fn check(&self) -> Result<()> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(Error::BudgetExceeded(self.budget));
            }
        }
        Ok(())
    }
}

/// Enumerate all canonical simple essential arcs of word length at most
/// `cfg.max_word_len`, filtered by endpoints, in deterministic order.
pub fn enumerate_arcs(g: &SurfaceGluing, cfg: &SearchConfig) -> Result<ArcSystem> {
    cfg.filter.validate(g)?;
    let budget = Budget::new(cfg.time_budget);
    let n = g.num_corners();
    let symbols: Vec<Crossing> = (0..n).map(|p| g.symbol_at(p)).collect();
    let mut seen: BTreeSet<Itinerary> = BTreeSet::new();
    let mut kept: BTreeSet<CanonicalArc> = BTreeSet::new();

    // iterate reduced words of each length with corners on both ends
    let mut word: Vec<Crossing> = Vec::new();
    fn rec(
        g: &SurfaceGluing,
        symbols: &[Crossing],
        word: &mut Vec<Crossing>,
        remaining: usize,
        budget: &Budget,
        seen: &mut BTreeSet<Itinerary>,
        kept: &mut BTreeSet<CanonicalArc>,
        filter: &EndpointFilter,
    ) -> Result<()> {
        if remaining == 0 {
            budget.check()?;
            let n = g.num_corners();
            for start in 0..n {
                for end in 0..n {
                    let raw = Itinerary::new(start, word.clone(), end);
                    let arc = canonicalize(g, &raw)?;
                    if !seen.insert(arc.itinerary().clone()) {
                        continue;
                    }
                    if !arcs::is_essential(g, &arc) {
                        continue;
                    }
                    if !filter.admits(arc.endpoints()) {
                        continue;
                    }
                    if self_intersection(g, &arc)? > 0 {
                        continue;
                    }
                    kept.insert(arc);
                }
            }
            return Ok(());
        }
        for &c in symbols {
            if word.last() == Some(&c.inverse()) {
                continue;
            }
            word.push(c);
            rec(g, symbols, word, remaining - 1, budget, seen, kept, filter)?;
            word.pop();
        }
        Ok(())
    }

    for len in 0..=cfg.max_word_len {
        rec(g, &symbols, &mut word, len, &budget, &mut seen, &mut kept, &cfg.filter)?;
    }

    let arcs: Vec<CanonicalArc> = kept.into_iter().collect();
    ArcSystem::new(g.clone(), arcs)
}

/// Vertices are arcs of the universe; edges join arcs intersecting at most
/// k times.
pub fn compatibility_graph(universe: &ArcSystem, k: u64) -> Result<Graph> {
    let arcs = universe.arcs();
    let g = universe.surface();
    let mut graph = Graph::new(arcs.len());
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            if intersection_number(g, &arcs[i], &arcs[j])? <= k {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(graph)
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub universe_size: usize,
    pub clique_size: usize,
    pub best: Vec<String>,
    pub max_word_len: usize,
    pub k: u64,
    #[serde(skip)]
    pub best_arcs: Vec<CanonicalArc>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Enumerate, build the compatibility graph, and find an exact maximum
/// clique. The result is a maximum only within the enumerated universe.
pub fn extremal_search(g: &SurfaceGluing, cfg: &SearchConfig) -> Result<SearchResult> {
    let started = Instant::now();
    let universe = enumerate_arcs(g, cfg)?;
    let graph = compatibility_graph(&universe, cfg.k)?;
    let remaining = cfg.time_budget.map(|b| b.saturating_sub(started.elapsed()));
    let clique = max_clique(&graph, remaining)?;
    let best_arcs: Vec<CanonicalArc> =
        clique.iter().map(|&i| universe.arcs()[i].clone()).collect();
    let best = best_arcs.iter().map(|a| a.to_text(g)).collect();
    Ok(SearchResult {
        universe_size: universe.len(),
        clique_size: best_arcs.len(),
        best,
        max_word_len: cfg.max_word_len,
        k: cfg.k,
        best_arcs,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs::parse_arc;

    #[test]
    fn enumerate_empty_words_on_square() {
        let g = parse_gluing("aAbB").unwrap();
        let cfg = SearchConfig::new(0, 0);
        let u = enumerate_arcs(&g, &cfg).unwrap();
        // two essential diagonals plus two side arcs
        assert_eq!(u.len(), 4);
        let texts: BTreeSet<String> = u.arcs().iter().map(|a| a.to_text(&g)).collect();
        assert!(texts.contains("side:a"));
        assert!(texts.contains("side:b"));
        assert!(texts.contains("c0::c2"));
        assert!(texts.contains("c1::c3"));
    }

    #[test]
    fn only_one_arc_class_joins_a_puncture_to_itself_on_the_square() {
        let g = parse_gluing("aAbB").unwrap();
        let p = g.cusp_of_corner(0);
        let mut cfg = SearchConfig::new(2, 0);
        cfg.filter = EndpointFilter::fixed(p, p);
        let u = enumerate_arcs(&g, &cfg).unwrap();
        assert_eq!(u.len(), 1);
    }

    #[test]
    fn filter_semantics() {
        let f = EndpointFilter::bipartite(BTreeSet::from([0]), BTreeSet::from([1, 2]));
        assert!(f.admits((0, 1)));
        assert!(f.admits((2, 0)));
        assert!(!f.admits((1, 2)));
        assert!(!f.admits((0, 0)));
        let fixed = EndpointFilter::fixed(1, 1);
        assert!(fixed.admits((1, 1)));
        assert!(!fixed.admits((0, 1)));
    }

    #[test]
    fn verify_reports_witnesses() {
        let g = parse_gluing("aAbB").unwrap();
        let arcs = vec![parse_arc(&g, "c0::c2").unwrap(), parse_arc(&g, "c1::c3").unwrap()];
        let rep = verify_k_system(&g, &arcs, 0).unwrap();
        assert!(!rep.ok);
        assert_eq!(rep.max_pair, 1);
        assert_eq!(rep.witnesses.len(), 1);
        let rep1 = verify_k_system(&g, &arcs, 1).unwrap();
        assert!(rep1.ok);
    }

    #[test]
    fn verify_detects_duplicates() {
        let g = parse_gluing("aAbB").unwrap();
        let arcs = vec![parse_arc(&g, "c0::c2").unwrap(), parse_arc(&g, "c2::c0").unwrap()];
        let rep = verify_k_system(&g, &arcs, 5).unwrap();
        assert!(!rep.ok);
        assert_eq!(rep.duplicates, vec![(0, 1)]);
    }

    #[test]
    fn system_rejects_inessential_and_nonsimple() {
        let g = parse_gluing("aAbB").unwrap();
        let trivial = canonicalize(&g, &Itinerary::new(0, vec![], 0)).unwrap();
        assert!(matches!(
            ArcSystem::new(g.clone(), vec![trivial]),
            Err(Error::InessentialArc(_))
        ));
    }

    #[test]
    fn file_round_trip() {
        let g = parse_gluing("aAbB").unwrap();
        let arcs = vec![
            parse_arc(&g, "side:a").unwrap(),
            parse_arc(&g, "c0::c2").unwrap(),
            parse_arc(&g, "c1::c3").unwrap(),
        ];
        let sys = ArcSystem::new(g, arcs).unwrap();
        let text = sys.to_file_string();
        let (g2, arcs2) = parse_system(&text).unwrap();
        assert_eq!(g2.word_str(), "aAbB");
        assert_eq!(arcs2.len(), 3);
        for (a, b) in sys.arcs().iter().zip(&arcs2) {
            assert_eq!(a.itinerary(), b.itinerary());
        }
        assert!(parse_system("no header\n").is_err());
        assert!(parse_system("surface aAbB\nbroken\n").is_err());
    }

    #[test]
    fn search_monotonic_in_length_and_k() {
        let g = parse_gluing("aAbB").unwrap();
        let mut prev = 0;
        for len in 0..=3 {
            let r = extremal_search(&g, &SearchConfig::new(len, 0)).unwrap();
            assert!(r.clique_size >= prev);
            prev = r.clique_size;
        }
        let r0 = extremal_search(&g, &SearchConfig::new(3, 0)).unwrap();
        let r1 = extremal_search(&g, &SearchConfig::new(3, 1)).unwrap();
        assert!(r1.clique_size >= r0.clique_size);
    }

    #[test]
    fn search_is_deterministic() {
        let g = parse_gluing("aAbB").unwrap();
        let cfg = SearchConfig::new(2, 1);
        let a = extremal_search(&g, &cfg).unwrap();
        let b = extremal_search(&g, &cfg).unwrap();
        assert_eq!(a.best, b.best);
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let g = parse_gluing("aAbBcC").unwrap();
        let mut cfg = SearchConfig::new(6, 1);
        cfg.time_budget = Some(Duration::from_nanos(1));
        assert!(matches!(
            extremal_search(&g, &cfg),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
