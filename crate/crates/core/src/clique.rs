//! Exact maximum clique by branch and bound with a greedy coloring bound.
//! Deterministic: vertices are expanded in a fixed degree-then-index order
//! and ties never depend on hashing.

use crate::error::{Error, Result};
use std::time::{Duration, Instant};

#[derive(Clone, Debug)]
pub struct Graph {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![vec![false; n]; n] }
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        if i != j {
            self.adj[i][j] = true;
            self.adj[j][i] = true;
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(idx, &v)| vs[idx + 1..].iter().all(|&w| self.adj[v][w]))
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    deadline: Option<Instant>,
    budget: Duration,
    ticks: u64,
}

impl<'a> Search<'a> {
    fn check_budget(&mut self) -> Result<()> {
        self.ticks += 1;
        if self.ticks % 256 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::BudgetExceeded(self.budget));
                }
            }
        }
        Ok(())
    }

    /// Greedy coloring of `p`; returns vertices reordered by ascending color
    /// together with their color numbers (1-based upper bounds).
    fn color_sort(&self, p: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in p {
            let mut placed = false;
            for class in classes.iter_mut() {
                if class.iter().all(|&w| !self.g.adj[v][w]) {
                    class.push(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![v]);
            }
        }
        let mut order = Vec::with_capacity(p.len());
        let mut colors = Vec::with_capacity(p.len());
        for (ci, class) in classes.iter().enumerate() {
            for &v in class {
                order.push(v);
                colors.push(ci + 1);
            }
        }
        (order, colors)
    }

    fn expand(&mut self, r: &mut Vec<usize>, p: &[usize]) -> Result<()> {
        self.check_budget()?;
        let (order, colors) = self.color_sort(p);
        for i in (0..order.len()).rev() {
            if r.len() + colors[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            r.push(v);
            let next: Vec<usize> =
                order[..i].iter().copied().filter(|&w| self.g.adj[v][w]).collect();
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, &next)?;
            }
            r.pop();
        }
        Ok(())
    }
}

/// An exact maximum clique; deterministic tie-breaking by vertex order.
pub fn max_clique(g: &Graph, time_budget: Option<Duration>) -> Result<Vec<usize>> {
    if g.n == 0 {
        return Ok(Vec::new());
    }
    let mut vertices: Vec<usize> = (0..g.n).collect();
    vertices.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Search {
        g,
        best: Vec::new(),
        deadline: time_budget.map(|d| Instant::now() + d),
        budget: time_budget.unwrap_or_default(),
        ticks: 0,
    };
    let mut r = Vec::new();
    search.expand(&mut r, &vertices)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}
