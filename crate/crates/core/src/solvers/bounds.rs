use serde::{Deserialize, Serialize};

use super::setcover::SetCover;
use super::{check_limit, Counter, SolveError, SolverConfig};
use crate::bitset::BitSet;
use crate::graph::{bfs_distances, diameter, maximal_cliques, simplicial_vertices, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: usize,
    pub applicable: bool,
}

impl Bound {
    fn when(applicable: bool, value: usize) -> Bound {
        Bound { value, applicable }
    }

    fn na() -> Bound {
        Bound::when(false, 0)
    }
}

/// Every lower and upper bound on the cover numbers for one `(G, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Distance-k domination number; bounds the strong optimum from below.
    pub domination_lb: Bound,
    /// Bounds the weak optimum (hence the strong one) from below; needs Δ >= 3.
    pub degree_lb: Bound,
    /// Sum of `n' - 1` over maximal cliques with `n' >= 2` simplicial vertices.
    pub clique_lb: Bound,
    pub trivial_ub: Bound,
    /// `n - k + 1` for `k <= diameter`.
    pub order_diameter_ub: Bound,
    /// `n - (d + 1) + ceil((d + 1) / (2k + 1))` for `d >= 2`; monitored.
    pub diameter_ub: Bound,
    /// `floor(n / 2)` for `k = 2` and minimum degree at least 1; monitored.
    pub half_ub: Bound,
}

impl Bounds {
    /// Largest applicable lower bound on the strong optimum.
    pub fn strong_lower(&self) -> usize {
        [self.domination_lb, self.degree_lb, self.clique_lb]
            .iter()
            .filter(|b| b.applicable)
            .map(|b| b.value)
            .max()
            .unwrap_or(0)
    }

    /// Largest applicable lower bound on the weak optimum.
    pub fn weak_lower(&self) -> usize {
        if self.degree_lb.applicable {
            self.degree_lb.value
        } else {
            0
        }
    }

    /// Smallest applicable asserted upper bound on the strong optimum.
    pub fn strong_upper(&self) -> usize {
        [self.trivial_ub, self.order_diameter_ub]
            .iter()
            .filter(|b| b.applicable)
            .map(|b| b.value)
            .min()
            .unwrap_or(usize::MAX)
    }

    /// Named bounds in a fixed order, for reports.
    pub fn named(&self) -> [(&'static str, Bound); 7] {
        [
            ("domination_lb", self.domination_lb),
            ("degree_lb", self.degree_lb),
            ("clique_lb", self.clique_lb),
            ("trivial_ub", self.trivial_ub),
            ("order_diameter_ub", self.order_diameter_ub),
            ("diameter_ub", self.diameter_ub),
            ("half_ub", self.half_ub),
        ]
    }
}

/// Minimum number of vertices with every vertex within distance `k` of one of them.
pub fn domination_number(g: &Graph, k: u32, cfg: &SolverConfig) -> Result<usize, SolveError> {
    g.require_connected()?;
    check_limit("domination", g.n(), cfg.weak_limit)?;
    let n = g.n();
    let balls: Vec<BitSet> = (0..n)
        .map(|v| {
            let d = bfs_distances(g, v).dist;
            BitSet::from_indices(n, (0..n).filter(|&w| d[w] <= k))
        })
        .collect();
    let counter = Counter::new(cfg.node_budget);
    let best = SetCover::new(&balls, n, &counter).minimum(0)?;
    Ok(best.expect("closed balls cover a connected graph").len())
}

fn degree_bound(m: usize, delta: usize, k: u32) -> usize {
    let num = (m as u128) * (delta as u128 - 2);
    let Some(p) = (delta as u128 - 1).checked_pow(k) else {
        return usize::from(num > 0);
    };
    let den = delta as u128 * (p - 1);
    num.div_ceil(den) as usize
}

pub fn compute_bounds(g: &Graph, k: u32, cfg: &SolverConfig) -> Result<Bounds, SolveError> {
    g.require_connected()?;
    let n = g.n();
    let m = g.m();
    let d = diameter(g)? as usize;
    let delta = g.max_degree();
    let k_us = k as usize;

    let domination_lb = if m >= 1 && n <= cfg.weak_limit {
        Bound::when(true, domination_number(g, k, cfg)?)
    } else {
        Bound::na()
    };

    let degree_lb = if delta >= 3 {
        Bound::when(true, degree_bound(m, delta, k))
    } else {
        Bound::na()
    };

    let simplicial = simplicial_vertices(g);
    let mut is_simplicial = vec![false; n];
    for v in simplicial {
        is_simplicial[v] = true;
    }
    let clique_sum = maximal_cliques(g, cfg.clique_cap)?
        .iter()
        .map(|c| c.iter().filter(|&&v| is_simplicial[v]).count())
        .filter(|&s| s >= 2)
        .map(|s| s - 1)
        .sum();

    Ok(Bounds {
        domination_lb,
        degree_lb,
        clique_lb: Bound::when(true, clique_sum),
        trivial_ub: Bound::when(true, n.saturating_sub(1)),
        order_diameter_ub: if n >= 2 && k_us <= d {
            Bound::when(true, n - k_us + 1)
        } else {
            Bound::na()
        },
        diameter_ub: if d >= 2 {
            Bound::when(true, n - (d + 1) + (d + 1).div_ceil(2 * k_us + 1))
        } else {
            Bound::na()
        },
        half_ub: if k == 2 && n >= 2 && g.min_degree() >= 1 {
            Bound::when(true, n / 2)
        } else {
            Bound::na()
        },
    })
}
