//! Vertex cover to strong cover gadgets.
//!
//! Every edge of `G` is subdivided into a path of length 3. One apex is
//! joined to all original vertices and a second apex to all path vertices.
//! Two triangles hang off the apexes: for `k = 2` one vertex of each
//! triangle is joined to both apexes; for `k >= 3` each apex starts a tail
//! `b_1 .. b_{k-2}` (resp. `c_1 .. c_{k-2}`) whose far end is joined to one
//! triangle vertex. A vertex cover `S` of `G` should give the strong cover
//! `S ∪ {a_1, u_1, d_1, w_1}` for `k = 2` and `S ∪ {a_1, d_1}` for `k >= 3`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{strong_feasible, StrongWitness};
use crate::graph::{Graph, GraphError, Vertex};
use crate::solvers::{min_vertex_cover, solve_exact, SolveError, SolverConfig, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Original,
    Path,
    ApexB,
    ApexC,
    Triangle,
    Tail,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Original => "original",
            Role::Path => "path",
            Role::ApexB => "apex_b",
            Role::ApexC => "apex_c",
            Role::Triangle => "triangle",
            Role::Tail => "tail",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("the reduction needs k >= 2, got {0}")]
    SmallK(u32),
    #[error("the input graph has no edges")]
    NoEdges,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Named gadget vertices outside the subdivided graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anchors {
    /// `u_1` for `k = 2`, `b_1` otherwise.
    pub apex_b: Vertex,
    /// `w_1` for `k = 2`, `c_1` otherwise.
    pub apex_c: Vertex,
    /// `[a_1, a_2, a_3]`; `a_3` is the attachment vertex.
    pub a: [Vertex; 3],
    /// `[d_1, d_2, d_3]`; `d_3` is the attachment vertex.
    pub d: [Vertex; 3],
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub gadget: Graph,
    pub roles: Vec<Role>,
    pub anchors: Anchors,
    pub k: u32,
    /// Vertices added to a vertex cover by the forward construction.
    pub offset: usize,
}

impl ReductionOutput {
    /// The forward witness set for the vertex cover `cover`, sorted.
    pub fn forward_set(&self, cover: &[Vertex]) -> Vec<Vertex> {
        let a = &self.anchors;
        let mut set = cover.to_vec();
        if self.k == 2 {
            set.extend([a.a[0], a.apex_b, a.d[0], a.apex_c]);
        } else {
            set.extend([a.a[0], a.d[0]]);
        }
        set.sort_unstable();
        set
    }

    /// `index role` lines.
    pub fn roles_text(&self) -> String {
        self.roles
            .iter()
            .enumerate()
            .map(|(i, r)| format!("{i} {r}\n"))
            .collect()
    }
}

/// Expected `(|V'|, |E'|)` of the gadget for `n` vertices and `m` edges.
pub fn gadget_size(n: usize, m: usize, k: u32) -> (usize, usize) {
    let k = k as usize;
    if k == 2 {
        (n + 2 * m + 8, 5 * m + n + 10)
    } else {
        (n + 2 * m + 2 * (k - 2) + 6, 5 * m + n + 2 * (k - 3) + 8)
    }
}

#[derive(Default)]
struct Builder {
    roles: Vec<Role>,
    labels: Vec<String>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn vertex(&mut self, role: Role, label: String) -> Vertex {
        self.roles.push(role);
        self.labels.push(label);
        self.roles.len() - 1
    }

    /// Tail `apex = t_1, t_2, .., t_{k-2}`; returns its far end.
    fn tail(&mut self, apex: Vertex, k: u32, name: &str) -> Vertex {
        let mut last = apex;
        for j in 2..=k.saturating_sub(2) {
            let t = self.vertex(Role::Tail, format!("{name}{j}"));
            self.edges.push((last, t));
            last = t;
        }
        last
    }

    fn triangle(&mut self, name: &str) -> [Vertex; 3] {
        let t = [1, 2, 3].map(|j| self.vertex(Role::Triangle, format!("{name}{j}")));
        self.edges.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
        t
    }
}

pub fn reduce_vc(g: &Graph, k: u32) -> Result<ReductionOutput, ReductionError> {
    if k < 2 {
        return Err(ReductionError::SmallK(k));
    }
    if g.m() == 0 {
        return Err(ReductionError::NoEdges);
    }
    let mut b = Builder::default();
    for v in 0..g.n() {
        b.vertex(Role::Original, format!("x{v}"));
    }

    // x - p - q - y for every edge xy
    let mut path_vertices = Vec::with_capacity(2 * g.m());
    for (i, &(x, y)) in g.edges().iter().enumerate() {
        let p = b.vertex(Role::Path, format!("p{i}/{x}"));
        let q = b.vertex(Role::Path, format!("p{i}/{y}"));
        b.edges.extend([(x, p), (p, q), (q, y)]);
        path_vertices.extend([p, q]);
    }

    let (bn, cn) = if k == 2 { ("u1", "w1") } else { ("b1", "c1") };
    let apex_b = b.vertex(Role::ApexB, bn.to_string());
    let apex_c = b.vertex(Role::ApexC, cn.to_string());
    b.edges.extend((0..g.n()).map(|x| (apex_b, x)));
    b.edges.extend(path_vertices.iter().map(|&p| (apex_c, p)));

    let b_end = b.tail(apex_b, k, "b");
    let c_end = b.tail(apex_c, k, "c");
    let a = b.triangle("a");
    let d = b.triangle("d");
    if k == 2 {
        b.edges
            .extend([(a[2], apex_b), (a[2], apex_c), (d[2], apex_b), (d[2], apex_c)]);
    } else {
        b.edges.extend([(a[2], b_end), (d[2], c_end)]);
    }

    let gadget = Graph::new(b.roles.len(), &b.edges)?.with_labels(b.labels)?;
    Ok(ReductionOutput {
        gadget,
        roles: b.roles,
        anchors: Anchors { apex_b, apex_c, a, d },
        k,
        offset: if k == 2 { 4 } else { 2 },
    })
}

/// Outcome of checking one reduction instance.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub k: u32,
    pub n: usize,
    pub m: usize,
    pub gadget_n: usize,
    pub gadget_m: usize,
    pub size_formulas_hold: bool,
    pub vertex_cover: Vec<Vertex>,
    pub offset: usize,
    pub forward_set: Vec<Vertex>,
    pub forward_valid: bool,
    /// Exact strong optimum of the gadget, when within the solver limit.
    pub exact: Option<usize>,
    /// Lexicographically least optimal set behind `exact`.
    pub exact_set: Option<Vec<Vertex>>,
    /// Whether `exact == |vertex_cover| + offset`.
    pub equality: Option<bool>,
    /// Why `exact` is missing.
    pub exact_skipped: Option<String>,
    #[serde(skip)]
    pub forward_witness: Option<StrongWitness>,
}

pub fn check_reduction(g: &Graph, k: u32, cfg: &SolverConfig) -> Result<ReductionReport, ReductionError> {
    let out = reduce_vc(g, k)?;
    let gadget = &out.gadget;
    let cover = min_vertex_cover(g, cfg)?;
    let forward_set = out.forward_set(&cover);
    let forward_witness = strong_feasible(gadget, &forward_set, k, cfg.geodesic_cap)?;

    let (mut exact, mut exact_set, mut exact_skipped) = (None, None, None);
    match solve_exact(gadget, k, Variant::Strong, cfg) {
        Ok(r) => {
            exact = Some(r.optimum);
            exact_set = Some(r.set);
        }
        Err(e) if e.is_size_limit() => exact_skipped = Some(e.to_string()),
        Err(e) => return Err(e.into()),
    }

    Ok(ReductionReport {
        k,
        n: g.n(),
        m: g.m(),
        gadget_n: gadget.n(),
        gadget_m: gadget.m(),
        size_formulas_hold: (gadget.n(), gadget.m()) == gadget_size(g.n(), g.m(), k),
        offset: out.offset,
        forward_valid: forward_witness.is_some(),
        equality: exact.map(|x| x == cover.len() + out.offset),
        vertex_cover: cover,
        forward_set,
        exact,
        exact_set,
        exact_skipped,
        forward_witness,
    })
}
