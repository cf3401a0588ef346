use super::{Graph, GraphError, Vertex};
use crate::bitset::BitSet;

pub const DEFAULT_CLIQUE_CAP: usize = 100_000;

/// Vertices whose open neighbourhood induces a clique (isolated vertices included).
pub fn simplicial_vertices(g: &Graph) -> Vec<Vertex> {
    (0..g.n())
        .filter(|&v| {
            let nb = g.neighbors(v);
            nb.iter()
                .enumerate()
                .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .collect()
}

/// All maximal cliques, each sorted ascending, the list sorted lexicographically.
///
/// Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &Graph, cap: usize) -> Result<Vec<Vec<Vertex>>, GraphError> {
    let n = g.n();
    let nbr: Vec<BitSet> = (0..n)
        .map(|v| BitSet::from_indices(n, g.neighbors(v).iter().copied()))
        .collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(&nbr, &mut r, BitSet::full(n), BitSet::new(n), &mut out, cap)?;
    for c in out.iter_mut() {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    nbr: &[BitSet],
    r: &mut Vec<Vertex>,
    mut p: BitSet,
    mut x: BitSet,
    out: &mut Vec<Vec<Vertex>>,
    cap: usize,
) -> Result<(), GraphError> {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() >= cap {
                return Err(GraphError::CliqueOverflow { cap });
            }
            out.push(r.clone());
        }
        return Ok(());
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.intersection_len(&nbr[u]), std::cmp::Reverse(u)))
        .unwrap();
    let candidates: Vec<Vertex> = p.difference(&nbr[pivot]).iter().collect();
    for v in candidates {
        let mut p2 = p.clone();
        p2.intersect_with(&nbr[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&nbr[v]);
        r.push(v);
        bron_kerbosch(nbr, r, p2, x2, out, cap)?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}
