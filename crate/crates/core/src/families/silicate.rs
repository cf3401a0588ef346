//! Silicate network SL(n).
//!
//! Start from the honeycomb HC(n): the hexagons with axial centre `(q, r)`
//! and `max(|q|, |r|, |q + r|) < n`. Honeycomb vertices are the triangles of
//! the hexagon-centre lattice: `Up(q, r)` touches hexagons `(q,r) (q+1,r)
//! (q,r+1)` and `Down(q, r)` touches `(q+1,r) (q,r+1) (q+1,r+1)`. Every
//! honeycomb vertex becomes a tetrahedron (one centre and three corner
//! slots, one per lattice direction); the corner slots at the two ends of a
//! honeycomb edge are the same vertex.

use std::collections::BTreeMap;

use super::Built;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Tri {
    Up(i64, i64),
    Down(i64, i64),
}

impl Tri {
    fn tag(self) -> String {
        match self {
            Tri::Up(q, r) => format!("U{q}:{r}"),
            Tri::Down(q, r) => format!("D{q}:{r}"),
        }
    }

    fn hexes(self) -> [(i64, i64); 3] {
        match self {
            Tri::Up(q, r) => [(q, r), (q + 1, r), (q, r + 1)],
            Tri::Down(q, r) => [(q + 1, r), (q, r + 1), (q + 1, r + 1)],
        }
    }

    /// Neighbouring triangle across direction `j`, and the hexagon pair they share.
    fn across(self, j: usize) -> (Tri, [(i64, i64); 2]) {
        match (self, j) {
            (Tri::Up(q, r), 0) => (Tri::Down(q, r), [(q + 1, r), (q, r + 1)]),
            (Tri::Up(q, r), 1) => (Tri::Down(q, r - 1), [(q, r), (q + 1, r)]),
            (Tri::Up(q, r), _) => (Tri::Down(q - 1, r), [(q, r), (q, r + 1)]),
            (Tri::Down(q, r), 0) => (Tri::Up(q, r), [(q + 1, r), (q, r + 1)]),
            (Tri::Down(q, r), 1) => (Tri::Up(q, r + 1), [(q, r + 1), (q + 1, r + 1)]),
            (Tri::Down(q, r), _) => (Tri::Up(q + 1, r), [(q + 1, r), (q + 1, r + 1)]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Corner {
    /// Shared slot, keyed by the `Up` side of the honeycomb edge.
    Shared(Tri, usize),
    Free(Tri, usize),
}

pub(super) fn silicate(n: usize) -> Built {
    let n = n as i64;
    let in_patch = |(q, r): (i64, i64)| q.abs().max(r.abs()).max((q + r).abs()) < n;

    let mut tris = Vec::new();
    for q in -n - 1..=n {
        for r in -n - 1..=n {
            for t in [Tri::Up(q, r), Tri::Down(q, r)] {
                if t.hexes().into_iter().any(in_patch) {
                    tris.push(t);
                }
            }
        }
    }
    tris.sort();

    let corner = |t: Tri, j: usize| -> Corner {
        let (other, pair) = t.across(j);
        if pair.into_iter().any(in_patch) {
            match t {
                Tri::Up(..) => Corner::Shared(t, j),
                Tri::Down(..) => Corner::Shared(other, j),
            }
        } else {
            Corner::Free(t, j)
        }
    };

    let mut ids: BTreeMap<Corner, usize> = BTreeMap::new();
    let mut labels: Vec<String> = tris.iter().map(|t| format!("si{}", t.tag())).collect();
    let mut edges = Vec::new();
    for (ti, &t) in tris.iter().enumerate() {
        let mut slots = [0usize; 3];
        for (j, slot) in slots.iter_mut().enumerate() {
            let c = corner(t, j);
            let next = tris.len() + ids.len();
            *slot = *ids.entry(c).or_insert_with(|| {
                labels.push(match c {
                    Corner::Shared(u, j) => format!("o{}/{j}", u.tag()),
                    Corner::Free(u, j) => format!("o{}/{j}*", u.tag()),
                });
                next
            });
        }
        for &s in &slots {
            edges.push((ti, s));
        }
        edges.push((slots[0], slots[1]));
        edges.push((slots[0], slots[2]));
        edges.push((slots[1], slots[2]));
    }
    (tris.len() + ids.len(), edges, labels)
}
