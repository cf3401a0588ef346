//! Butterfly-derived networks.
//!
//! Vertex `(w, i)` of BF(r) has id `i * 2^r + w`, `w` an r-bit word and `i`
//! the level. `(w, i)` is adjacent to `(w, i+1)` and to `(w ^ 2^i, i+1)`.
//! Labels print `w` with bit 0 first.

use super::Built;

fn word_label(w: usize, r: usize, level: usize) -> String {
    let bits: String = (0..r).map(|b| if w >> b & 1 == 1 { '1' } else { '0' }).collect();
    format!("({bits},{level})")
}

/// Levels `0..=levels`; step `i -> i+1` flips bit `flip(i)`.
fn layered(r: usize, levels: usize, flip: impl Fn(usize) -> usize) -> Built {
    let width = 1usize << r;
    let id = |w: usize, i: usize| i * width + w;
    let mut edges = Vec::with_capacity(2 * width * levels);
    for i in 0..levels {
        let bit = 1 << flip(i);
        for w in 0..width {
            edges.push((id(w, i), id(w, i + 1)));
            edges.push((id(w, i), id(w ^ bit, i + 1)));
        }
    }
    let labels = (0..=levels)
        .flat_map(|i| (0..width).map(move |w| (w, i)))
        .map(|(w, i)| word_label(w, r, i))
        .collect();
    ((levels + 1) * width, edges, labels)
}

pub(super) fn butterfly(r: usize) -> Built {
    layered(r, r, |i| i)
}

/// The r·2^(r-1) four-cycles spanning consecutive levels, as
/// `[(w,i), (w',i), (w,i+1), (w',i+1)]` vertex ids with `w' = w | 2^i`.
pub(crate) fn diamonds(r: usize) -> Vec<[usize; 4]> {
    let width = 1usize << r;
    let id = |w: usize, i: usize| i * width + w;
    let mut out = Vec::with_capacity(r * width / 2);
    for i in 0..r {
        for w in (0..width).filter(|w| w >> i & 1 == 0) {
            let w2 = w | 1 << i;
            out.push([id(w, i), id(w2, i), id(w, i + 1), id(w2, i + 1)]);
        }
    }
    out
}

/// One chord per diamond, joining its two higher-level vertices.
pub(super) fn augmented(r: usize) -> Built {
    let (n, mut edges, labels) = butterfly(r);
    edges.extend(diamonds(r).into_iter().map(|d| (d[2], d[3])));
    (n, edges, labels)
}

/// One new centre per diamond, joined to its four vertices.
pub(super) fn enhanced(r: usize) -> Built {
    let (n, mut edges, mut labels) = butterfly(r);
    let ds = diamonds(r);
    for (j, d) in ds.iter().enumerate() {
        let c = n + j;
        edges.extend(d.iter().map(|&v| (v, c)));
        labels.push(format!("core{j}"));
    }
    (n + ds.len(), edges, labels)
}

/// Two butterflies back to back, sharing level r; levels 0..=2r.
pub(super) fn benes(r: usize) -> Built {
    layered(r, 2 * r, |i| if i < r { i } else { 2 * r - 1 - i })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn graph(b: Built) -> Graph {
        Graph::new(b.0, &b.1).unwrap()
    }

    // pairs of same-level vertices with two common neighbours one level up
    fn consecutive_level_four_cycles(g: &Graph, r: usize) -> usize {
        let width = 1 << r;
        let mut count = 0;
        for i in 0..r {
            for a in 0..width {
                for b in a + 1..width {
                    let (x, y) = (i * width + a, i * width + b);
                    let common = g
                        .neighbors(x)
                        .iter()
                        .filter(|&&z| z >= (i + 1) * width && g.has_edge(y, z))
                        .count();
                    count += common * common.saturating_sub(1) / 2;
                }
            }
        }
        count
    }

    #[test]
    fn diamond_count() {
        for r in 1..=5 {
            let g = graph(butterfly(r));
            let expected = r << (r - 1);
            assert_eq!(consecutive_level_four_cycles(&g, r), expected);
            assert_eq!(diamonds(r).len(), expected);
            for d in diamonds(r) {
                assert!(g.has_edge(d[0], d[2]) && g.has_edge(d[0], d[3]));
                assert!(g.has_edge(d[1], d[2]) && g.has_edge(d[1], d[3]));
            }
        }
    }

    #[test]
    fn butterfly_degrees() {
        let g = graph(butterfly(3));
        let width = 8;
        for v in 0..g.n() {
            let level = v / width;
            let expected = if level == 0 || level == 3 { 2 } else { 4 };
            assert_eq!(g.degree(v), expected);
        }
    }

    #[test]
    fn benes_is_mirrored() {
        let (n, edges, _) = benes(2);
        assert_eq!(n, 20);
        // the step into level 4 flips bit 0, like the step out of level 0
        assert!(edges.contains(&(12, 17)));
        assert!(edges.contains(&(0, 5)));
    }
}
