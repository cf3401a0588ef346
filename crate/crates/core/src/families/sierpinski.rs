//! Sierpiński graphs S(n,3) and Sierpiński gasket graphs S_n.
//!
//! Vertices of S(n,3) are ternary words of length n; the id is the word read
//! as a base-3 number, first letter most significant.

use std::collections::BTreeSet;

use super::Built;

fn word(mut id: usize, n: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    for slot in w.iter_mut().rev() {
        *slot = id % 3;
        id /= 3;
    }
    w
}

fn id_of(w: &[usize]) -> usize {
    w.iter().fold(0, |acc, &d| acc * 3 + d)
}

/// Edges of S(n,3), each tagged with the index where the endpoints first differ.
fn tagged_edges(n: usize) -> Vec<(usize, usize, usize)> {
    let count = 3usize.pow(n as u32);
    let mut out = BTreeSet::new();
    for u in 0..count {
        let w = word(u, n);
        for i in 0..n {
            let tail = &w[i + 1..];
            let targets: Vec<usize> = match tail.first() {
                None => (0..3).filter(|&d| d != w[i]).collect(),
                Some(&c) if c != w[i] && tail.iter().all(|&d| d == c) => vec![c],
                Some(_) => continue,
            };
            for d in targets {
                let mut v = w.clone();
                v[i] = d;
                for slot in v[i + 1..].iter_mut() {
                    *slot = w[i];
                }
                let v = id_of(&v);
                out.insert((u.min(v), u.max(v), i));
            }
        }
    }
    out.into_iter().collect()
}

pub(super) fn sierpinski(n: usize) -> Built {
    let count = 3usize.pow(n as u32);
    let edges = tagged_edges(n).into_iter().map(|(u, v, _)| (u, v)).collect();
    let labels = (0..count)
        .map(|id| word(id, n).iter().map(|d| char::from(b'0' + *d as u8)).collect())
        .collect();
    (count, edges, labels)
}

/// S(n,3) with every edge between distinct last-level triangles contracted.
pub(super) fn gasket(n: usize) -> Built {
    let (count, _, words) = sierpinski(n);
    let tagged = tagged_edges(n);

    let mut parent: Vec<usize> = (0..count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v, i) in &tagged {
        if i + 1 < n {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a.max(b)] = a.min(b);
        }
    }

    // classes numbered by their smallest member
    let mut class = vec![usize::MAX; count];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for v in 0..count {
        let root = find(&mut parent, v);
        if class[root] == usize::MAX {
            class[root] = members.len();
            members.push(Vec::new());
        }
        class[v] = class[root];
        members[class[v]].push(v);
    }
    let edges = tagged
        .iter()
        .filter(|&&(_, _, i)| i + 1 == n)
        .map(|&(u, v, _)| (class[u], class[v]))
        .collect();
    let labels = members
        .iter()
        .map(|m| m.iter().map(|&v| words[v].as_str()).collect::<Vec<_>>().join("|"))
        .collect();
    (members.len(), edges, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2_structure() {
        let (n, edges, labels) = sierpinski(2);
        assert_eq!(n, 9);
        assert_eq!(edges.len(), 12);
        assert_eq!(labels[5], "12");
        // bridge 01 - 10 joins copies 0 and 1
        assert!(edges.contains(&(1, 3)));
        assert!(!edges.contains(&(0, 3)));
    }

    #[test]
    fn gasket2_is_three_merged_triangles() {
        let (n, edges, _) = gasket(2);
        assert_eq!((n, edges.len()), (6, 9));
        let mut deg = vec![0; n];
        for (u, v) in edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.sort();
        assert_eq!(deg, vec![2, 2, 2, 4, 4, 4]);
    }
}
