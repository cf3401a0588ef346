use super::Built;

fn numbered(prefix: &str, count: usize, start: usize) -> Vec<String> {
    (start..start + count).map(|i| format!("{prefix}{i}")).collect()
}

pub(super) fn path(m: usize) -> Built {
    let edges = (1..m).map(|i| (i - 1, i)).collect();
    (m, edges, numbered("v", m, 1))
}

pub(super) fn cycle(n: usize) -> Built {
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    (n, edges, numbered("v", n, 1))
}

/// Hub 0, rim 1..=n.
pub(super) fn wheel(n: usize) -> Built {
    let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((1..=n).map(|i| (i, i % n + 1)));
    let mut labels = vec!["v0".to_string()];
    labels.extend(numbered("v", n, 1));
    (n + 1, edges, labels)
}

/// Hub 0, rims 1..=n and n+1..=2n, both joined to the hub.
pub(super) fn double_wheel(n: usize) -> Built {
    let mut edges: Vec<_> = (1..=2 * n).map(|i| (0, i)).collect();
    for base in [0, n] {
        edges.extend((0..n).map(|i| (base + i + 1, base + (i + 1) % n + 1)));
    }
    let mut labels = vec!["hub".to_string()];
    labels.extend(numbered("a", n, 1));
    labels.extend(numbered("b", n, 1));
    (2 * n + 1, edges, labels)
}

/// K_1 + P_n: hub 0, path 1..=n.
pub(super) fn fan(n: usize) -> Built {
    let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((1..n).map(|i| (i, i + 1)));
    let mut labels = vec!["v0".to_string()];
    labels.extend(numbered("v", n, 1));
    (n + 1, edges, labels)
}

/// Two non-adjacent hubs 0 and 1 over the path 2..=n+1.
pub(super) fn double_fan(n: usize) -> Built {
    let mut edges = Vec::new();
    for i in 2..n + 2 {
        edges.push((0, i));
        edges.push((1, i));
    }
    edges.extend((2..n + 1).map(|i| (i, i + 1)));
    let mut labels = vec!["v0".to_string(), "v0'".to_string()];
    labels.extend(numbered("v", n, 1));
    (n + 2, edges, labels)
}

/// `n` cycles of length `c` sharing hub 0.
pub(super) fn friendship(c: usize, n: usize) -> Built {
    let mut edges = Vec::new();
    let mut labels = vec!["hub".to_string()];
    for petal in 0..n {
        let base = 1 + petal * (c - 1);
        let ring: Vec<usize> = std::iter::once(0).chain(base..base + c - 1).collect();
        for i in 0..c {
            edges.push((ring[i], ring[(i + 1) % c]));
        }
        labels.extend((1..c).map(|j| format!("p{petal}.{j}")));
    }
    (n * (c - 1) + 1, edges, labels)
}

/// Parts 0..m and m..m+n.
pub(super) fn complete_bipartite(m: usize, n: usize) -> Built {
    let edges = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))).collect();
    let mut labels = numbered("u", m, 1);
    labels.extend(numbered("w", n, 1));
    (m + n, edges, labels)
}

/// K_{n,n} minus a perfect matching: a_i = i, b_j = n + j, a_i ~ b_j iff i != j.
pub(super) fn crown(n: usize) -> Built {
    let edges = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)))
        .collect();
    let mut labels = numbered("a", n, 0);
    labels.extend(numbered("b", n, 0));
    (2 * n, edges, labels)
}

/// Outer cycle 0..n, inner t-skip cycle n..2n, spokes i ~ n+i.
pub(super) fn generalized_petersen(n: usize, t: usize) -> Built {
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + t) % n));
        edges.push((i, n + i));
    }
    let mut labels = numbered("o", n, 0);
    labels.extend(numbered("i", n, 0));
    (2 * n, edges, labels)
}

pub(super) fn hypercube(r: usize) -> Built {
    let n = 1usize << r;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..r {
            if v & (1 << b) == 0 {
                edges.push((v, v | (1 << b)));
            }
        }
    }
    let labels = (0..n).map(|v| format!("{v:0r$b}")).collect();
    (n, edges, labels)
}
