//! Deterministic generators for the studied graph families and networks.

mod basic;
mod butterfly;
mod sierpinski;
mod silicate;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("family {0:?} is not implemented (no construction available)")]
    NotImplemented(String),
    #[error("{family} expects {expected} parameter(s), got {got}")]
    Arity {
        family: Family,
        expected: usize,
        got: usize,
    },
    #[error("{family}: {msg}")]
    OutOfRange { family: Family, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Wheel,
    DoubleWheel,
    Fan,
    DoubleFan,
    Friendship,
    CompleteBipartite,
    Crown,
    GeneralizedPetersen,
    Hypercube,
    Butterfly,
    AugmentedButterfly,
    EnhancedButterfly,
    Benes,
    Silicate,
    Sierpinski,
    SierpinskiGasket,
}

impl Family {
    pub const ALL: [Family; 18] = [
        Family::Path,
        Family::Cycle,
        Family::Wheel,
        Family::DoubleWheel,
        Family::Fan,
        Family::DoubleFan,
        Family::Friendship,
        Family::CompleteBipartite,
        Family::Crown,
        Family::GeneralizedPetersen,
        Family::Hypercube,
        Family::Butterfly,
        Family::AugmentedButterfly,
        Family::EnhancedButterfly,
        Family::Benes,
        Family::Silicate,
        Family::Sierpinski,
        Family::SierpinskiGasket,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::DoubleWheel => "double_wheel",
            Family::Fan => "fan",
            Family::DoubleFan => "double_fan",
            Family::Friendship => "friendship",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Crown => "crown",
            Family::GeneralizedPetersen => "generalized_petersen",
            Family::Hypercube => "hypercube",
            Family::Butterfly => "butterfly",
            Family::AugmentedButterfly => "augmented_butterfly",
            Family::EnhancedButterfly => "enhanced_butterfly",
            Family::Benes => "benes",
            Family::Silicate => "silicate",
            Family::Sierpinski => "sierpinski",
            Family::SierpinskiGasket => "sierpinski_gasket",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::Friendship | Family::CompleteBipartite | Family::GeneralizedPetersen => 2,
            _ => 1,
        }
    }

    /// Closed-form `(vertex count, edge count)`.
    pub fn size(self, p: &[usize]) -> (usize, usize) {
        let pow2 = |e: usize| 1usize << e;
        let pow3 = |e: usize| 3usize.pow(e as u32);
        match self {
            Family::Path => (p[0], p[0] - 1),
            Family::Cycle => (p[0], p[0]),
            Family::Wheel => (p[0] + 1, 2 * p[0]),
            Family::DoubleWheel => (2 * p[0] + 1, 4 * p[0]),
            Family::Fan => (p[0] + 1, 2 * p[0] - 1),
            Family::DoubleFan => (p[0] + 2, 3 * p[0] - 1),
            Family::Friendship => (p[1] * (p[0] - 1) + 1, p[1] * p[0]),
            Family::CompleteBipartite => (p[0] + p[1], p[0] * p[1]),
            Family::Crown => (2 * p[0], p[0] * (p[0] - 1)),
            Family::GeneralizedPetersen => (2 * p[0], 3 * p[0]),
            Family::Hypercube => (pow2(p[0]), p[0] * pow2(p[0]) / 2),
            Family::Butterfly => ((p[0] + 1) * pow2(p[0]), p[0] * pow2(p[0] + 1)),
            Family::EnhancedButterfly => ((p[0] + 1) * pow2(p[0]) + p[0] * pow2(p[0]) / 2, p[0] * pow2(p[0] + 2)),
            Family::AugmentedButterfly => ((p[0] + 1) * pow2(p[0]), p[0] * pow2(p[0] + 1) + p[0] * pow2(p[0]) / 2),
            Family::Benes => ((2 * p[0] + 1) * pow2(p[0]), p[0] * pow2(p[0] + 2)),
            Family::Silicate => (15 * p[0] * p[0] + 3 * p[0], 36 * p[0] * p[0]),
            Family::Sierpinski => (pow3(p[0]), 3 * (pow3(p[0]) - 1) / 2),
            Family::SierpinskiGasket => ((pow3(p[0]) + 3) / 2, pow3(p[0])),
        }
    }

    /// Validates the parameter count and ranges.
    pub fn check(self, p: &[usize]) -> Result<(), FamilyError> {
        if p.len() != self.arity() {
            return Err(FamilyError::Arity {
                family: self,
                expected: self.arity(),
                got: p.len(),
            });
        }
        let bad = |msg: &str| {
            Err(FamilyError::OutOfRange {
                family: self,
                msg: msg.to_string(),
            })
        };
        // exponents are capped to keep generated graphs addressable
        match self {
            Family::Path if p[0] < 2 => bad("needs m >= 2"),
            Family::Cycle | Family::Wheel | Family::DoubleWheel if p[0] < 3 => bad("needs n >= 3"),
            Family::Fan | Family::DoubleFan if p[0] < 2 => bad("needs n >= 2"),
            Family::Friendship if p[0] < 3 || p[1] < 1 => bad("needs cycle length c >= 3 and n >= 1"),
            Family::CompleteBipartite if p[0] < 1 || p[1] < 1 => bad("needs m, n >= 1"),
            Family::Crown if p[0] < 3 => bad("needs n >= 3"),
            Family::GeneralizedPetersen if p[0] < 3 || p[1] < 1 || 2 * p[1] >= p[0] => {
                bad("needs n >= 3 and 1 <= t < n/2")
            }
            Family::Hypercube if p[0] < 1 || p[0] > 20 => bad("needs 1 <= r <= 20"),
            Family::Butterfly | Family::AugmentedButterfly | Family::EnhancedButterfly | Family::Benes
                if p[0] < 1 || p[0] > 16 =>
            {
                bad("needs 1 <= r <= 16")
            }
            Family::Silicate if p[0] < 1 || p[0] > 200 => bad("needs 1 <= n <= 200"),
            Family::Sierpinski | Family::SierpinskiGasket if p[0] < 1 || p[0] > 12 => bad("needs 1 <= n <= 12"),
            _ => Ok(()),
        }
    }

    /// Parameter settings in increasing order of vertex count, starting from the smallest valid one.
    pub fn parameter_sweep(self, max_n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        match self.arity() {
            1 => {
                for a in 1.. {
                    if self.check(&[a]).is_err() {
                        if a > 3 {
                            break;
                        }
                        continue;
                    }
                    if self.size(&[a]).0 > max_n {
                        break;
                    }
                    out.push(vec![a]);
                }
            }
            _ => {
                for a in 1..=max_n {
                    for b in 1..=max_n {
                        if self.check(&[a, b]).is_ok() && self.size(&[a, b]).0 <= max_n {
                            out.push(vec![a, b]);
                        }
                    }
                }
                out.sort_by_key(|p| (self.size(p).0, p.clone()));
            }
        }
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        if norm == "actinia" {
            return Err(FamilyError::NotImplemented(norm));
        }
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or(FamilyError::Unknown(s.to_string()))
    }
}

/// A family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self, FamilyError> {
        family.check(&params)?;
        Ok(FamilySpec { family, params })
    }

    pub fn parse(name: &str, params: &[usize]) -> Result<Self, FamilyError> {
        FamilySpec::new(name.parse()?, params.to_vec())
    }

    pub fn size(&self) -> (usize, usize) {
        self.family.size(&self.params)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.family)?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses `name(a,b)`; the parentheses may be omitted for no parameters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, args) = match s.split_once('(') {
            Some((name, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| FamilyError::Unknown(s.to_string()))?;
                (name, inner)
            }
            None => (s, ""),
        };
        let family: Family = name.trim().parse()?;
        let params = args
            .split(',')
            .map(str::trim)
            .filter(|a| !a.is_empty())
            .map(|a| a.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| FamilyError::OutOfRange {
                family,
                msg: format!("non-integer parameter in `{s}`"),
            })?;
        FamilySpec::new(family, params)
    }
}

/// Builds the graph for `spec`, with family-specific vertex labels.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.family.check(&spec.params)?;
    let p = &spec.params;
    let (n, edges, labels) = match spec.family {
        Family::Path => basic::path(p[0]),
        Family::Cycle => basic::cycle(p[0]),
        Family::Wheel => basic::wheel(p[0]),
        Family::DoubleWheel => basic::double_wheel(p[0]),
        Family::Fan => basic::fan(p[0]),
        Family::DoubleFan => basic::double_fan(p[0]),
        Family::Friendship => basic::friendship(p[0], p[1]),
        Family::CompleteBipartite => basic::complete_bipartite(p[0], p[1]),
        Family::Crown => basic::crown(p[0]),
        Family::GeneralizedPetersen => basic::generalized_petersen(p[0], p[1]),
        Family::Hypercube => basic::hypercube(p[0]),
        Family::Butterfly => butterfly::butterfly(p[0]),
        Family::AugmentedButterfly => butterfly::augmented(p[0]),
        Family::EnhancedButterfly => butterfly::enhanced(p[0]),
        Family::Benes => butterfly::benes(p[0]),
        Family::Silicate => silicate::silicate(p[0]),
        Family::Sierpinski => sierpinski::sierpinski(p[0]),
        Family::SierpinskiGasket => sierpinski::gasket(p[0]),
    };
    Ok(Graph::new(n, &edges)?.with_labels(labels)?)
}

/// Raw construction output: vertex count, edges, labels.
type Built = (usize, Vec<(usize, usize)>, Vec<String>);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{diameter, maximal_cliques};

    fn gen(f: Family, p: &[usize]) -> Graph {
        generate(&FamilySpec::new(f, p.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn size_table_holds_for_small_parameters() {
        for f in Family::ALL {
            let sweep = f.parameter_sweep(400);
            assert!(!sweep.is_empty(), "{f} has no small instance");
            for p in sweep.iter().take(4) {
                let g = gen(f, p);
                assert_eq!((g.n(), g.m()), f.size(p), "{f}{p:?}");
                assert!(g.is_connected(), "{f}{p:?} disconnected");
                assert_eq!(g.labels().map(|l| l.len()), Some(g.n()));
            }
        }
    }

    #[test]
    fn paper_size_examples() {
        let w = gen(Family::Wheel, &[5]);
        assert_eq!((w.n(), w.m()), (6, 10));
        let s = gen(Family::Silicate, &[2]);
        assert_eq!((s.n(), s.m()), (66, 144));
        let b = gen(Family::Butterfly, &[3]);
        assert_eq!((b.n(), b.m()), (32, 48));
        let df = gen(Family::DoubleFan, &[7]);
        assert_eq!((df.n(), df.m()), (9, 20));
    }

    #[test]
    fn crown3_is_c6() {
        let g = gen(Family::Crown, &[3]);
        assert_eq!(g.n(), 6);
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn hypercube3() {
        let g = gen(Family::Hypercube, &[3]);
        assert_eq!((g.n(), g.m()), (8, 12));
        assert!((0..8).all(|v| g.degree(v) == 3));
        // bipartite by parity of popcount
        assert!(g.edges().iter().all(|&(u, v)| u.count_ones() % 2 != v.count_ones() % 2));
    }

    #[test]
    fn petersen_diameter_two() {
        let g = gen(Family::GeneralizedPetersen, &[5, 2]);
        assert_eq!(diameter(&g), Ok(2));
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn silicate1_has_six_tetrahedra() {
        let g = gen(Family::Silicate, &[1]);
        let cliques = maximal_cliques(&g, 1000).unwrap();
        assert_eq!(cliques.len(), 6);
        assert!(cliques.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn generation_is_deterministic() {
        for f in Family::ALL {
            let p = &f.parameter_sweep(60)[0];
            assert_eq!(gen(f, p), gen(f, p));
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("double-wheel".parse::<Family>(), Ok(Family::DoubleWheel));
        assert!(matches!(
            "actinia".parse::<Family>(),
            Err(FamilyError::NotImplemented(_))
        ));
        assert!(matches!("moebius".parse::<Family>(), Err(FamilyError::Unknown(_))));
        assert!(matches!(
            FamilySpec::parse("cycle", &[2]),
            Err(FamilyError::OutOfRange { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("wheel", &[5, 1]),
            Err(FamilyError::Arity { .. })
        ));
    }
}
