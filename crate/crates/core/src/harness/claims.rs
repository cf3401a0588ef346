//! Registry of the published cover numbers for graph families and networks.
//!
//! Every claim is at distance `k = 2`. Claims stated for both variants are
//! stored once per variant.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::families::{Family, FamilyError};
use crate::solvers::Variant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    Exact,
    UpperBound,
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimKind::Exact => "exact",
            ClaimKind::UpperBound => "upper_bound",
        })
    }
}

#[derive(Clone)]
pub struct ClaimRecord {
    pub id: &'static str,
    /// Family name as accepted by [`Family`]'s parser.
    pub family: &'static str,
    pub variant: Variant,
    pub k: u32,
    pub kind: ClaimKind,
    /// The claimed value in closed form.
    pub formula: &'static str,
    /// Parameter constraints, in words.
    pub domain_text: &'static str,
    /// The result as stated, in plain notation.
    pub statement: &'static str,
    domain: fn(&[usize]) -> bool,
    value: fn(&[usize]) -> usize,
}

impl fmt::Debug for ClaimRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClaimRecord")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("variant", &self.variant)
            .field("kind", &self.kind)
            .field("formula", &self.formula)
            .finish()
    }
}

impl ClaimRecord {
    pub fn family(&self) -> Result<Family, FamilyError> {
        self.family.parse()
    }

    pub fn applies(&self, params: &[usize]) -> bool {
        (self.domain)(params)
    }

    /// Claimed value; `None` outside the parameter domain.
    pub fn evaluate(&self, params: &[usize]) -> Option<usize> {
        self.applies(params).then(|| (self.value)(params))
    }
}

fn ceil5(x: usize) -> usize {
    x.div_ceil(5)
}

fn pow2(e: usize) -> usize {
    1usize << e
}

fn pow3(e: usize) -> usize {
    3usize.pow(e as u32)
}

macro_rules! claim {
    ($id:literal, $fam:literal, $var:ident, $kind:ident, $formula:literal, $domain_text:literal, $statement:literal,
     |$p:ident| $domain:expr, |$q:ident| $value:expr) => {
        ClaimRecord {
            id: $id,
            family: $fam,
            variant: Variant::$var,
            k: 2,
            kind: ClaimKind::$kind,
            formula: $formula,
            domain_text: $domain_text,
            statement: $statement,
            domain: |$p: &[usize]| $domain,
            value: |$q: &[usize]| $value,
        }
    };
}

/// The full registry, in a fixed order.
pub fn claims_registry() -> Vec<ClaimRecord> {
    vec![
        claim!(
            "path_strong",
            "path",
            Strong,
            Exact,
            "ceil(m/5)",
            "m >= 2",
            "SSPC_2U(P_m) = ceil(m/5)",
            |p| p[0] >= 2,
            |p| ceil5(p[0])
        ),
        claim!(
            "cycle_strong",
            "cycle",
            Strong,
            Exact,
            "ceil(n/5)",
            "n >= 5",
            "SSPC_2U(C_n) = ceil(n/5) for n >= 5",
            |p| p[0] >= 5,
            |p| ceil5(p[0])
        ),
        claim!(
            "complete_bipartite_strong",
            "complete_bipartite",
            Strong,
            Exact,
            "m",
            "2 <= m <= n",
            "SSPC_2U(K_{m,n}) = m for 2 <= m <= n",
            |p| 2 <= p[0] && p[0] <= p[1],
            |p| p[0]
        ),
        claim!(
            "wheel_weak",
            "wheel",
            Weak,
            Exact,
            "ceil(n/5)",
            "n >= 5",
            "SPC_2U(W_n) = SSPC_2U(W_n) = ceil(n/5) for n >= 5",
            |p| p[0] >= 5,
            |p| ceil5(p[0])
        ),
        claim!(
            "wheel_strong",
            "wheel",
            Strong,
            Exact,
            "ceil(n/5)",
            "n >= 5",
            "SPC_2U(W_n) = SSPC_2U(W_n) = ceil(n/5) for n >= 5",
            |p| p[0] >= 5,
            |p| ceil5(p[0])
        ),
        claim!(
            "double_wheel_weak",
            "double_wheel",
            Weak,
            Exact,
            "2*ceil(n/5)",
            "n >= 5",
            "SPC_2U(DW_n) = SSPC_2U(DW_n) = 2 ceil(n/5) for n >= 5",
            |p| p[0] >= 5,
            |p| 2 * ceil5(p[0])
        ),
        claim!(
            "double_wheel_strong",
            "double_wheel",
            Strong,
            Exact,
            "2*ceil(n/5)",
            "n >= 5",
            "SPC_2U(DW_n) = SSPC_2U(DW_n) = 2 ceil(n/5) for n >= 5",
            |p| p[0] >= 5,
            |p| 2 * ceil5(p[0])
        ),
        claim!(
            "crown_weak",
            "crown",
            Weak,
            Exact,
            "2",
            "n >= 3",
            "SPC_2U(H_{n,n}) = 2 for n >= 3",
            |p| p[0] >= 3,
            |_p| 2
        ),
        claim!(
            "crown_strong",
            "crown",
            Strong,
            Exact,
            "n-1",
            "n >= 3",
            "SSPC_2U(H_{n,n}) = n - 1 for n >= 3",
            |p| p[0] >= 3,
            |p| p[0] - 1
        ),
        claim!(
            "petersen_strong",
            "generalized_petersen",
            Strong,
            Exact,
            "3",
            "(n,t) = (5,2)",
            "SSPC_2U(G(n,k)) = 3, proved for the Petersen graph",
            |p| p == [5, 2],
            |_p| 3
        ),
        claim!(
            "fan_weak",
            "fan",
            Weak,
            Exact,
            "ceil(n/5)",
            "n >= 5",
            "SPC_2U(F_{1,n}) = SSPC_2U(F_{1,n}) = ceil(n/5) for n >= 5",
            |p| p[0] >= 5,
            |p| ceil5(p[0])
        ),
        claim!(
            "fan_strong",
            "fan",
            Strong,
            Exact,
            "ceil(n/5)",
            "n >= 5",
            "SPC_2U(F_{1,n}) = SSPC_2U(F_{1,n}) = ceil(n/5) for n >= 5",
            |p| p[0] >= 5,
            |p| ceil5(p[0])
        ),
        claim!(
            "double_fan_weak",
            "double_fan",
            Weak,
            Exact,
            "1+ceil(n/5)",
            "n >= 2",
            "SPC_2U(DF_n) = SSPC_2U(DF_n) = 1 + ceil(n/5)",
            |p| p[0] >= 2,
            |p| 1 + ceil5(p[0])
        ),
        claim!(
            "double_fan_strong",
            "double_fan",
            Strong,
            Exact,
            "1+ceil(n/5)",
            "n >= 2",
            "SPC_2U(DF_n) = SSPC_2U(DF_n) = 1 + ceil(n/5)",
            |p| p[0] >= 2,
            |p| 1 + ceil5(p[0])
        ),
        claim!(
            "friendship_weak",
            "friendship",
            Weak,
            UpperBound,
            "1+n*ceil(c/5)",
            "c >= 4, n >= 4",
            "SPC_2U(F_{c,n}) <= 1 + n ceil(c/5) for c, n >= 4",
            |p| p[0] >= 4 && p[1] >= 4,
            |p| 1 + p[1] * ceil5(p[0])
        ),
        claim!(
            "friendship_strong",
            "friendship",
            Strong,
            UpperBound,
            "1+n*ceil(c/5)",
            "c >= 4, n >= 4",
            "SSPC_2U(F_{c,n}) <= 1 + n ceil(c/5) for c, n >= 4",
            |p| p[0] >= 4 && p[1] >= 4,
            |p| 1 + p[1] * ceil5(p[0])
        ),
        claim!(
            "butterfly_weak",
            "butterfly",
            Weak,
            UpperBound,
            "2^(r-1) if r <= 4 else 2^r",
            "r >= 1",
            "SPC_2U(BF(r)) <= 2^(r-1) for r <= 4 and 2^r for r > 4",
            |p| p[0] >= 1,
            |p| if p[0] <= 4 { pow2(p[0] - 1) } else { pow2(p[0]) }
        ),
        claim!(
            "butterfly_strong",
            "butterfly",
            Strong,
            UpperBound,
            "ceil(r/2)*2^(r-1)",
            "r >= 3",
            "SSPC_2U(BF(r)) <= ceil(r/2) 2^(r-1) for r >= 3",
            |p| p[0] >= 3,
            |p| p[0].div_ceil(2) * pow2(p[0] - 1)
        ),
        claim!(
            "augmented_butterfly_3_strong",
            "augmented_butterfly",
            Strong,
            Exact,
            "12",
            "r = 3",
            "SSPC_2U(ABF(3)) = 12",
            |p| p[0] == 3,
            |_p| 12
        ),
        claim!(
            "augmented_butterfly_weak",
            "augmented_butterfly",
            Weak,
            UpperBound,
            "r*2^(r-1)",
            "r >= 1",
            "SPC_2U(ABF(r)) <= r 2^(r-1)",
            |p| p[0] >= 1,
            |p| p[0] * pow2(p[0] - 1)
        ),
        claim!(
            "augmented_butterfly_strong",
            "augmented_butterfly",
            Strong,
            UpperBound,
            "r*2^(r-1)",
            "r >= 1",
            "SSPC_2U(ABF(r)) <= r 2^(r-1)",
            |p| p[0] >= 1,
            |p| p[0] * pow2(p[0] - 1)
        ),
        claim!(
            "enhanced_butterfly_3_strong",
            "enhanced_butterfly",
            Strong,
            Exact,
            "12",
            "r = 3",
            "SSPC_2U(EBF(3)) = 12",
            |p| p[0] == 3,
            |_p| 12
        ),
        claim!(
            "enhanced_butterfly_weak",
            "enhanced_butterfly",
            Weak,
            UpperBound,
            "r*2^(r-1)",
            "r >= 1",
            "SPC_2U(EBF(r)) <= r 2^(r-1)",
            |p| p[0] >= 1,
            |p| p[0] * pow2(p[0] - 1)
        ),
        claim!(
            "enhanced_butterfly_strong",
            "enhanced_butterfly",
            Strong,
            UpperBound,
            "r*2^(r-1)",
            "r >= 1",
            "SSPC_2U(EBF(r)) <= r 2^(r-1)",
            |p| p[0] >= 1,
            |p| p[0] * pow2(p[0] - 1)
        ),
        claim!(
            "benes_2_weak",
            "benes",
            Weak,
            Exact,
            "2",
            "r = 2",
            "SPC_2U(B(2)) = 2",
            |p| p[0] == 2,
            |_p| 2
        ),
        claim!(
            "benes_weak",
            "benes",
            Weak,
            UpperBound,
            "2^r",
            "r >= 3",
            "SPC_2U(B(r)) <= 2^r for r >= 3",
            |p| p[0] >= 3,
            |p| pow2(p[0])
        ),
        claim!(
            "benes_strong",
            "benes",
            Strong,
            UpperBound,
            "ceil(r/2)*2^r",
            "r >= 1",
            "SSPC_2U(B(r)) <= ceil(r/2) 2^r",
            |p| p[0] >= 1,
            |p| p[0].div_ceil(2) * pow2(p[0])
        ),
        claim!(
            "silicate_weak",
            "silicate",
            Weak,
            Exact,
            "6n^2",
            "n >= 1",
            "SPC_2U(SL(n)) = 6n^2",
            |p| p[0] >= 1,
            |p| 6 * p[0] * p[0]
        ),
        claim!(
            "silicate_strong",
            "silicate",
            Strong,
            Exact,
            "6n^2",
            "n >= 1",
            "SSPC_2U(SL(n)) = 6n^2",
            |p| p[0] >= 1,
            |p| 6 * p[0] * p[0]
        ),
        claim!(
            "hypercube_weak",
            "hypercube",
            Weak,
            UpperBound,
            "2^(n-2)",
            "n >= 3",
            "SPC_2U(Q_n) <= 2^(n-2) for n >= 3",
            |p| p[0] >= 3,
            |p| pow2(p[0] - 2)
        ),
        claim!(
            "hypercube_strong",
            "hypercube",
            Strong,
            UpperBound,
            "2^(n-2)",
            "n >= 3",
            "SSPC_2U(Q_n) <= 2^(n-2) for n >= 3, sharp for n = 3",
            |p| p[0] >= 3,
            |p| pow2(p[0] - 2)
        ),
        claim!(
            "sierpinski_weak",
            "sierpinski",
            Weak,
            UpperBound,
            "3^(n-1)",
            "n >= 2",
            "SPC_2U(S(n,3)) <= 3^(n-1) for n >= 2",
            |p| p[0] >= 2,
            |p| pow3(p[0] - 1)
        ),
        claim!(
            "sierpinski_strong",
            "sierpinski",
            Strong,
            UpperBound,
            "3^(n-1)",
            "n >= 2",
            "SSPC_2U(S(n,3)) <= 3^(n-1) for n >= 2",
            |p| p[0] >= 2,
            |p| pow3(p[0] - 1)
        ),
        claim!(
            "sierpinski_gasket_2_weak",
            "sierpinski_gasket",
            Weak,
            Exact,
            "2",
            "n = 2",
            "SPC_2U(S_2) = SSPC_2U(S_2) = 2",
            |p| p[0] == 2,
            |_p| 2
        ),
        claim!(
            "sierpinski_gasket_2_strong",
            "sierpinski_gasket",
            Strong,
            Exact,
            "2",
            "n = 2",
            "SPC_2U(S_2) = SSPC_2U(S_2) = 2",
            |p| p[0] == 2,
            |_p| 2
        ),
        claim!(
            "sierpinski_gasket_weak",
            "sierpinski_gasket",
            Weak,
            UpperBound,
            "3^(n-2)",
            "n >= 3",
            "SPC_2U(S_n) <= 3^(n-2) for n >= 3",
            |p| p[0] >= 3,
            |p| pow3(p[0] - 2)
        ),
        claim!(
            "sierpinski_gasket_strong",
            "sierpinski_gasket",
            Strong,
            UpperBound,
            "6*3^(n-3)",
            "n >= 3",
            "SSPC_2U(S_n) <= 6 * 3^(n-3) for n >= 3",
            |p| p[0] >= 3,
            |p| 6 * pow3(p[0] - 3)
        ),
        claim!(
            "actinia_strong",
            "actinia",
            Strong,
            Exact,
            "ceil(n/5)",
            "m >= 2, n >= 1",
            "SSPC_2U(A(m,n)) = ceil(n/5) for m >= 2, n >= 1",
            |p| p.len() == 2 && p[0] >= 2 && p[1] >= 1,
            |p| ceil5(p[1])
        ),
    ]
}

/// Claims about `family` that apply to `params` for `variant`, with their values.
pub fn lookup(family: &str, params: &[usize], variant: Variant) -> Result<Vec<(ClaimRecord, usize)>, FamilyError> {
    let fam: Family = family.parse()?;
    fam.check(params)?;
    Ok(claims_registry()
        .into_iter()
        .filter(|c| c.family == fam.name() && c.variant == variant)
        .filter_map(|c| c.evaluate(params).map(|v| (c, v)))
        .collect())
}
