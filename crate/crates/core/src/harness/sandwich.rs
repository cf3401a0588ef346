use serde::Serialize;

use crate::solvers::{Bounds, Variant};

/// A bound on the wrong side of an exact optimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundViolation {
    pub bound: &'static str,
    pub value: usize,
    pub variant: Variant,
    pub optimum: usize,
    /// Monitored bounds are reported but not treated as failures.
    pub monitored: bool,
}

/// Checks every applicable bound against the exact optima that are known.
pub fn sandwich_violations(b: &Bounds, weak: Option<usize>, strong: Option<usize>) -> Vec<BoundViolation> {
    let mut out = Vec::new();
    let mut check = |name, bound: crate::solvers::Bound, variant, opt: Option<usize>, lower: bool, monitored| {
        let Some(opt) = opt else { return };
        if !bound.applicable {
            return;
        }
        let bad = if lower { bound.value > opt } else { bound.value < opt };
        if bad {
            out.push(BoundViolation {
                bound: name,
                value: bound.value,
                variant,
                optimum: opt,
                monitored,
            });
        }
    };
    check("degree_lb", b.degree_lb, Variant::Weak, weak, true, false);
    check("degree_lb", b.degree_lb, Variant::Strong, strong, true, false);
    check("domination_lb", b.domination_lb, Variant::Strong, strong, true, false);
    check("clique_lb", b.clique_lb, Variant::Strong, strong, true, false);
    check("trivial_ub", b.trivial_ub, Variant::Strong, strong, false, false);
    check(
        "order_diameter_ub",
        b.order_diameter_ub,
        Variant::Strong,
        strong,
        false,
        false,
    );
    check("diameter_ub", b.diameter_ub, Variant::Strong, strong, false, true);
    check("half_ub", b.half_ub, Variant::Strong, strong, false, true);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::solvers::{compute_bounds, SolverConfig};

    #[test]
    fn long_path_trips_the_monitored_diameter_bound() {
        let e: Vec<_> = (1..10).map(|i| (i - 1, i)).collect();
        let p10 = Graph::new(10, &e).unwrap();
        let b = compute_bounds(&p10, 2, &SolverConfig::default()).unwrap();
        let v = sandwich_violations(&b, Some(3), Some(3));
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].bound, v[0].monitored), ("diameter_ub", true));
    }
}
