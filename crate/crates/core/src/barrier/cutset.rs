//! The `c_3` bound and the cutset `S'` built from a biased barrier.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::stage_one::StageOneReport;
use crate::error::{precondition, structural, violation, Result};
use crate::graph::Graph;
use crate::rational::ExactRational;
use crate::two_factor::{BarrierPair, ComponentClassification};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C3BoundLedger {
    pub lhs: usize,
    pub two_m: usize,
    pub p: usize,
    /// `Σ_{k>=2} (2k/3 + 1/3) c_{2k+1}`.
    pub high_term: ExactRational,
    /// `|T_1| / 3`.
    pub t1_term: ExactRational,
    pub q: usize,
    pub constant: ExactRational,
    pub rhs: ExactRational,
    pub holds: bool,
}

/// `c_3 <= 2m + p + Σ_{k>=2} (2k/3 + 1/3) c_{2k+1} + |T_1|/3 + q + 2/3`.
pub fn c3_bound(report: &StageOneReport, cls: &ComponentClassification) -> C3BoundLedger {
    let int = |v: usize| ExactRational::from_integer(v as i64);
    let high_term = cls
        .odd_classes
        .iter()
        .filter(|(&k, _)| k >= 2)
        .fold(ExactRational::zero(), |acc, (&k, comps)| {
            acc + ExactRational::new(2 * k as i64 + 1, 3) * int(comps.len())
        });
    let t1_term = ExactRational::new(cls.t1.len() as i64, 3);
    let constant = ExactRational::new(2, 3);
    let two_m = 2 * report.m_count;
    let q = report.q();
    let rhs = int(two_m) + int(cls.p) + high_term.clone() + t1_term.clone() + int(q) + constant.clone();
    let lhs = cls.c3();
    C3BoundLedger {
        lhs,
        two_m,
        p: cls.p,
        holds: int(lhs) <= rhs,
        high_term,
        t1_term,
        q,
        constant,
        rhs,
    }
}

/// A set `W` of `floor((4k+2)/3)` vertices of the outerplanar graph `d`
/// (on `2k+1` vertices) whose removal leaves `ceil((2k+1)/3)` isolated
/// vertices.
///
/// Colors `d` greedily along a reverse degeneracy order, where every
/// vertex has at most two earlier neighbors, and keeps the smallest
/// vertices of a largest color class outside `W`.
pub fn outerplanar_cover(d: &Graph, k: usize) -> Result<Vec<usize>> {
    let n = d.vertex_count();
    if k < 2 || n != 2 * k + 1 {
        return Err(precondition(format!("expected 2k+1 vertices with k >= 2, got n = {n}, k = {k}")));
    }
    let mut removed = vec![false; n];
    let mut deg: Vec<usize> = (0..n).map(|v| d.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .find(|&v| !removed[v] && deg[v] <= 2)
            .ok_or_else(|| structural("graph is not 2-degenerate, so not outerplanar"))?;
        removed[v] = true;
        order.push(v);
        for &w in d.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    let mut color = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let used: BTreeSet<usize> = d.neighbors(v).iter().map(|&w| color[w]).collect();
        color[v] = (0..3).find(|c| !used.contains(c)).expect("at most two colored neighbors");
    }
    let classes: Vec<Vec<usize>> = (0..3).map(|c| (0..n).filter(|&v| color[v] == c).collect()).collect();
    let largest = (0..3).max_by_key(|&c| (classes[c].len(), std::cmp::Reverse(c))).unwrap();
    let keep_count = n.div_ceil(3);
    let keep: BTreeSet<usize> = classes[largest].iter().take(keep_count).copied().collect();
    Ok((0..n).filter(|v| !keep.contains(v)).collect())
}

/// Vertices of component `ci` with a neighbor in `T`.
fn attachments(g: &Graph, cls: &ComponentClassification, ci: usize) -> Vec<usize> {
    let t: BTreeSet<usize> = cls.t.iter().copied().collect();
    cls.components[ci]
        .vertices
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().any(|w| t.contains(w)))
        .collect()
}

/// `S_D` for a component of class `k >= 1`.
pub fn select_sd(g: &Graph, cls: &ComponentClassification, report: &StageOneReport, ci: usize) -> Result<Vec<usize>> {
    let comp = &cls.components[ci];
    let k = match comp.class() {
        Some(k) if k >= 1 => k,
        _ => return Err(precondition(format!("component {ci} is not of class k >= 1"))),
    };
    let att = attachments(g, cls, ci);
    if att.len() != 2 * k + 1 {
        return Err(violation(format!(
            "component {ci} has {} attachment vertices for {} edges to T",
            att.len(),
            2 * k + 1
        )));
    }
    if k == 1 {
        return Ok(match report.representative_of(ci) {
            Some(x) => {
                if !att.contains(&x) {
                    return Err(violation(format!("representative {x} is not attached to T")));
                }
                att.into_iter().filter(|&v| v != x).collect()
            }
            None => att[..2].to_vec(),
        });
    }
    if comp.vertices.len() == 2 * k + 1 {
        let local = g.induced(&comp.vertices);
        let w = outerplanar_cover(&local, k)?;
        return Ok(w.into_iter().map(|i| comp.vertices[i]).collect());
    }
    Ok(att)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutsetAssembly {
    pub s_d: BTreeMap<usize, Vec<usize>>,
    /// Components whose `S_D` rule could not be applied, with the reason;
    /// their attachment vertices are used instead.
    pub s_d_failures: BTreeMap<usize, String>,
    pub t_prime: Vec<usize>,
    pub s_prime: Vec<usize>,
    /// `|S| + 2c_3 + Σ floor((4k+2)/3) c¹ + Σ (2k+1) c² + m`.
    pub expected_size: usize,
    pub size_identity_holds: bool,
    pub t_prime_is_m: bool,
    pub component_count: usize,
    /// `|T| - |T'| + 2|T'| + Σ_{k>=2} c²_{2k+1}`.
    pub lower_bound: usize,
    pub lower_bound_holds: bool,
    /// `|S'| / c(G - S')`, absent when `G - S'` is empty.
    pub ratio: Option<ExactRational>,
    /// `c(G - S') <= 1`.
    pub degenerate: bool,
}

/// Assembles `S' = S ∪ ⋃ S_D ∪ T'` and evaluates it exactly.
pub fn assemble_cutset(
    g: &Graph,
    barrier: &BarrierPair,
    cls: &ComponentClassification,
    report: &StageOneReport,
) -> Result<CutsetAssembly> {
    let mut s = barrier.s.clone();
    s.sort_unstable();
    if s != cls.s {
        return Err(precondition("classification was computed for a different S"));
    }
    let mut s_d = BTreeMap::new();
    let mut s_d_failures = BTreeMap::new();
    for ci in 0..cls.components.len() {
        if !cls.class_of(ci).is_some_and(|k| k >= 1) {
            continue;
        }
        match select_sd(g, cls, report, ci) {
            Ok(set) => {
                s_d.insert(ci, set);
            }
            Err(e) => {
                s_d_failures.insert(ci, e.to_string());
                s_d.insert(ci, attachments(g, cls, ci));
            }
        }
    }
    let mut s_prime: BTreeSet<usize> = cls.s.iter().copied().collect();
    s_prime.extend(s_d.values().flatten().copied());
    s_prime.extend(report.t_prime.iter().copied());
    let s_prime: Vec<usize> = s_prime.into_iter().collect();

    let tight: usize = cls
        .tight_classes
        .iter()
        .map(|(&k, v)| (4 * k).div_ceil(3) * v.len())
        .sum();
    let loose: usize = cls.loose_classes.iter().map(|(&k, v)| (2 * k + 1) * v.len()).sum();
    let loose_count: usize = cls.loose_classes.values().map(Vec::len).sum();
    let m = report.m_count;
    let expected_size = cls.s.len() + 2 * cls.c3() + tight + loose + m;

    let mut removed = vec![false; g.vertex_count()];
    for &v in &s_prime {
        removed[v] = true;
    }
    let component_count = g.components_without(&removed).len();
    let lower_bound = cls.t.len() + report.t_prime.len() + loose_count;
    let ratio = (component_count > 0).then(|| ExactRational::new(s_prime.len() as i64, component_count as i64));
    Ok(CutsetAssembly {
        size_identity_holds: s_prime.len() == expected_size,
        t_prime_is_m: report.t_prime.len() == m,
        lower_bound_holds: component_count >= lower_bound,
        degenerate: component_count <= 1,
        s_d,
        s_d_failures,
        t_prime: report.t_prime.clone(),
        s_prime,
        expected_size,
        component_count,
        lower_bound,
        ratio,
    })
}
