//! Checking a candidate map against the unique crystal isomorphism.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use crate::crystal::Crystal;
use crate::error::CrystalError;

use super::report::Show;
use super::suites::par_check;
use super::{AsDocument, SuiteParams, SuiteReport};

/// Checks `candidate(hw_a) = hw_b` and that `candidate` commutes with every
/// `e_i` and `f_i` on `region`.
///
/// `region` must be connected through `f`-edges that stay inside it, with
/// `hw_a` among its elements; otherwise the check is refused. An `f_i` edge
/// leaving the region is not compared. Since a crystal isomorphism between
/// connected highest weight crystals is determined by where it sends the
/// highest weight element, a pass means `candidate` agrees with the unique
/// isomorphism on the region.
pub fn unique_isomorphism_check<A, B, F>(
    suite: &str,
    params: SuiteParams,
    region: &[A],
    hw_a: &A,
    hw_b: &B,
    candidate: F,
) -> Result<SuiteReport, CrystalError>
where
    A: Crystal + Eq + Hash + AsDocument + Sync,
    B: Crystal + Show + Sync,
    F: Fn(&A) -> B + Sync,
{
    check_connected(region, hw_a)?;
    let members: HashSet<&A> = region.iter().collect();
    let mut checker = par_check(region, |a, c| {
        let image = candidate(a);
        for i in a.rank().indices() {
            if let Some(fa) = a.f(i).filter(|x| members.contains(x)) {
                c.eq("candidate_commutes_with_f", a, Some(i), image.f(i), Some(candidate(&fa)));
            }
            c.eq("candidate_commutes_with_e", a, Some(i), image.e(i), a.e(i).map(|x| candidate(&x)));
        }
    });
    checker.eq("candidate_maps_highest_weight", hw_a, None, hw_b.clone(), candidate(hw_a));
    Ok(SuiteReport::from_checker(suite, params, region.len() as u64, checker))
}

fn check_connected<A: Crystal + Eq + Hash>(region: &[A], hw: &A) -> Result<(), CrystalError> {
    let index: HashMap<&A, usize> = region.iter().enumerate().map(|(k, a)| (a, k)).collect();
    let Some(&start) = index.get(hw) else {
        return Err(CrystalError::Disconnected("the highest weight element is not in the region".into()));
    };
    let mut neighbours = vec![Vec::new(); region.len()];
    for (k, a) in region.iter().enumerate() {
        for i in a.rank().indices() {
            if let Some(&t) = a.f(i).as_ref().and_then(|x| index.get(x)) {
                neighbours[k].push(t);
                neighbours[t].push(k);
            }
        }
    }
    let mut seen = vec![false; region.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(k) = stack.pop() {
        for &t in &neighbours[k] {
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    let reached = seen.iter().filter(|&&s| s).count();
    if reached < region.len() {
        return Err(CrystalError::Disconnected(format!(
            "only {reached} of {} elements are reachable from the highest weight element",
            region.len()
        )));
    }
    Ok(())
}
