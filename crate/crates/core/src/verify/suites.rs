//! The suite registry and the checks behind each suite.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bracket::{Bracket, BracketKind};
use crate::crystal::{cartan, jump, Bicrystal, Crystal, Rank};
use crate::error::CrystalError;
use crate::multisegment::{Multisegment, Segment};
use crate::pbw::{phi, phi_inv, LusztigDatum};
use crate::tableau::{enumerate_ssyt, Partition, Tableau};

use super::enumerate::{enumerate_lusztig_data, enumerate_multisegments, multisegment_closure, tableau_closure};
use super::fixtures;
use super::report::{Checker, Show};
use super::{AsDocument, Budget, SuiteParams, SuiteReport};

/// What a suite enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Multisegments with `|M| <= max_size`.
    Multisegments,
    /// Lusztig data with total height `<= max_size`.
    LusztigData,
    /// All tableaux of one shape.
    Tableaux,
    /// Multisegments, tableaux, or both, depending on the parameters given.
    Either,
}

#[derive(Debug, Clone, Copy)]
pub struct Suite {
    pub name: &'static str,
    pub domain: Domain,
    pub summary: &'static str,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "ms_axioms",
        domain: Domain::Multisegments,
        summary: "both crystal structures on multisegments: e/f inverse, weight and ε/φ shifts, ε counts e, ∅ reachable",
    },
    Suite {
        name: "oracle_agreement",
        domain: Domain::Either,
        summary: "direct enumeration equals the f-closure of the highest weight element",
    },
    Suite {
        name: "ks_conditions",
        domain: Domain::Multisegments,
        summary: "the six bicrystal conditions characterizing B(∞)",
    },
    Suite {
        name: "bracket_count",
        domain: Domain::Multisegments,
        summary: "ε_i + ε_i^* + <wt, α_i^∨> = ur_i + ur_i^*",
    },
    Suite {
        name: "star_commute",
        domain: Domain::Multisegments,
        summary: "f_j f_i^* = f_i^* f_j for i ≠ j",
    },
    Suite {
        name: "ur_tracking",
        domain: Domain::Multisegments,
        summary: "how f_i^* moves the per-height counts of uncanceled ) in S_j",
    },
    Suite {
        name: "flip_symmetry",
        domain: Domain::Multisegments,
        summary: "Flip conjugates f_i, e_i, ε_i to f_{n+1-i}^*, e_{n+1-i}^*, ε_{n+1-i}^*",
    },
    Suite {
        name: "local_structure",
        domain: Domain::Multisegments,
        summary: "along f_i from b: ε_i^* constant, jump drops by one per step, f_i = f_i^* at jump 0",
    },
    Suite {
        name: "mk_recursion",
        domain: Domain::Multisegments,
        summary: "M^(k)_{i-1,k-1} = M_{i,k} and the lower bound on M^(k)_{i,k}",
    },
    Suite {
        name: "first_half",
        domain: Domain::Multisegments,
        summary: "M^(n) is shift_down(M) plus extra [i,n] segments",
    },
    Suite {
        name: "sigma_shift",
        domain: Domain::Multisegments,
        summary: "σ_n ... σ_1 (M) = shift_down(M), with σ_i independent of L >= jump",
    },
    Suite {
        name: "embedding",
        domain: Domain::Tableaux,
        summary: "tableau crystal axioms; ψ∘e_i = e_i∘ψ with joint nullity, ε equality, ψ injective, B(λ) connected",
    },
    Suite {
        name: "phi_native",
        domain: Domain::LusztigData,
        summary: "Φ against the exposed PBW coordinates, weights, inverse, and the transported σ-chain = block_shift",
    },
    Suite {
        name: "pbw_bicrystal",
        domain: Domain::LusztigData,
        summary: "crystal axioms and bicrystal conditions on transported Lusztig data",
    },
];

/// Looks a suite up by name. Kebab-case and the alias `ks` are accepted.
pub fn find_suite(name: &str) -> Option<&'static Suite> {
    let norm = name.trim().replace('-', "_");
    let norm = match norm.as_str() {
        "ks" => "ks_conditions",
        other => other,
    };
    SUITES.iter().find(|s| s.name == norm)
}

fn need_size(suite: &Suite, params: &SuiteParams) -> Result<u64, CrystalError> {
    params
        .max_size
        .ok_or_else(|| CrystalError::MissingParameter { suite: suite.name.into(), what: "max_size".into() })
}

fn need_shape<'a>(suite: &Suite, params: &'a SuiteParams) -> Result<&'a Partition, CrystalError> {
    params.shape.as_ref().ok_or_else(|| CrystalError::MissingParameter { suite: suite.name.into(), what: "shape".into() })
}

pub fn run_suite(name: &str, params: &SuiteParams, budget: &Budget) -> Result<SuiteReport, CrystalError> {
    let suite = find_suite(name).ok_or_else(|| CrystalError::UnknownSuite(name.to_string()))?;
    let rank = params.rank()?;
    let (elements, checker) = match suite.domain {
        Domain::Multisegments => {
            let max = need_size(suite, params)?;
            budget.check_multisegments(rank, max)?;
            let mut domain = enumerate_multisegments(rank, max);
            if matches!(suite.name, "sigma_shift" | "mk_recursion" | "first_half") {
                let fixture = fixtures::sigma_chain_example();
                if fixture.rank() == rank && fixture.size() > max {
                    domain.push(fixture);
                }
            }
            (domain.len() as u64, run_ms_suite(suite.name, rank, &domain))
        }
        Domain::LusztigData => {
            let max = need_size(suite, params)?;
            budget.check_multisegments(rank, max)?;
            let domain = enumerate_lusztig_data(rank, max);
            let checker = match suite.name {
                "phi_native" => par_check(&domain, phi_native),
                _ => par_check(&domain, |a, c| {
                    crystal_axioms(a, c, &normal());
                    crystal_axioms(a, c, &star());
                    ks_conditions(a, c);
                }),
            };
            (domain.len() as u64, checker)
        }
        Domain::Tableaux => {
            let shape = need_shape(suite, params)?;
            budget.check_tableaux(shape, rank)?;
            embedding(shape, rank)?
        }
        Domain::Either => {
            if params.max_size.is_none() && params.shape.is_none() {
                return Err(CrystalError::MissingParameter {
                    suite: suite.name.into(),
                    what: "max_size or shape".into(),
                });
            }
            let mut checker = Checker::default();
            let mut elements = 0;
            if let Some(max) = params.max_size {
                budget.check_multisegments(rank, max)?;
                let direct = enumerate_multisegments(rank, max);
                let closure = multisegment_closure(rank, max);
                elements += direct.len() as u64;
                compare_sets("ms_enumeration_equals_closure", &Multisegment::empty(rank), &direct, &closure, &mut checker);
            }
            if let Some(shape) = &params.shape {
                budget.check_tableaux(shape, rank)?;
                let direct = enumerate_ssyt(shape, rank)?;
                let closure = tableau_closure(shape, rank)?;
                elements += direct.len() as u64;
                let hw = Tableau::highest_weight(shape, rank)?;
                compare_sets("ssyt_enumeration_equals_closure", &hw, &direct, &closure, &mut checker);
            }
            (elements, checker)
        }
    };
    Ok(SuiteReport::from_checker(suite.name, params.clone(), elements, checker))
}

fn run_ms_suite(name: &str, rank: Rank, domain: &[Multisegment]) -> Checker {
    match name {
        "ms_axioms" => par_check(domain, |m, c| {
            crystal_axioms(m, c, &normal());
            crystal_axioms(m, c, &star());
            ms_weights(m, c);
        }),
        "ks_conditions" => par_check(domain, ks_conditions),
        "bracket_count" => par_check(domain, bracket_count),
        "star_commute" => par_check(domain, star_commute),
        "ur_tracking" => par_check(domain, ur_tracking),
        "flip_symmetry" => par_check(domain, flip_symmetry),
        "local_structure" => par_check(domain, local_structure),
        "mk_recursion" => par_check(domain, mk_recursion),
        "first_half" => par_check(domain, first_half),
        "sigma_shift" => par_check(domain, sigma_shift),
        other => unreachable!("suite {other} is not a multisegment suite (rank {rank})"),
    }
}

pub(crate) fn par_check<T: Sync>(items: &[T], f: impl Fn(&T, &mut Checker) + Sync + Send) -> Checker {
    items
        .par_iter()
        .map(|x| {
            let mut c = Checker::default();
            f(x, &mut c);
            c
        })
        .reduce(Checker::default, Checker::merge)
}

fn compare_sets<T: Eq + std::hash::Hash + Show + AsDocument>(
    check: &str,
    anchor: &impl AsDocument,
    direct: &[T],
    closure: &[T],
    c: &mut Checker,
) {
    let a: HashSet<&T> = direct.iter().collect();
    let b: HashSet<&T> = closure.iter().collect();
    c.eq(&format!("{check}:count"), anchor, None, direct.len() as u64, closure.len() as u64);
    for x in direct.iter().filter(|x| !b.contains(x)) {
        c.fail(check, x, None, "reachable by f from the highest weight element".into(), "unreachable".into());
    }
    for x in closure.iter().filter(|x| !a.contains(x)) {
        c.fail(check, x, None, "produced by direct enumeration".into(), "missing".into());
    }
}

/// One of the two crystal structures on a bicrystal, as plain function pointers.
struct Structure<C> {
    tag: &'static str,
    e: fn(&C, usize) -> Option<C>,
    f: fn(&C, usize) -> Option<C>,
    eps: fn(&C, usize) -> u32,
}

fn normal<C: Crystal>() -> Structure<C> {
    Structure { tag: "", e: C::e, f: C::f, eps: C::eps }
}

fn star<C: Bicrystal>() -> Structure<C> {
    Structure { tag: "*", e: C::e_star, f: C::f_star, eps: C::eps_star }
}

/// Crystal axioms for one structure at one element: `e`/`f` are inverse,
/// `e_i` shifts ε by -1, φ by +1 and every pairing by the Cartan column of
/// `i`, and ε equals the number of successful `e` applications.
fn crystal_axioms<C: Crystal + AsDocument + Show>(b: &C, c: &mut Checker, s: &Structure<C>) {
    let tag = s.tag;
    let rank = b.rank();
    for i in rank.indices() {
        let ix = Some(i);
        let eps_b = (s.eps)(b, i);
        let mut count = 0u32;
        let mut cur = (s.e)(b, i);
        while let Some(x) = cur {
            count += 1;
            cur = (s.e)(&x, i);
        }
        c.eq(&format!("eps{tag}_counts_e{tag}"), b, ix, eps_b, count);
        let phi_b = i64::from(eps_b) + b.pairing(i);
        if let Some(eb) = (s.e)(b, i) {
            c.eq(&format!("f{tag}_inverts_e{tag}"), b, ix, Some(b.clone()), (s.f)(&eb, i));
            c.eq(&format!("e{tag}_lowers_eps{tag}"), b, ix, i64::from(eps_b) - 1, i64::from((s.eps)(&eb, i)));
            c.eq(&format!("e{tag}_raises_phi{tag}"), b, ix, phi_b + 1, i64::from((s.eps)(&eb, i)) + eb.pairing(i));
            for j in rank.indices() {
                c.eq(&format!("e{tag}_adds_alpha_{i}_pairing_{j}"), b, ix, b.pairing(j) + cartan(j, i), eb.pairing(j));
            }
        }
        if let Some(fb) = (s.f)(b, i) {
            c.eq(&format!("e{tag}_inverts_f{tag}"), b, ix, Some(b.clone()), (s.e)(&fb, i));
        }
    }
}

fn ms_weights(m: &Multisegment, c: &mut Checker) {
    let rank = m.rank();
    let nonempty = !m.is_empty();
    let some_e = rank.indices().any(|i| m.e(i).is_some());
    let some_e_star = rank.indices().any(|i| m.e_star(i).is_some());
    c.holds("nonempty_has_some_e", m, None, !nonempty || some_e, || "every e_i is null".into());
    c.holds("nonempty_has_some_e_star", m, None, !nonempty || some_e_star, || "every e_i^* is null".into());
    let w = m.weight();
    for i in rank.indices() {
        let alpha = crate::crystal::Weight::simple_root(rank, i);
        if let Some(em) = m.e(i) {
            c.eq("e_weight_plus_alpha", m, Some(i), (&w + &alpha).coords().to_vec().show(), em.weight().coords().to_vec().show());
            c.eq("e_size_minus_one", m, Some(i), m.size() - 1, em.size());
        }
        if let Some(em) = m.e_star(i) {
            c.eq("e_star_weight_plus_alpha", m, Some(i), (&w + &alpha).coords().to_vec().show(), em.weight().coords().to_vec().show());
        }
        c.eq("pairing_matches_weight", m, Some(i), crate::crystal::pairing(&w, i).unwrap_or(i64::MIN), m.pairing(i));
    }
}

/// The six conditions: f, f^* never null; f_i^* f_j = f_j f_i^* (i ≠ j);
/// jump >= 0; jump = 0 gives f_i = f_i^*; jump >= 1 keeps ε^* under f and ε
/// under f^*; jump >= 2 makes f_i and f_i^* commute.
fn ks_conditions<B: Bicrystal + AsDocument + Show>(b: &B, c: &mut Checker) {
    let rank = b.rank();
    for i in rank.indices() {
        let ix = Some(i);
        let fb = b.f(i);
        let fsb = b.f_star(i);
        c.holds("ks1_f_not_null", b, ix, fb.is_some(), || "null".into());
        c.holds("ks1_f_star_not_null", b, ix, fsb.is_some(), || "null".into());
        let (Some(fb), Some(fsb)) = (fb, fsb) else { continue };
        for j in rank.indices().filter(|&j| j != i) {
            let lhs = b.f(j).and_then(|x| x.f_star(i));
            let rhs = fsb.f(j);
            c.eq(&format!("ks2_f_star_f_commute(j={j})"), b, ix, lhs, rhs);
        }
        let jmp = match jump(b, i) {
            Ok(v) => v,
            Err(e) => {
                c.fail("ks3_jump_nonnegative", b, ix, ">= 0".into(), e.to_string());
                continue;
            }
        };
        c.checks += 1;
        if jmp == 0 {
            c.eq("ks4_jump0_f_equals_f_star", b, ix, Some(fb.clone()), Some(fsb.clone()));
        }
        if jmp >= 1 {
            c.eq("ks5_eps_star_kept_by_f", b, ix, b.eps_star(i), fb.eps_star(i));
            c.eq("ks5_eps_kept_by_f_star", b, ix, b.eps(i), fsb.eps(i));
        }
        if jmp >= 2 {
            c.eq("ks6_f_f_star_commute", b, ix, fsb.f(i), fb.f_star(i));
        }
    }
}

fn bracket_count(m: &Multisegment, c: &mut Checker) {
    for i in m.rank().indices() {
        let lhs = i64::from(m.eps(i)) + i64::from(m.eps_star(i)) + m.pairing(i);
        let rhs = i64::from(m.ur(i)) + i64::from(m.ur_star(i));
        c.eq("eps_plus_eps_star_plus_pairing_equals_ur_plus_ur_star", m, Some(i), lhs, rhs);
    }
}

fn star_commute(m: &Multisegment, c: &mut Checker) {
    let rank = m.rank();
    for i in rank.indices() {
        let fs = m.f_star(i);
        for j in rank.indices().filter(|&j| j != i) {
            c.eq(&format!("f_j_f_star_i_commute(j={j})"), m, Some(i), m.f(j).f_star(i), fs.f(j));
        }
    }
}

/// Uncanceled `)` in `S_j(M)` bucketed by segment height (index = height).
fn ur_profile(m: &Multisegment, j: usize) -> Vec<u32> {
    let mut out = vec![0u32; m.rank().as_usize() + 2];
    for t in m.bracket_string(j, BracketKind::Normal).uncanceled() {
        if t.symbol == Bracket::Close {
            out[t.site.height() as usize] += 1;
        }
    }
    out
}

fn ur_tracking(m: &Multisegment, c: &mut Checker) {
    let rank = m.rank();
    let n = rank.as_usize();
    for i in rank.indices() {
        let acted: Option<Segment> = m.bracket_string(i, BracketKind::Star).rightmost_uncanceled_close().copied();
        let fm = m.f_star(i);
        for j in rank.indices().filter(|&j| j != i) {
            let before = ur_profile(m, j);
            let after = ur_profile(&fm, j);
            let mut expected = before.clone();
            match acted {
                // f_i^* turned [i+1, j-1] into [i, j-1]
                Some(seg) if seg.end() as usize + 1 == j => {
                    let h = j - i - 1;
                    if before[h] != 0 {
                        expected[h] -= 1;
                        expected[h + 1] += 1;
                    }
                }
                None if j == i + 1 => expected[1] += 1,
                _ => {}
            }
            for h in 1..=n {
                c.eq(&format!("ur_{j};{h}_after_f_star"), m, Some(i), expected[h], after[h]);
            }
        }
    }
}

fn flip_symmetry(m: &Multisegment, c: &mut Checker) {
    let n = m.rank().as_usize();
    let flipped = m.flip();
    c.eq("flip_involution", m, None, m.clone(), flipped.flip());
    for i in m.rank().indices() {
        let k = n + 1 - i;
        c.eq("flip_f_flip_is_f_star", m, Some(i), m.f_star(k), flipped.f(i).flip());
        c.eq("flip_e_flip_is_e_star", m, Some(i), m.e_star(k), flipped.e(i).map(|x| x.flip()));
        c.eq("flip_eps_is_eps_star", m, Some(i), m.eps_star(k), flipped.eps(i));
    }
}

fn local_structure(m: &Multisegment, c: &mut Checker) {
    for i in m.rank().indices() {
        let Ok(j) = jump(m, i) else {
            c.fail("jump_nonnegative", m, Some(i), ">= 0".into(), "negative".into());
            continue;
        };
        let eps_star = m.eps_star(i);
        let mut b = m.clone();
        for k in 0..=j {
            c.eq(&format!("jump_after_f^{k}"), m, Some(i), i64::from(j) - i64::from(k), jump(&b, i).map_or(-1, i64::from));
            c.eq(&format!("eps_star_after_f^{k}"), m, Some(i), eps_star, b.eps_star(i));
            if k < j {
                b = b.f(i);
            }
        }
        c.eq("f_equals_f_star_at_jump0", m, Some(i), b.f(i), b.f_star(i));
    }
}

fn mk_recursion(m: &Multisegment, c: &mut Checker) {
    let n = m.rank().get();
    let trace = m.sigma_chain_trace();
    for k in 1..=n {
        let mk = &trace.steps[k as usize - 1].intermediate;
        for i in 1..=k {
            if i >= 2 {
                c.eq(&format!("M^({k})_[{},{}]=M_[{i},{k}]", i - 1, k - 1), m, None, m.mult_at(i, k), mk.mult_at(i - 1, k - 1));
            }
            let bound = (1..=n - k)
                .map(|s| {
                    let plus: i64 = (1..=s).map(|r| i64::from(m.mult_at(i + 1, k + r))).sum();
                    let minus: i64 = (1..s).map(|r| i64::from(m.mult_at(i, k + r))).sum();
                    plus - minus
                })
                .max();
            if let Some(bound) = bound {
                let have = i64::from(mk.mult_at(i, k));
                c.holds(&format!("M^({k})_[{i},{k}]_lower_bound"), m, None, have >= bound, || {
                    format!("{have} < {bound}")
                });
            }
        }
    }
}

fn first_half(m: &Multisegment, c: &mut Checker) {
    let n = m.rank().get();
    let trace = m.sigma_chain_trace();
    let mn = &trace.steps[n as usize - 1].intermediate;
    let below_top =
        Multisegment::from_segments(m.rank(), mn.segments().filter(|(s, _)| s.end() < n)).expect("same rank");
    c.eq("M^(n)_without_[i,n]_is_shift_down", m, None, m.shift_down(), below_top);
}

fn sigma_shift(m: &Multisegment, c: &mut Checker) {
    let expected = m.shift_down();
    let mut running = Some(m.clone());
    for i in m.rank().indices() {
        running = match running.as_ref().map(|x| x.sigma_checked(i)) {
            Some(Ok(x)) => Some(x),
            Some(Err(e)) => {
                c.fail("sigma_independent_of_L", m, Some(i), "equal".into(), e.to_string());
                None
            }
            None => None,
        };
    }
    c.checks += 1;
    c.eq("sigma_chain_is_shift_down", m, None, Some(expected.clone()), running);
    c.eq("factored_sigma_chain_is_shift_down", m, None, expected, m.sigma_chain_trace().result);
}

fn embedding(shape: &Partition, rank: Rank) -> Result<(u64, Checker), CrystalError> {
    let tableaux = enumerate_ssyt(shape, rank)?;
    let hw = Tableau::highest_weight(shape, rank)?;
    let mut checker = par_check(&tableaux, |b, c| {
        crystal_axioms(b, c, &normal());
        let m = b.embed();
        for i in rank.indices() {
            let ix = Some(i);
            let (eb, fb) = match (b.checked_e(i), b.checked_f(i)) {
                (Ok(eb), Ok(fb)) => (eb, fb),
                (Err(e), _) | (_, Err(e)) => {
                    c.fail("semistandard_result", b, ix, "semistandard".into(), e.to_string());
                    continue;
                }
            };
            c.eq("embed_e_commutes", b, ix, m.e(i), eb.as_ref().map(Tableau::embed));
            c.eq("embed_eps_equal", b, ix, m.eps(i), b.eps(i));
            let s = b.bracket_string(i);
            c.eq("phi_counts_uncanceled_close", b, ix, s.uncanceled_close() as i64, b.phi(i));
            let mut count = 0i64;
            let mut cur = fb;
            while let Some(x) = cur {
                count += 1;
                cur = x.f(i);
            }
            c.eq("phi_counts_f", b, ix, b.phi(i), count);
        }
        let all_e_null = rank.indices().all(|i| b.e(i).is_none());
        c.holds("only_highest_weight_is_killed_by_all_e", b, None, all_e_null == (b == &hw), || {
            format!("all e null: {all_e_null}")
        });
    });
    let images: HashSet<Multisegment> = tableaux.iter().map(Tableau::embed).collect();
    checker.eq("embed_injective", &hw, None, tableaux.len() as u64, images.len() as u64);
    let closure = tableau_closure(shape, rank)?;
    compare_sets("ssyt_enumeration_equals_closure", &hw, &tableaux, &closure, &mut checker);
    Ok((tableaux.len() as u64, checker))
}

fn bumped(a: &LusztigDatum, p: usize, delta: i64) -> Option<LusztigDatum> {
    let mut exps = a.exponents().to_vec();
    let v = i64::from(exps[p - 1]) + delta;
    exps[p - 1] = u32::try_from(v).ok()?;
    LusztigDatum::new(a.rank(), exps).ok()
}

fn phi_native(a: &LusztigDatum, c: &mut Checker) {
    let rank = a.rank();
    let n = rank.as_usize();
    let last = rank.positive_roots();
    c.eq("native_f1_bumps_a1", a, Some(1), bumped(a, 1, 1), a.f(1));
    c.eq("native_e1_lowers_a1", a, Some(1), bumped(a, 1, -1), a.e(1));
    c.eq("native_eps1_is_a1", a, Some(1), a.exponent(1), a.eps(1));
    c.eq("native_f_star_n_bumps_aN", a, Some(n), bumped(a, last, 1), a.f_star(n));
    c.eq("native_e_star_n_lowers_aN", a, Some(n), bumped(a, last, -1), a.e_star(n));
    c.eq("native_eps_star_n_is_aN", a, Some(n), a.exponent(last), a.eps_star(n));
    let m = phi(a);
    c.eq(
        "weight_preserved",
        a,
        None,
        a.weight().coords().to_vec().show(),
        m.weight().coords().to_vec().show(),
    );
    c.eq("phi_inv_phi", a, None, a.clone(), phi_inv(&m));
    if n >= 2 {
        let shifted = a.block_shift().expect("rank >= 2");
        let transported = m.sigma_chain().with_rank(shifted.rank());
        c.eq("transported_sigma_chain_is_block_shift", a, None, Some(phi(&shifted)), transported);
    }
}

/// The suite runs wired into `verify all` and the acceptance battery.
pub fn default_battery() -> Vec<(&'static str, SuiteParams)> {
    let mut out = Vec::new();
    let ms_domains = [(2, 8), (3, 8), (4, 6)];
    for name in [
        "ms_axioms",
        "ks_conditions",
        "bracket_count",
        "star_commute",
        "ur_tracking",
        "flip_symmetry",
        "local_structure",
        "pbw_bicrystal",
    ] {
        for (n, s) in ms_domains {
            out.push((name, SuiteParams::sized(n, s)));
        }
    }
    for name in ["sigma_shift", "mk_recursion", "first_half"] {
        for (n, s) in [(2, 8), (3, 8), (4, 6)] {
            out.push((name, SuiteParams::sized(n, s)));
        }
    }
    for (n, s) in [(1, 8), (2, 8), (3, 8), (4, 8)] {
        out.push(("oracle_agreement", SuiteParams::sized(n, s)));
    }
    for (n, s) in [(2, 8), (3, 8), (4, 8)] {
        out.push(("phi_native", SuiteParams::sized(n, s)));
    }
    let shapes: [(u32, &str); 8] =
        [(2, "1"), (2, "2"), (2, "1,1"), (2, "2,1"), (2, "2,2"), (2, "3,1"), (3, "1"), (3, "2,1")];
    for (n, shape) in shapes {
        let p: Partition = shape.parse().expect("valid shape");
        out.push(("embedding", SuiteParams::shaped(n, p.clone())));
        out.push(("oracle_agreement", SuiteParams::shaped(n, p)));
    }
    out
}

/// Runs [`default_battery`] in order.
pub fn run_battery(budget: &Budget) -> Result<Vec<SuiteReport>, CrystalError> {
    default_battery().into_iter().map(|(name, params)| run_suite(name, &params, budget)).collect()
}
