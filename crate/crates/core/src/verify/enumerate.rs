//! Direct enumeration of graded pieces and the `f`-closure oracles.

use std::collections::{HashSet, VecDeque};

use crate::crystal::{Crystal, Rank};
use crate::error::CrystalError;
use crate::multisegment::{Multisegment, Segment};
use crate::pbw::{phi_inv, LusztigDatum};
use crate::tableau::{Partition, Tableau};

/// All segments `[i,j]` with `1 <= i <= j <= n`, sorted.
pub fn all_segments(rank: Rank) -> Vec<Segment> {
    let n = rank.get();
    (1..=n).flat_map(|i| (i..=n).map(move |j| Segment::new(i, j).expect("i <= j"))).collect()
}

/// Sorts by `(size, canonical label)`.
pub fn sort_canonical(ms: &mut [Multisegment]) {
    ms.sort_by_cached_key(|m| (m.size(), m.label()));
}

/// Every `M` in `MS_n` with `|M| <= max_size`, generated by choosing a
/// multiplicity for each segment in turn. Sorted by `(size, label)`.
pub fn enumerate_multisegments(rank: Rank, max_size: u64) -> Vec<Multisegment> {
    let segs = all_segments(rank);
    let mut out = Vec::new();
    let mut chosen: Vec<(Segment, u32)> = Vec::new();
    choose(&segs, 0, max_size, &mut chosen, &mut |c| {
        out.push(Multisegment::from_segments(rank, c.iter().copied()).expect("segments fit the rank"));
    });
    sort_canonical(&mut out);
    out
}

fn choose(
    segs: &[Segment],
    k: usize,
    remaining: u64,
    chosen: &mut Vec<(Segment, u32)>,
    emit: &mut impl FnMut(&[(Segment, u32)]),
) {
    let Some(&seg) = segs.get(k) else {
        emit(chosen);
        return;
    };
    let h = u64::from(seg.height());
    choose(segs, k + 1, remaining, chosen, emit);
    let mut m = 1;
    while m * h <= remaining {
        chosen.push((seg, m as u32));
        choose(segs, k + 1, remaining - m * h, chosen, emit);
        chosen.pop();
        m += 1;
    }
}

/// Closure of `{∅}` under all `f_i`, truncated at `|M| <= max_size`. Since
/// each `f_i` adds exactly one box, layer `d` of the search is size `d`.
pub fn multisegment_closure(rank: Rank, max_size: u64) -> Vec<Multisegment> {
    let start = Multisegment::empty(rank);
    let mut seen: HashSet<Multisegment> = HashSet::from([start.clone()]);
    let mut layer = vec![start];
    let mut out = layer.clone();
    for _ in 0..max_size {
        let mut next = Vec::new();
        for m in &layer {
            for i in rank.indices() {
                let fm = m.f(i);
                if seen.insert(fm.clone()) {
                    next.push(fm);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    sort_canonical(&mut out);
    out
}

/// Closure of `{b}` under all `f_i` for a finite crystal.
pub fn f_closure<C: Crystal + Eq + std::hash::Hash + Ord>(start: &C) -> Vec<C> {
    let mut seen: HashSet<C> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(b) = queue.pop_front() {
        for i in b.rank().indices() {
            if let Some(fb) = b.f(i) {
                if seen.insert(fb.clone()) {
                    queue.push_back(fb);
                }
            }
        }
    }
    let mut out: Vec<C> = seen.into_iter().collect();
    out.sort();
    out
}

/// `f`-closure of the highest weight tableau of shape `λ`.
pub fn tableau_closure(lambda: &Partition, rank: Rank) -> Result<Vec<Tableau>, CrystalError> {
    Ok(f_closure(&Tableau::highest_weight(lambda, rank)?))
}

/// Lusztig data with `Σ a_p · height(β_p) <= max_size`, in multisegment order.
pub fn enumerate_lusztig_data(rank: Rank, max_size: u64) -> Vec<LusztigDatum> {
    enumerate_multisegments(rank, max_size).iter().map(phi_inv).collect()
}

/// `#{M in MS_n : |M| <= max_size}` without enumerating.
pub fn count_multisegments(rank: Rank, max_size: u64) -> u128 {
    let cap = max_size as usize;
    let mut dp = vec![0u128; cap + 1];
    dp[0] = 1;
    for seg in all_segments(rank) {
        let h = seg.height() as usize;
        for s in h..=cap {
            dp[s] = dp[s].saturating_add(dp[s - h]);
        }
    }
    dp.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

/// `|SSYT_n(λ)|` from the hook-content product, used to size budgets.
pub fn count_ssyt(lambda: &Partition, rank: Rank) -> u128 {
    let n1 = u128::from(rank.get()) + 1;
    let parts = lambda.parts();
    let conj = |c: usize| parts.iter().filter(|&&p| p as usize > c).count();
    let (mut num, mut den) = (1u128, 1u128);
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len as usize {
            let hook = (len as usize - c) + (conj(c) - r) - 1;
            num = num.saturating_mul(n1 + c as u128 - r as u128);
            den = den.saturating_mul(hook as u128);
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    num / den
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
