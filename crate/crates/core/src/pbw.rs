//! Lusztig data for the reduced word `s1 s2 ... sn s1 ... s(n-1) ... s1`.
//!
//! The associated root order lists `α_1, α_1+α_2, ..., α_1+...+α_n, α_2,
//! ..., α_n`, i.e. segments `[1,1], [1,2], ..., [1,n], [2,2], ..., [n,n]`.
//! Crystal operators are carried over from multisegments through [`phi`];
//! on the exposed coordinates they agree with the intrinsic PBW rules
//! (`f_1` bumps the first exponent, `f_n^*` bumps the last).

use std::fmt;

use crate::crystal::{Bicrystal, Crystal, Rank, Weight};
use crate::error::CrystalError;
use crate::multisegment::{Multisegment, Segment};

/// Positive roots in the order induced by the fixed reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootOrder {
    rank: Rank,
    roots: Vec<Segment>,
}

impl RootOrder {
    pub fn new(rank: Rank) -> Self {
        let n = rank.get();
        let roots = (1..=n).flat_map(|i| (i..=n).map(move |j| Segment::new(i, j).expect("i <= j"))).collect();
        RootOrder { rank, roots }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn roots(&self) -> &[Segment] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `β_p` for a 1-based position `p`.
    pub fn root(&self, p: usize) -> Segment {
        self.roots[p - 1]
    }

    /// 1-based position of `[i,j]`: `Σ_{r<i} (n-r+1) + (j-i) + 1`.
    pub fn index(&self, seg: Segment) -> usize {
        index_in(self.rank, seg)
    }
}

fn index_in(rank: Rank, seg: Segment) -> usize {
    let n = rank.as_usize();
    let (i, j) = (seg.start() as usize, seg.end() as usize);
    debug_assert!(j <= n);
    let before: usize = (1..i).map(|r| n - r + 1).sum();
    before + (j - i) + 1
}

pub fn root_order(rank: Rank) -> RootOrder {
    RootOrder::new(rank)
}

/// A PBW exponent vector `(a_1, ..., a_N)`, `N = n(n+1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LusztigDatum {
    rank: Rank,
    exponents: Vec<u32>,
}

impl LusztigDatum {
    pub fn new(rank: Rank, exponents: Vec<u32>) -> Result<Self, CrystalError> {
        if exponents.len() != rank.positive_roots() {
            return Err(CrystalError::InvalidDatum(format!(
                "expected {} exponents for rank {rank}, got {}",
                rank.positive_roots(),
                exponents.len()
            )));
        }
        Ok(LusztigDatum { rank, exponents })
    }

    pub fn zero(rank: Rank) -> Self {
        LusztigDatum { rank, exponents: vec![0; rank.positive_roots()] }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `a_p` for a 1-based position `p`.
    pub fn exponent(&self, p: usize) -> u32 {
        self.exponents[p - 1]
    }

    /// `-Σ_p a_p β_p`, computed from the root order directly.
    pub fn weight(&self) -> Weight {
        let mut coords = vec![0i64; self.rank.as_usize()];
        for (seg, &a) in RootOrder::new(self.rank).roots().iter().zip(&self.exponents) {
            for v in seg.start()..=seg.end() {
                coords[v as usize - 1] -= i64::from(a);
            }
        }
        Weight::from_coords(self.rank, coords).expect("length matches rank")
    }

    /// Drops the first block `a_1..a_n` and reads the rest as a rank `n-1`
    /// datum (`[i,j] -> [i-1,j-1]`).
    pub fn block_shift(&self) -> Result<LusztigDatum, CrystalError> {
        let n = self.rank.as_usize();
        if n < 2 {
            return Err(CrystalError::Usage("block_shift needs rank at least 2".into()));
        }
        let rank = Rank::new(self.rank.get() - 1)?;
        LusztigDatum::new(rank, self.exponents[n..].to_vec())
    }

    /// Sum of `a_p · height(β_p)`, i.e. `|phi(a)|`.
    pub fn size(&self) -> u64 {
        RootOrder::new(self.rank)
            .roots()
            .iter()
            .zip(&self.exponents)
            .map(|(s, &a)| u64::from(s.height()) * u64::from(a))
            .sum()
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
        format!("({})", parts.join(","))
    }

    fn transport(&self, op: impl FnOnce(&Multisegment) -> Option<Multisegment>) -> Option<LusztigDatum> {
        op(&phi(self)).map(|m| phi_inv(&m))
    }
}

impl fmt::Display for LusztigDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The multisegment with `a_p` copies of `[β_p]`.
pub fn phi(a: &LusztigDatum) -> Multisegment {
    let order = RootOrder::new(a.rank);
    Multisegment::from_segments(a.rank, order.roots().iter().copied().zip(a.exponents.iter().copied()))
        .expect("roots fit the rank")
}

/// Inverse of [`phi`].
pub fn phi_inv(m: &Multisegment) -> LusztigDatum {
    let mut a = LusztigDatum::zero(m.rank());
    for (seg, k) in m.segments() {
        a.exponents[index_in(m.rank(), seg) - 1] = k;
    }
    a
}

/// [`phi_inv`] into a prescribed rank.
pub fn phi_inv_in(rank: Rank, m: &Multisegment) -> Result<LusztigDatum, CrystalError> {
    if m.rank() != rank {
        return Err(CrystalError::RankMismatch { expected: rank.get(), actual: m.rank().get() });
    }
    Ok(phi_inv(m))
}

impl Crystal for LusztigDatum {
    fn rank(&self) -> Rank {
        self.rank
    }

    fn e(&self, i: usize) -> Option<Self> {
        self.transport(|m| m.e(i))
    }

    fn f(&self, i: usize) -> Option<Self> {
        self.transport(|m| Some(m.f(i)))
    }

    fn eps(&self, i: usize) -> u32 {
        phi(self).eps(i)
    }

    fn pairing(&self, i: usize) -> i64 {
        crate::crystal::pairing(&self.weight(), i).expect("index checked by caller")
    }
}

impl Bicrystal for LusztigDatum {
    fn e_star(&self, i: usize) -> Option<Self> {
        self.transport(|m| m.e_star(i))
    }

    fn f_star(&self, i: usize) -> Option<Self> {
        self.transport(|m| Some(m.f_star(i)))
    }

    fn eps_star(&self, i: usize) -> u32 {
        phi(self).eps_star(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multisegment::tests::ms;
    use proptest::prelude::*;

    fn rank(n: u32) -> Rank {
        Rank::new(n).unwrap()
    }

    fn datum(n: u32, a: &[u32]) -> LusztigDatum {
        LusztigDatum::new(rank(n), a.to_vec()).unwrap()
    }

    #[test]
    fn root_orders() {
        let o = root_order(rank(2));
        let labels: Vec<String> = o.roots().iter().map(|s| s.to_string()).collect();
        assert_eq!(labels, ["[1,1]", "[1,2]", "[2,2]"]);
        let o5 = root_order(rank(5));
        assert_eq!(o5.root(o5.len()).to_string(), "[5,5]");
        assert_eq!(root_order(rank(3)).root(4).to_string(), "[2,2]");
        for (p, &seg) in o5.roots().iter().enumerate() {
            assert_eq!(o5.index(seg), p + 1);
        }
    }

    #[test]
    fn datum_length_checked() {
        assert!(LusztigDatum::new(rank(2), vec![0, 0]).is_err());
    }

    #[test]
    fn phi_examples() {
        assert!(phi(&LusztigDatum::zero(rank(3))).is_empty());
        assert_eq!(phi(&datum(2, &[1, 0, 2])), ms(2, &[(1, 1, 1), (2, 2, 2)]));
    }

    #[test]
    fn operators_on_zero() {
        let z = LusztigDatum::zero(rank(3));
        let o = root_order(rank(3));
        for i in 1..=3 {
            let a = z.f(i).unwrap();
            let p = o.index(Segment::new(i as u32, i as u32).unwrap());
            for q in 1..=o.len() {
                assert_eq!(a.exponent(q), u32::from(q == p));
            }
            assert_eq!(a.e(i), Some(z.clone()));
        }
    }

    #[test]
    fn exposed_eps_values() {
        let a = datum(2, &[3, 1, 2]);
        assert_eq!(a.eps(1), 3);
        assert_eq!(a.eps_star(2), 2);
    }

    #[test]
    fn weights() {
        assert_eq!(LusztigDatum::zero(rank(2)).weight(), Weight::zero(rank(2)));
        assert_eq!(datum(2, &[0, 1, 0]).weight().coords(), &[-1, -1]);
    }

    #[test]
    fn block_shift_examples() {
        assert_eq!(datum(2, &[5, 7, 3]).block_shift(), Ok(datum(1, &[3])));
        assert!(matches!(datum(1, &[4]).block_shift(), Err(CrystalError::Usage(_))));
    }

    #[test]
    fn phi_inv_rank_mismatch() {
        let m = ms(2, &[(1, 1, 1)]);
        assert!(matches!(phi_inv_in(rank(3), &m), Err(CrystalError::RankMismatch { .. })));
        assert_eq!(phi_inv_in(rank(2), &m), Ok(datum(2, &[1, 0, 0])));
    }

    fn arb_datum() -> impl Strategy<Value = LusztigDatum> {
        (2u32..=5).prop_flat_map(|n| {
            let len = (n * (n + 1) / 2) as usize;
            proptest::collection::vec(0u32..4, len).prop_map(move |a| LusztigDatum::new(Rank::new(n).unwrap(), a).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn phi_round_trip_and_weight(a in arb_datum()) {
            let m = phi(&a);
            prop_assert_eq!(phi_inv(&m), a.clone());
            prop_assert_eq!(a.weight(), m.weight());
            prop_assert_eq!(a.size(), m.size());
        }

        #[test]
        fn block_shift_matches_shift_down(a in arb_datum()) {
            let shifted = a.block_shift().unwrap();
            let lowered = phi(&a).shift_down().with_rank(shifted.rank()).unwrap();
            prop_assert_eq!(phi(&shifted), lowered);
        }

        #[test]
        fn e_inverts_f(a in arb_datum(), i in 1usize..=5) {
            prop_assume!(i <= a.rank().as_usize());
            prop_assert_eq!(a.f(i).unwrap().e(i), Some(a.clone()));
            prop_assert_eq!(a.f_star(i).unwrap().e_star(i), Some(a));
        }
    }
}
