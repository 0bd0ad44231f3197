//! The multisegment realization of `B(∞)`.
//!
//! A segment `[i,j]` is a column of boxes labeled `i..=j` (bottom `i`, top
//! `j`). A multisegment is a finite multiset of segments with `j <= n`. The
//! normal operators grow and shrink segments at the top, the star operators
//! at the bottom; both are steered by bracket strings.

use std::collections::BTreeMap;
use std::fmt;

use crate::bracket::{Bracket, BracketKind, BracketString};
use crate::crystal::{jump, Bicrystal, Crystal, Rank, Weight};
use crate::error::CrystalError;

/// The interval `[start, end]`, `1 <= start <= end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    start: u32,
    end: u32,
}

impl Segment {
    pub fn new(start: u32, end: u32) -> Result<Self, CrystalError> {
        if start == 0 || start > end {
            return Err(CrystalError::InvalidSegment { start, end, rank: end });
        }
        Ok(Segment { start, end })
    }

    // Callers guarantee 1 <= start <= end.
    fn raw(start: u32, end: u32) -> Self {
        debug_assert!(start >= 1 && start <= end);
        Segment { start, end }
    }

    pub fn start(self) -> u32 {
        self.start
    }

    pub fn end(self) -> u32 {
        self.end
    }

    pub fn height(self) -> u32 {
        self.end - self.start + 1
    }

    pub fn contains(self, label: u32) -> bool {
        self.start <= label && label <= self.end
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

/// A multisegment in `MS_n`.
///
/// Multiplicities are stored sparsely and zero entries are never kept, so
/// structural equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multisegment {
    rank: Rank,
    mult: BTreeMap<Segment, u32>,
}

/// One step of the σ-chain trace: `a_k` and `M^(k) = f_k^{a_k} ... f_1^{a_1}(M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaStep {
    pub index: usize,
    pub a: u32,
    pub intermediate: Multisegment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTrace {
    pub steps: Vec<SigmaStep>,
    /// `(e_n^*)^max ... (e_1^*)^max M^(n)`.
    pub result: Multisegment,
}

impl Multisegment {
    pub fn empty(rank: Rank) -> Self {
        Multisegment { rank, mult: BTreeMap::new() }
    }

    /// Builds a multisegment from `(segment, multiplicity)` pairs. Repeated
    /// segments accumulate and zero multiplicities are dropped.
    pub fn from_segments(
        rank: Rank,
        segments: impl IntoIterator<Item = (Segment, u32)>,
    ) -> Result<Self, CrystalError> {
        let mut m = Multisegment::empty(rank);
        for (seg, k) in segments {
            if seg.end > rank.get() {
                return Err(CrystalError::InvalidSegment { start: seg.start, end: seg.end, rank: rank.get() });
            }
            if k > 0 {
                m.add(seg, k);
            }
        }
        Ok(m)
    }

    /// Convenience constructor from `(start, end, multiplicity)` triples.
    pub fn from_triples(rank: Rank, triples: &[(u32, u32, u32)]) -> Result<Self, CrystalError> {
        let segs = triples
            .iter()
            .map(|&(s, e, k)| {
                Segment::new(s, e)
                    .map_err(|_| CrystalError::InvalidSegment { start: s, end: e, rank: rank.get() })
                    .map(|seg| (seg, k))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Multisegment::from_segments(rank, segs)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn multiplicity(&self, seg: Segment) -> u32 {
        self.mult.get(&seg).copied().unwrap_or(0)
    }

    /// `M_{i,j}`; zero when `[i,j]` is not a valid segment.
    pub fn mult_at(&self, start: u32, end: u32) -> u32 {
        if start == 0 || start > end {
            return 0;
        }
        self.multiplicity(Segment::raw(start, end))
    }

    /// Distinct segments with their multiplicities, sorted by `(start, end)`.
    pub fn segments(&self) -> impl Iterator<Item = (Segment, u32)> + '_ {
        self.mult.iter().map(|(s, k)| (*s, *k))
    }

    /// `|M|`, the total number of boxes.
    pub fn size(&self) -> u64 {
        self.segments().map(|(s, k)| u64::from(s.height()) * u64::from(k)).sum()
    }

    /// Number of segments counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.mult.values().map(|&k| u64::from(k)).sum()
    }

    fn add(&mut self, seg: Segment, k: u32) {
        let m = self.mult.entry(seg).or_insert(0);
        *m = m.checked_add(k).expect("multiplicity overflows u32");
    }

    fn remove_one(&mut self, seg: Segment) {
        match self.mult.get_mut(&seg) {
            Some(k) if *k > 1 => *k -= 1,
            Some(_) => {
                self.mult.remove(&seg);
            }
            None => panic!("segment {seg} not present"),
        }
    }

    fn replaced(&self, old: Segment, new: Option<Segment>) -> Self {
        let mut m = self.clone();
        m.remove_one(old);
        if let Some(seg) = new {
            m.add(seg, 1);
        }
        m
    }

    fn with_added(&self, seg: Segment) -> Self {
        let mut m = self.clone();
        m.add(seg, 1);
        m
    }

    /// `S_i(M)` (normal) or `S_i^*(M)` (star), one token per segment copy.
    ///
    /// Normal strings order segments by height, then by bottom entry from
    /// largest to smallest, placing `)` over `[h,i-1]` and `(` over `[h,i]`.
    /// Star strings order by height, then bottom entry from smallest to
    /// largest, placing `)` under `[i+1,j]` and `(` under `[i,j]`.
    pub fn bracket_string(&self, i: usize, kind: BracketKind) -> BracketString<Segment> {
        self.rank.assert_index(i);
        let i = i as u32;
        let mut sites: Vec<(Segment, u32, Bracket)> = Vec::new();
        for (seg, k) in self.segments() {
            let symbol = match kind {
                BracketKind::Normal if seg.end + 1 == i => Bracket::Close,
                BracketKind::Normal if seg.end == i => Bracket::Open,
                BracketKind::Star if seg.start == i + 1 => Bracket::Close,
                BracketKind::Star if seg.start == i => Bracket::Open,
                BracketKind::Column => panic!("column strings belong to tableaux"),
                _ => continue,
            };
            sites.push((seg, k, symbol));
        }
        match kind {
            BracketKind::Normal => sites.sort_by_key(|(s, _, _)| (s.height(), std::cmp::Reverse(s.start))),
            _ => sites.sort_by_key(|(s, _, _)| (s.height(), s.start)),
        }
        let tokens = sites
            .into_iter()
            .flat_map(|(seg, k, symbol)| std::iter::repeat_n((seg, symbol), k as usize));
        BracketString::new(kind, i as usize, tokens)
    }

    pub fn f(&self, i: usize) -> Multisegment {
        let s = self.bracket_string(i, BracketKind::Normal);
        match s.rightmost_uncanceled_close() {
            Some(&seg) => self.replaced(seg, Some(Segment::raw(seg.start, i as u32))),
            None => self.with_added(Segment::raw(i as u32, i as u32)),
        }
    }

    pub fn e(&self, i: usize) -> Option<Multisegment> {
        let s = self.bracket_string(i, BracketKind::Normal);
        let &seg = s.leftmost_uncanceled_open()?;
        let shorter = (seg.start < seg.end).then(|| Segment::raw(seg.start, seg.end - 1));
        Some(self.replaced(seg, shorter))
    }

    pub fn f_star(&self, i: usize) -> Multisegment {
        let s = self.bracket_string(i, BracketKind::Star);
        match s.rightmost_uncanceled_close() {
            Some(&seg) => self.replaced(seg, Some(Segment::raw(i as u32, seg.end))),
            None => self.with_added(Segment::raw(i as u32, i as u32)),
        }
    }

    pub fn e_star(&self, i: usize) -> Option<Multisegment> {
        let s = self.bracket_string(i, BracketKind::Star);
        let &seg = s.leftmost_uncanceled_open()?;
        let shorter = (seg.start < seg.end).then(|| Segment::raw(seg.start + 1, seg.end));
        Some(self.replaced(seg, shorter))
    }

    pub fn eps(&self, i: usize) -> u32 {
        self.bracket_string(i, BracketKind::Normal).uncanceled_open() as u32
    }

    pub fn eps_star(&self, i: usize) -> u32 {
        self.bracket_string(i, BracketKind::Star).uncanceled_open() as u32
    }

    /// Uncanceled `)` in `S_i(M)`.
    pub fn ur(&self, i: usize) -> u32 {
        self.bracket_string(i, BracketKind::Normal).uncanceled_close() as u32
    }

    /// Uncanceled `)` in `S_i^*(M)`.
    pub fn ur_star(&self, i: usize) -> u32 {
        self.bracket_string(i, BracketKind::Star).uncanceled_close() as u32
    }

    /// Uncanceled `)` in `S_j(M)` sitting over segments of height `h`.
    pub fn ur_by_height(&self, j: usize, h: u32) -> u32 {
        self.bracket_string(j, BracketKind::Normal)
            .uncanceled()
            .filter(|t| t.symbol == Bracket::Close && t.site.height() == h)
            .count() as u32
    }

    /// Number of boxes labeled `label` over all segments.
    pub fn boxes(&self, label: u32) -> u64 {
        self.segments().filter(|(s, _)| s.contains(label)).map(|(_, k)| u64::from(k)).sum()
    }

    /// `wt(M) = -Σ_i (# of i boxes) α_i`.
    pub fn weight(&self) -> Weight {
        let coords = (1..=self.rank.get()).map(|v| -(self.boxes(v) as i64)).collect();
        Weight::from_coords(self.rank, coords).expect("length matches rank")
    }

    /// Saito reflection `σ_i = (e_i^*)^max f_i^L` with `L = jump_i(M)`.
    pub fn sigma(&self, i: usize) -> Multisegment {
        let l = jump(self, i).expect("multisegment jump is nonnegative");
        self.sigma_with(i, l)
    }

    /// `σ_i` computed with both `L = jump_i(M)` and `L + 1`; the two must agree.
    pub fn sigma_checked(&self, i: usize) -> Result<Multisegment, CrystalError> {
        let l = jump(self, i)?;
        let low = self.sigma_with(i, l);
        let high = self.sigma_with(i, l + 1);
        if low != high {
            return Err(CrystalError::Integrity(format!(
                "sigma_{i} of {} depends on L: {} with L={l}, {} with L={}",
                self.label(),
                low.label(),
                high.label(),
                l + 1
            )));
        }
        Ok(low)
    }

    fn sigma_with(&self, i: usize, l: u32) -> Multisegment {
        let raised = self.f_pow(i, l);
        raised.e_star_max(i)
    }

    /// `f_i` applied `k` times.
    pub fn f_pow(&self, i: usize, k: u32) -> Multisegment {
        (0..k).fold(self.clone(), |m, _| m.f(i))
    }

    /// `(e_i^*)^max`.
    pub fn e_star_max(&self, i: usize) -> Multisegment {
        let mut m = self.clone();
        while let Some(next) = m.e_star(i) {
            m = next;
        }
        m
    }

    /// `σ_n ∘ ... ∘ σ_1`.
    pub fn sigma_chain(&self) -> Multisegment {
        self.rank.indices().fold(self.clone(), |m, i| m.sigma(i))
    }

    /// The factored form of the σ-chain: first `f_k^{a_k}` for `k = 1..n`,
    /// each `a_k` being the jump of the running element, then `(e_k^*)^max`
    /// for `k = 1..n`.
    pub fn sigma_chain_trace(&self) -> SigmaTrace {
        let mut steps = Vec::with_capacity(self.rank.as_usize());
        let mut m = self.clone();
        for k in self.rank.indices() {
            let a = jump(&m, k).expect("multisegment jump is nonnegative");
            m = m.f_pow(k, a);
            steps.push(SigmaStep { index: k, a, intermediate: m.clone() });
        }
        let result = self.rank.indices().fold(m, |m, k| m.e_star_max(k));
        SigmaTrace { steps, result }
    }

    /// Turns every segment upside down and re-indexes `v -> n+1-v`.
    pub fn flip(&self) -> Multisegment {
        let n = self.rank.get();
        let mut m = Multisegment::empty(self.rank);
        for (seg, k) in self.segments() {
            m.add(Segment::raw(n + 1 - seg.end, n + 1 - seg.start), k);
        }
        m
    }

    /// Drops every `[1,j]` and shifts the rest down: `[i,j] -> [i-1,j-1]`.
    pub fn shift_down(&self) -> Multisegment {
        let mut m = Multisegment::empty(self.rank);
        for (seg, k) in self.segments().filter(|(s, _)| s.start >= 2) {
            m.add(Segment::raw(seg.start - 1, seg.end - 1), k);
        }
        m
    }

    /// The same multisegment viewed in another rank, if every segment fits.
    pub fn with_rank(&self, rank: Rank) -> Option<Multisegment> {
        if self.mult.keys().any(|s| s.end > rank.get()) {
            return None;
        }
        Some(Multisegment { rank, mult: self.mult.clone() })
    }

    /// Canonical text form, e.g. `[1,1]^2 [2,3]`; the empty multisegment is `∅`.
    pub fn label(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        self.segments()
            .map(|(s, k)| if k == 1 { s.to_string() } else { format!("{s}^{k}") })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the text form produced by [`Multisegment::label`]. Segments may
    /// appear in any order and repeat; multiplicities accumulate.
    pub fn parse_label(rank: Rank, text: &str) -> Result<Multisegment, CrystalError> {
        let text = text.trim();
        if text.is_empty() || text == "∅" {
            return Ok(Multisegment::empty(rank));
        }
        let bad = |tok: &str| CrystalError::Usage(format!("malformed segment `{tok}`"));
        let mut segs = Vec::new();
        for tok in text.split_whitespace() {
            let (body, k) = match tok.split_once('^') {
                Some((b, k)) => (b, k.parse::<u32>().map_err(|_| bad(tok))?),
                None => (tok, 1),
            };
            let inner = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(|| bad(tok))?;
            let (a, b) = inner.split_once(',').ok_or_else(|| bad(tok))?;
            let a = a.trim().parse::<u32>().map_err(|_| bad(tok))?;
            let b = b.trim().parse::<u32>().map_err(|_| bad(tok))?;
            let seg = Segment::new(a, b).map_err(|_| CrystalError::InvalidSegment { start: a, end: b, rank: rank.get() })?;
            segs.push((seg, k));
        }
        let mut m = Multisegment::empty(rank);
        for (seg, k) in segs {
            if seg.end > rank.get() {
                return Err(CrystalError::InvalidSegment { start: seg.start, end: seg.end, rank: rank.get() });
            }
            if k > 0 {
                let total = m.multiplicity(seg).checked_add(k).ok_or_else(|| bad(text))?;
                m.mult.insert(seg, total);
            }
        }
        Ok(m)
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Crystal for Multisegment {
    fn rank(&self) -> Rank {
        self.rank
    }

    fn e(&self, i: usize) -> Option<Self> {
        Multisegment::e(self, i)
    }

    fn f(&self, i: usize) -> Option<Self> {
        Some(Multisegment::f(self, i))
    }

    fn eps(&self, i: usize) -> u32 {
        Multisegment::eps(self, i)
    }

    fn pairing(&self, i: usize) -> i64 {
        self.rank.assert_index(i);
        let i = i as u32;
        let below = if i > 1 { self.boxes(i - 1) } else { 0 };
        let above = self.boxes(i + 1);
        below as i64 + above as i64 - 2 * self.boxes(i) as i64
    }
}

impl Bicrystal for Multisegment {
    fn e_star(&self, i: usize) -> Option<Self> {
        Multisegment::e_star(self, i)
    }

    fn f_star(&self, i: usize) -> Option<Self> {
        Some(Multisegment::f_star(self, i))
    }

    fn eps_star(&self, i: usize) -> u32 {
        Multisegment::eps_star(self, i)
    }
}
