//! Semistandard tableaux with entries `0..=n`, realizing `B(λ)`.
//!
//! `f_i` turns an `i-1` into an `i`. Its position comes from the column
//! bracket rule: `)` over each column holding `i-1` but not `i`, `(` over
//! each column holding `i` but not `i-1`, read left to right.

use std::fmt;
use std::str::FromStr;

use crate::bracket::{Bracket, BracketKind, BracketString};
use crate::crystal::{Crystal, Rank};
use crate::error::CrystalError;
use crate::multisegment::{Multisegment, Segment};

/// A partition `λ_1 >= λ_2 >= ... >= λ_k > 0`. The empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CrystalError> {
        if parts.contains(&0) {
            return Err(CrystalError::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CrystalError::InvalidPartition("parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Fails unless the shape has at most `n` rows.
    pub fn check_rank(&self, rank: Rank) -> Result<(), CrystalError> {
        if self.rows() > rank.as_usize() {
            return Err(CrystalError::UnsupportedShape { rows: self.rows(), rank: rank.get() });
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = CrystalError;

    /// Parses `"2,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|_| CrystalError::InvalidPartition(format!("bad part `{}`", p.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Fundamental-weight coefficients of `λ`: the coefficient of `ω_i` is `λ_i - λ_{i+1}`.
pub fn partition_weight(lambda: &Partition, rank: Rank) -> Result<Vec<i64>, CrystalError> {
    lambda.check_rank(rank)?;
    let part = |i: usize| lambda.parts.get(i).copied().map_or(0, i64::from);
    Ok((0..rank.as_usize()).map(|i| part(i) - part(i + 1)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rank: Rank,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates shape, entry range and semistandardness.
    pub fn new(rank: Rank, rows: Vec<Vec<u32>>) -> Result<Self, CrystalError> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|e| CrystalError::InvalidTableau(format!("row lengths: {e}")))?;
        shape.check_rank(rank)?;
        let t = Tableau { rank, rows };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<(), CrystalError> {
        let n = self.rank.get();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v > n {
                    return Err(CrystalError::InvalidTableau(format!("entry {v} exceeds {n}")));
                }
                if (v as usize) < r {
                    return Err(CrystalError::InvalidTableau(format!("entry {v} too small for row {}", r + 1)));
                }
                if c > 0 && row[c - 1] > v {
                    return Err(CrystalError::InvalidTableau(format!("row {} is not weakly increasing", r + 1)));
                }
                if r > 0 && self.rows[r - 1][c] >= v {
                    return Err(CrystalError::InvalidTableau(format!("column {} is not strictly increasing", c + 1)));
                }
            }
        }
        Ok(())
    }

    /// Row `r` (1-based) filled with `r-1`.
    pub fn highest_weight(lambda: &Partition, rank: Rank) -> Result<Self, CrystalError> {
        lambda.check_rank(rank)?;
        let rows = lambda.parts.iter().enumerate().map(|(r, &len)| vec![r as u32; len as usize]).collect();
        Ok(Tableau { rank, rows })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(|r| r.len() as u32).collect() }
    }

    fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    fn column(&self, c: usize) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().take_while(move |row| row.len() > c).map(move |row| row[c])
    }

    /// Column bracket string; sites are 0-based column indices.
    pub fn bracket_string(&self, i: usize) -> BracketString<usize> {
        self.rank.assert_index(i);
        let i = i as u32;
        let tokens = (0..self.width()).filter_map(|c| {
            let (mut lower, mut upper) = (false, false);
            for v in self.column(c) {
                lower |= v + 1 == i;
                upper |= v == i;
            }
            match (lower, upper) {
                (true, false) => Some((c, Bracket::Close)),
                (false, true) => Some((c, Bracket::Open)),
                _ => None,
            }
        });
        BracketString::new(BracketKind::Column, i as usize, tokens)
    }

    fn replace_in_column(&self, c: usize, from: u32, to: u32) -> Tableau {
        let mut t = self.clone();
        let row = t.rows.iter().position(|row| row.len() > c && row[c] == from).expect("bracket column holds the entry");
        t.rows[row][c] = to;
        t
    }

    /// `f_i` with the semistandard check surfaced as an error.
    pub fn checked_f(&self, i: usize) -> Result<Option<Tableau>, CrystalError> {
        let s = self.bracket_string(i);
        let Some(&c) = s.rightmost_uncanceled_close() else { return Ok(None) };
        let t = self.replace_in_column(c, i as u32 - 1, i as u32);
        t.check().map_err(|e| CrystalError::Integrity(format!("f_{i} on {}: {e}", self.label())))?;
        Ok(Some(t))
    }

    /// `e_i` with the semistandard check surfaced as an error.
    pub fn checked_e(&self, i: usize) -> Result<Option<Tableau>, CrystalError> {
        let s = self.bracket_string(i);
        let Some(&c) = s.leftmost_uncanceled_open() else { return Ok(None) };
        let t = self.replace_in_column(c, i as u32, i as u32 - 1);
        t.check().map_err(|e| CrystalError::Integrity(format!("e_{i} on {}: {e}", self.label())))?;
        Ok(Some(t))
    }

    pub fn count(&self, v: u32) -> u64 {
        self.rows.iter().flatten().filter(|&&x| x == v).count() as u64
    }

    /// Number of `f` steps from the highest weight tableau of the same shape.
    pub fn depth(&self) -> u64 {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |&v| u64::from(v) - r as u64)).sum()
    }

    /// The multisegment with one `[r, v]` for each entry `v >= r` in row `r`.
    pub fn embed(&self) -> Multisegment {
        let segs = self.rows.iter().enumerate().flat_map(|(r, row)| {
            let r = r as u32 + 1;
            row.iter().filter(move |&&v| v >= r).map(move |&v| (Segment::new(r, v).expect("v >= r >= 1"), 1))
        });
        Multisegment::from_segments(self.rank, segs).expect("entries are at most n")
    }

    /// Rows separated by `/`; entries are concatenated digits when `n <= 9`
    /// and comma-separated otherwise.
    pub fn label(&self) -> String {
        if self.rows.is_empty() {
            return "∅".to_string();
        }
        let sep = if self.rank.get() <= 9 { "" } else { "," };
        self.rows
            .iter()
            .map(|row| row.iter().map(u32::to_string).collect::<Vec<_>>().join(sep))
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Crystal for Tableau {
    fn rank(&self) -> Rank {
        self.rank
    }

    fn e(&self, i: usize) -> Option<Self> {
        self.checked_e(i).expect("e_i preserves semistandardness")
    }

    fn f(&self, i: usize) -> Option<Self> {
        self.checked_f(i).expect("f_i preserves semistandardness")
    }

    fn eps(&self, i: usize) -> u32 {
        self.bracket_string(i).uncanceled_open() as u32
    }

    /// `#(i-1) - #(i)`.
    fn pairing(&self, i: usize) -> i64 {
        self.rank.assert_index(i);
        self.count(i as u32 - 1) as i64 - self.count(i as u32) as i64
    }
}

/// Every semistandard tableau of shape `λ` with entries `0..=n`, by
/// backtracking cell by cell in row-major order. Output is sorted.
pub fn enumerate_ssyt(lambda: &Partition, rank: Rank) -> Result<Vec<Tableau>, CrystalError> {
    lambda.check_rank(rank)?;
    let n = rank.get();
    let cells: Vec<(usize, usize)> =
        lambda.parts.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut rows: Vec<Vec<u32>> = lambda.parts.iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, n, &mut rows, &mut |rows| out.push(Tableau { rank, rows: rows.to_vec() }));
    out.sort();
    Ok(out)
}

fn fill(cells: &[(usize, usize)], k: usize, n: u32, rows: &mut Vec<Vec<u32>>, emit: &mut impl FnMut(&[Vec<u32>])) {
    let Some(&(r, c)) = cells.get(k) else {
        emit(rows);
        return;
    };
    let left = if c > 0 { rows[r][c - 1] } else { 0 };
    let above = if r > 0 { rows[r - 1][c] + 1 } else { 0 };
    for v in left.max(above)..=n {
        rows[r][c] = v;
        fill(cells, k + 1, n, rows, emit);
    }
}
