//! Partitions as Young diagrams.
//!
//! Boxes are `(r, s)` with `r` the row (weighted by `t`) and `s` the column
//! (weighted by `q`), both 0-based, so a box contributes the monomial `t^r q^s`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Box {
    pub r: usize,
    pub s: usize,
}

impl Box {
    pub fn new(r: usize, s: usize) -> Self {
        Box { r, s }
    }
}

impl Partition {
    /// Build from weakly decreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Build from arbitrary positive parts, sorting them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, 0 beyond the last row.
    pub fn part(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn contains(&self, x: Box) -> bool {
        x.s < self.part(x.r)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = Box> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |s| Box::new(r, s)))
    }

    fn check(&self, x: Box) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::BoxOutsideDiagram {
                shape: self.clone(),
                cell: x,
            })
        }
    }

    /// Number of boxes strictly to the right of `x` in its row.
    pub fn arm(&self, x: Box) -> Result<usize> {
        self.check(x)?;
        Ok(self.parts[x.r] - x.s - 1)
    }

    /// Number of boxes strictly below `x` in its column.
    pub fn leg(&self, x: Box) -> Result<usize> {
        self.check(x)?;
        Ok(self.parts[x.r + 1..].iter().take_while(|&&p| p > x.s).count())
    }

    /// `(arm, leg)` for a box already known to lie in the diagram.
    pub fn arm_leg(&self, x: Box) -> (usize, usize) {
        (self.arm(x).expect("box in diagram"), self.leg(x).expect("box in diagram"))
    }

    pub fn hook(&self, x: Box) -> Result<usize> {
        Ok(self.arm(x)? + self.leg(x)? + 1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|s| self.parts.iter().take_while(|&&p| p > s).count())
            .collect();
        Partition { parts }
    }

    /// `n(mu) = sum_i (i - 1) mu_i`, the sum of row indices over all boxes.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Multiplicities `m_i` of each part size `i`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`, the centralizer order of a permutation of cycle type `lambda`.
    pub fn z(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| (i as u128).pow(m as u32) * factorial(m))
            .product()
    }

    /// JSON-style key `[3,2,1]`.
    pub fn key(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("[{}]", inner.join(","))
    }

    /// Dominance order `self >= other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n` in reverse-lexicographic order: `(n), (n-1,1), ..., (1^n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for first in (1..=rem.min(max)).rev() {
            cur.push(first);
            rec(rem - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn arm(mu: &Partition, x: Box) -> Result<usize> {
    mu.arm(x)
}

pub fn leg(mu: &Partition, x: Box) -> Result<usize> {
    mu.leg(x)
}

pub fn conjugate(mu: &Partition) -> Partition {
    mu.conjugate()
}

/// Number of standard Young tableaux of shape `lam`, by the hook-length formula.
pub fn syt_count(lam: &Partition) -> u128 {
    let hooks: u128 = lam
        .boxes()
        .map(|x| lam.hook(x).expect("box in diagram") as u128)
        .product();
    factorial(lam.n()) / hooks
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("[]");
        }
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&inner.join("+"))
    }
}

/// Accepts `3+2+1`, `[3,2,1]`, `[]` and `(3,2,1)`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .unwrap_or(t);
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split([',', '+'])
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<usize>>>()?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Position of each partition of `n` in [`partitions_of`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionIndex {
    list: Vec<Partition>,
}

impl PartitionIndex {
    pub fn new(n: usize) -> Self {
        PartitionIndex {
            list: partitions_of(n),
        }
    }

    pub fn list(&self) -> &[Partition] {
        &self.list
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn index(&self, p: &Partition) -> Option<usize> {
        // Reverse-lex order is strictly decreasing in lexicographic order.
        self.list.binary_search_by(|x| p.cmp(x)).ok()
    }
}
