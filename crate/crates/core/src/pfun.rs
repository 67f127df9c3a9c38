//! Functions `Pi_n -> Q(q,t)` on the set of partitions of `n`.

use std::collections::BTreeMap;
use std::ops::Index;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactqt::text::parse_ratqt;
use crate::exactqt::RatQT;
use crate::partitions::{partitions_of, Partition, PartitionIndex};

/// Values stored in the order of [`partitions_of`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionFunction {
    n: usize,
    index: PartitionIndex,
    values: Vec<RatQT>,
}

impl PartitionFunction {
    pub fn new(n: usize, values: Vec<RatQT>) -> Result<Self> {
        let index = PartitionIndex::new(n);
        if values.len() != index.len() {
            return Err(Error::DimensionMismatch {
                expected: index.len(),
                found: values.len(),
            });
        }
        Ok(PartitionFunction { n, index, values })
    }

    pub fn from_fn(n: usize, f: impl FnMut(&Partition) -> RatQT) -> Self {
        let values = partitions_of(n).iter().map(f).collect();
        PartitionFunction {
            n,
            index: PartitionIndex::new(n),
            values,
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| RatQT::zero())
    }

    /// Indicator of `mu` scaled by `value`.
    pub fn delta(mu: &Partition, value: RatQT) -> Self {
        Self::from_fn(mu.n(), |nu| if nu == mu { value.clone() } else { RatQT::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        self.index.list()
    }

    pub fn values(&self) -> &[RatQT] {
        &self.values
    }

    pub fn into_values(self) -> Vec<RatQT> {
        self.values
    }

    pub fn get(&self, mu: &Partition) -> Option<&RatQT> {
        self.index.index(mu).map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &RatQT)> {
        self.index.list().iter().zip(&self.values)
    }

    pub fn map(&self, f: impl Fn(&Partition, &RatQT) -> RatQT) -> Self {
        Self::from_fn(self.n, |mu| f(mu, &self[mu]))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Self {
        self.map(|mu, v| v * &other[mu])
    }

    pub fn sum(&self) -> RatQT {
        self.values.iter().cloned().sum()
    }

    /// Apply the top involution `q -> 1/q, t -> 1/t` pointwise.
    pub fn top(&self) -> Self {
        self.map(|_, v| v.top())
    }

    /// Parse the `{"[mu]": "text", ...}` map form.
    pub fn from_text_map(n: usize, map: &BTreeMap<String, String>) -> Result<Self> {
        let mut values = Vec::new();
        for mu in partitions_of(n) {
            let s = map
                .get(&mu.key())
                .ok_or_else(|| Error::Parse(format!("missing entry {}", mu.key())))?;
            values.push(parse_ratqt(s)?);
        }
        Self::new(n, values)
    }

    pub fn to_text_map(&self) -> BTreeMap<String, String> {
        self.iter().map(|(mu, v)| (mu.key(), v.to_string())).collect()
    }
}

impl Index<&Partition> for PartitionFunction {
    type Output = RatQT;

    fn index(&self, mu: &Partition) -> &RatQT {
        self.get(mu).expect("partition of the wrong size")
    }
}

/// Serialized as `{"[mu]": "canonical text", ...}`.
impl Serialize for PartitionFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map = self.to_text_map();
        let mut m = s.serialize_map(Some(map.len()))?;
        for (k, v) in &map {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}
