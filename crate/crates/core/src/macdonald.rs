//! Modified Macdonald polynomials and the Kostka-Macdonald table.
//!
//! `H~_mu` is built from the Haglund-Haiman-Loehr fillings formula
//! `sum_sigma q^inv(sigma) t^maj(sigma) x^sigma`, collected by content into the
//! monomial basis and then re-expanded in Schur functions. The diagram is in
//! French position: row 0 is the longest row, at the bottom, and the box
//! `(r, s)` carries the monomial `t^r q^s`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::PerN;
use crate::error::{Error, Result};
use crate::exactqt::text::parse_laurent;
use crate::exactqt::{BigRat, Exp, LaurentQT, RatQT};
use crate::linalg::{self, Matrix};
use crate::partitions::{partitions_of, Box, Partition, PartitionIndex};
use crate::symfunc::{Basis, SymFunc};

/// Largest `n` accepted by [`modified_macdonald`].
pub const MAX_N: usize = 8;

/// Version tag written into cache files; bump when the table generator changes.
pub const CACHE_VERSION: u32 = 1;

/// Which of the two customary normalizations of `K~` to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KostkaConvention {
    /// `K~_{(1^n),mu} = t^{n(mu)} q^{n(mu')}`, so `K~_{(1,1),(2)} = q`.
    #[default]
    Standard,
    /// The same table with `q` and `t` exchanged.
    Swapped,
}

impl KostkaConvention {
    pub fn name(self) -> &'static str {
        match self {
            KostkaConvention::Standard => "standard",
            KostkaConvention::Swapped => "swapped",
        }
    }
}

/// Cell data in reading order (rows top to bottom, left to right).
struct Layout {
    below: Vec<Option<usize>>,
    arm: Vec<i64>,
    leg: Vec<i64>,
    /// Attacking pairs `(u, v)` with `u` read before `v`.
    attacks: Vec<(usize, usize)>,
}

fn layout(mu: &Partition) -> Layout {
    let mut cells: Vec<Box> = Vec::new();
    for r in (0..mu.len()).rev() {
        for s in 0..mu.part(r) {
            cells.push(Box::new(r, s));
        }
    }
    let pos: HashMap<Box, usize> = cells.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let below = cells
        .iter()
        .map(|c| (c.r > 0).then(|| pos[&Box::new(c.r - 1, c.s)]))
        .collect();
    let (arm, leg) = cells
        .iter()
        .map(|&c| {
            let (a, l) = mu.arm_leg(c);
            (a as i64, l as i64)
        })
        .unzip();
    let mut attacks = Vec::new();
    for (i, u) in cells.iter().enumerate() {
        for (j, v) in cells.iter().enumerate().skip(i + 1) {
            let same_row = u.r == v.r;
            // u is read first, so it lies in the upper row when the rows differ.
            let diagonal = u.r == v.r + 1 && u.s > v.s;
            if same_row || diagonal {
                attacks.push((i, j));
            }
        }
    }
    Layout {
        below,
        arm,
        leg,
        attacks,
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `sum q^inv t^maj` over fillings of `mu` with content `lam`.
fn content_sum(lay: &Layout, lam: &Partition) -> LaurentQT {
    let mut fill: Vec<u8> = Vec::new();
    for (k, &m) in lam.parts().iter().enumerate() {
        fill.extend(std::iter::repeat_n(k as u8, m));
    }
    let mut counts: HashMap<(i64, i64), i64> = HashMap::new();
    loop {
        let mut maj = 0;
        let mut arm_des = 0;
        for (u, b) in lay.below.iter().enumerate() {
            if let Some(b) = *b {
                if fill[u] > fill[b] {
                    maj += lay.leg[u] + 1;
                    arm_des += lay.arm[u];
                }
            }
        }
        let inversions = lay.attacks.iter().filter(|&&(u, v)| fill[u] > fill[v]).count() as i64;
        *counts.entry((inversions - arm_des, maj)).or_insert(0) += 1;
        if !next_permutation(&mut fill) {
            break;
        }
    }
    LaurentQT::from_terms(
        counts
            .into_iter()
            .map(|((i, m), c)| (Exp::int(i, m), BigRat::from_integer(BigInt::from(c)))),
    )
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::SizeOverBound { n, bound: MAX_N });
    }
    Ok(())
}

/// `H~_mu` in the Schur basis.
pub fn modified_macdonald(mu: &Partition) -> Result<SymFunc> {
    check_size(mu.n())?;
    let lay = layout(mu);
    let mono = SymFunc::from_coeffs(
        mu.n(),
        Basis::Monomial,
        partitions_of(mu.n())
            .into_iter()
            .map(|lam| {
                let c = content_sum(&lay, &lam);
                (lam, RatQT::from_laurent(c))
            }),
    )?;
    Ok(mono.convert_basis(Basis::Schur))
}

/// `K~_{lam,mu}`, rows `lam`, columns `mu`, both in [`partitions_of`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaTable {
    n: usize,
    index: PartitionIndex,
    entries: Matrix<LaurentQT>,
}

static TABLES: PerN<KostkaTable> = PerN::new();
static INVERSES: PerN<Matrix<RatQT>> = PerN::new();

/// The table in the standard convention, computed once per `n` in parallel over `mu`.
pub fn kostka_table(n: usize) -> Result<Arc<KostkaTable>> {
    check_size(n)?;
    Ok(TABLES.get_or(n, || build_table(n)))
}

pub fn kostka_table_with(n: usize, conv: KostkaConvention) -> Result<KostkaTable> {
    let t = kostka_table(n)?;
    Ok(match conv {
        KostkaConvention::Standard => (*t).clone(),
        KostkaConvention::Swapped => t.swapped(),
    })
}

/// Whether the standard table for `n` is already in memory.
pub fn kostka_table_is_loaded(n: usize) -> bool {
    TABLES.contains(n)
}

/// Seeds the in-memory table, typically from a cache file. The table must be
/// in the standard convention. Returns `false` if a table was already present.
pub fn install_kostka_table(table: KostkaTable) -> Result<bool> {
    check_size(table.n)?;
    Ok(TABLES.insert(table.n, table))
}

fn build_table(n: usize) -> KostkaTable {
    let index = PartitionIndex::new(n);
    let cols: Vec<SymFunc> = index
        .list()
        .par_iter()
        .map(|mu| modified_macdonald(mu).expect("size checked"))
        .collect();
    let entries = index
        .list()
        .iter()
        .map(|lam| {
            cols.iter()
                .map(|h| {
                    let c = h.coeff(lam);
                    c.as_laurent().cloned().expect("Kostka-Macdonald entries are polynomials")
                })
                .collect()
        })
        .collect();
    KostkaTable { n, index, entries }
}

impl KostkaTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        self.index.list()
    }

    pub fn get(&self, lam: &Partition, mu: &Partition) -> &LaurentQT {
        let i = self.index.index(lam).expect("partition of size n");
        let j = self.index.index(mu).expect("partition of size n");
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &Matrix<LaurentQT> {
        &self.entries
    }

    pub fn swapped(&self) -> Self {
        KostkaTable {
            n: self.n,
            index: self.index.clone(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|x| x.swap_qt()).collect())
                .collect(),
        }
    }

    /// The table as a matrix over `Q(q,t)`.
    pub fn matrix(&self) -> Matrix<RatQT> {
        self.entries
            .iter()
            .map(|r| r.iter().cloned().map(RatQT::from_laurent).collect())
            .collect()
    }

    /// Cache text: `{"version":1,"n":N,"entries":{"[lam]|[mu]":"..."}}`.
    pub fn to_cache_json(&self) -> String {
        let mut entries = BTreeMap::new();
        for (i, lam) in self.index.list().iter().enumerate() {
            for (j, mu) in self.index.list().iter().enumerate() {
                entries.insert(format!("{}|{}", lam.key(), mu.key()), self.entries[i][j].to_string());
            }
        }
        let file = CacheFile {
            version: CACHE_VERSION,
            n: self.n,
            entries,
        };
        serde_json::to_string_pretty(&file).expect("serializable") + "\n"
    }

    pub fn from_cache_json(text: &str) -> Result<Self> {
        let file: CacheFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.version != CACHE_VERSION {
            return Err(Error::Parse(format!(
                "cache version {} does not match {CACHE_VERSION}",
                file.version
            )));
        }
        let index = PartitionIndex::new(file.n);
        let mut entries = Vec::new();
        for lam in index.list() {
            let mut row = Vec::new();
            for mu in index.list() {
                let key = format!("{}|{}", lam.key(), mu.key());
                let s = file
                    .entries
                    .get(&key)
                    .ok_or_else(|| Error::Parse(format!("cache lacks {key}")))?;
                row.push(parse_laurent(s)?);
            }
            entries.push(row);
        }
        if file.entries.len() != index.len() * index.len() {
            return Err(Error::Parse("cache has extra entries".into()));
        }
        Ok(KostkaTable {
            n: file.n,
            index,
            entries,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    n: usize,
    entries: BTreeMap<String, String>,
}

/// `(K~)^-1` over `Q(q,t)`, standard convention, cached per `n`.
pub fn kostka_inverse(n: usize) -> Result<Arc<Matrix<RatQT>>> {
    let table = kostka_table(n)?;
    Ok(INVERSES.get_or(n, || {
        linalg::inverse(&table.matrix()).expect("the Kostka-Macdonald matrix is invertible")
    }))
}
