//! Extensional sets of Boolean functions up to an arity cap.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolfn::BoolFn;
use crate::class::ClassExpr;
use crate::error::{Error, Result};

/// Largest cap for which every arity is stored as a full bitset.
pub const MAX_SET_CAP: usize = 4;

/// A set of Boolean functions of arity `1..=cap`, one bitset per arity
/// indexed by truth table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FnSet {
    cap: usize,
    bits: Vec<Vec<u64>>,
}

fn words(n: usize) -> usize {
    ((1usize << (1 << n)) / 64).max(1)
}

fn check_cap(cap: usize) -> Result<()> {
    if cap == 0 || cap > MAX_SET_CAP {
        Err(Error::Resource(format!(
            "function sets support arity caps 1..={MAX_SET_CAP}, got {cap}"
        )))
    } else {
        Ok(())
    }
}

impl FnSet {
    pub fn empty(cap: usize) -> Result<Self> {
        check_cap(cap)?;
        Ok(FnSet {
            cap,
            bits: (1..=cap).map(|n| vec![0; words(n)]).collect(),
        })
    }

    pub fn full(cap: usize) -> Result<Self> {
        Self::from_predicate(cap, |_| true)
    }

    /// All functions of arity `≤ cap` satisfying `pred`.
    pub fn from_predicate(cap: usize, pred: impl Fn(&BoolFn) -> bool + Sync) -> Result<Self> {
        let mut s = Self::empty(cap)?;
        for n in 1..=cap {
            let size = 1u64 << (1 << n);
            let words: Vec<u64> = (0..s.bits[n - 1].len())
                .into_par_iter()
                .map(|w| {
                    let mut word = 0u64;
                    for b in 0..64u64 {
                        let t = w as u64 * 64 + b;
                        if t < size && pred(&BoolFn::from_raw(n, t)) {
                            word |= 1 << b;
                        }
                    }
                    word
                })
                .collect();
            s.bits[n - 1] = words;
        }
        Ok(s)
    }

    pub fn from_expr(e: &ClassExpr, cap: usize) -> Result<Self> {
        Self::from_predicate(cap, |f| e.contains(f))
    }

    pub fn from_fns<'a>(cap: usize, fns: impl IntoIterator<Item = &'a BoolFn>) -> Result<Self> {
        let mut s = Self::empty(cap)?;
        for f in fns {
            s.insert(f)?;
        }
        Ok(s)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Adds `f`; returns whether it was new.
    pub fn insert(&mut self, f: &BoolFn) -> Result<bool> {
        let n = f.arity();
        if n > self.cap {
            return Err(Error::Resource(format!(
                "function of arity {n} inserted into a set with cap {}",
                self.cap
            )));
        }
        let t = f.table() as usize;
        let word = &mut self.bits[n - 1][t / 64];
        let was = (*word >> (t % 64)) & 1 == 1;
        *word |= 1 << (t % 64);
        Ok(!was)
    }

    pub fn remove(&mut self, f: &BoolFn) {
        if f.arity() <= self.cap {
            let t = f.table() as usize;
            self.bits[f.arity() - 1][t / 64] &= !(1 << (t % 64));
        }
    }

    /// Membership; functions above the cap are never members.
    #[inline]
    pub fn contains(&self, f: &BoolFn) -> bool {
        let n = f.arity();
        n <= self.cap && self.contains_table(n, f.table())
    }

    #[inline]
    pub fn contains_table(&self, n: usize, t: u64) -> bool {
        let t = t as usize;
        (self.bits[n - 1][t / 64] >> (t % 64)) & 1 == 1
    }

    /// Members of arity `n`, in table order.
    pub fn members(&self, n: usize) -> impl Iterator<Item = BoolFn> + '_ {
        self.tables(n)
            .into_iter()
            .map(move |t| BoolFn::from_raw(n, t))
    }

    /// Tables of the members of arity `n`.
    pub fn tables(&self, n: usize) -> Vec<u64> {
        if n == 0 || n > self.cap {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (w, &word) in self.bits[n - 1].iter().enumerate() {
            let mut rest = word;
            while rest != 0 {
                let b = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                out.push(w as u64 * 64 + b);
            }
        }
        out
    }

    /// All members, by arity then table.
    pub fn iter(&self) -> impl Iterator<Item = BoolFn> + '_ {
        (1..=self.cap).flat_map(move |n| self.members(n))
    }

    pub fn count(&self, n: usize) -> usize {
        if n == 0 || n > self.cap {
            return 0;
        }
        self.bits[n - 1]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Member counts for arities `1..=cap`.
    pub fn counts(&self) -> Vec<usize> {
        (1..=self.cap).map(|n| self.count(n)).collect()
    }

    pub fn len(&self) -> usize {
        self.counts().iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|b| b.iter().all(|&w| w == 0))
    }

    fn zip(&self, other: &FnSet, op: impl Fn(u64, u64) -> u64) -> Result<FnSet> {
        if self.cap != other.cap {
            return Err(Error::Shape(format!(
                "caps {} and {} differ",
                self.cap, other.cap
            )));
        }
        Ok(FnSet {
            cap: self.cap,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| op(x, y)).collect())
                .collect(),
        })
    }

    pub fn union(&self, other: &FnSet) -> Result<FnSet> {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &FnSet) -> Result<FnSet> {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &FnSet) -> Result<FnSet> {
        self.zip(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &FnSet) -> bool {
        self.cap <= other.cap
            && self
                .bits
                .iter()
                .zip(&other.bits)
                .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x & !y == 0))
    }

    /// Some function in exactly one of the two sets, smallest arity first.
    pub fn first_difference(&self, other: &FnSet) -> Option<BoolFn> {
        let cap = self.cap.min(other.cap);
        for n in 1..=cap {
            for (w, (a, b)) in self.bits[n - 1].iter().zip(&other.bits[n - 1]).enumerate() {
                let d = a ^ b;
                if d != 0 {
                    return Some(BoolFn::from_raw(
                        n,
                        w as u64 * 64 + d.trailing_zeros() as u64,
                    ));
                }
            }
        }
        None
    }

    fn map(&self, f: impl Fn(&BoolFn) -> BoolFn) -> FnSet {
        let mut out = FnSet::empty(self.cap).unwrap();
        for g in self.iter() {
            out.insert(&f(&g)).unwrap();
        }
        out
    }

    /// `K̄ = {¬}K`.
    pub fn bar(&self) -> FnSet {
        self.map(|f| f.negate())
    }

    /// `K^d`.
    pub fn dual(&self) -> FnSet {
        self.map(|f| f.dual())
    }

    /// The same set truncated to a smaller cap.
    pub fn truncate(&self, cap: usize) -> Result<FnSet> {
        check_cap(cap)?;
        if cap > self.cap {
            return Err(Error::Contract(format!(
                "cannot raise cap {} to {cap}",
                self.cap
            )));
        }
        Ok(FnSet {
            cap,
            bits: self.bits[..cap].to_vec(),
        })
    }

    /// Whether the set equals the class `e` at every arity `≤ cap`.
    pub fn matches_expr(&self, e: &ClassExpr) -> bool {
        FnSet::from_expr(e, self.cap)
            .map(|s| &s == self)
            .unwrap_or(false)
    }

    /// `arity n: count` summary, e.g. `[2, 6, 40]`.
    pub fn summary(&self) -> String {
        format!("cap {} counts {:?}", self.cap, self.counts())
    }
}

impl fmt::Debug for FnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FnSet({})", self.summary())
    }
}

#[derive(Serialize, Deserialize)]
struct FnSetRepr {
    cap: usize,
    members: Vec<BoolFn>,
}

impl Serialize for FnSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FnSetRepr {
            cap: self.cap,
            members: self.iter().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FnSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FnSetRepr::deserialize(d)?;
        FnSet::from_fns(r.cap, &r.members).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        let mut s = FnSet::empty(2).unwrap();
        assert!(s.insert(&BoolFn::and()).unwrap());
        assert!(!s.insert(&BoolFn::and()).unwrap());
        assert!(s.contains(&BoolFn::and()));
        assert!(!s.contains(&BoolFn::or()));
        assert!(!s.contains(&BoolFn::majority()));
        assert!(s.insert(&BoolFn::majority()).is_err());
        assert_eq!(s.len(), 1);
        assert_eq!(
            s.bar().members(2).collect::<Vec<_>>(),
            vec![BoolFn::and().negate()]
        );
        assert_eq!(s.dual().members(2).collect::<Vec<_>>(), vec![BoolFn::or()]);
        let full = FnSet::full(3).unwrap();
        assert_eq!(full.counts(), vec![4, 16, 256]);
        assert!(FnSet::empty(5).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let s = FnSet::from_fns(3, &[BoolFn::xor3(), BoolFn::not()]).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"cap":3,"members":["1:1","3:96"]}"#);
        let back: FnSet = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
