//! Boolean functions as `(arity, truth table)` pairs.
//!
//! Tuples are indexed big-endian: the tuple `(a1, …, an)` has index
//! `Σ a_i · 2^(n-i)`, so `x1` is the most significant bit. Bit `i` of the
//! table is the value on tuple `i`. Arity is limited to [`MAX_ARITY`] so a
//! table always fits in a `u64`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported arity (`2^6 = 64` table bits).
pub const MAX_ARITY: usize = 6;

/// `VAR_MASK[p]` has bit `idx` set iff bit `p` of `idx` is set.
const VAR_MASK: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Mask of the `2^n` valid table bits.
#[inline]
pub const fn full_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

/// A Boolean function `{0,1}^n → {0,1}` with `1 ≤ n ≤ MAX_ARITY`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolFn {
    arity: u8,
    table: u64,
}

/// Argument map `σ: [1,n] → [1,m]`, stored zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArgMap {
    target_arity: usize,
    map: Vec<usize>,
}

impl ArgMap {
    /// `map[i]` is the zero-based target position of source argument `i`.
    pub fn new(map: Vec<usize>, target_arity: usize) -> Result<Self> {
        if map.is_empty() {
            return Err(Error::Shape("argument map with empty source".into()));
        }
        if target_arity == 0 || target_arity > MAX_ARITY {
            return Err(Error::Shape(format!(
                "target arity {target_arity} out of range"
            )));
        }
        if let Some(&bad) = map.iter().find(|&&j| j >= target_arity) {
            return Err(Error::Shape(format!(
                "argument map sends an argument to position {} but target arity is {target_arity}",
                bad + 1
            )));
        }
        Ok(ArgMap { target_arity, map })
    }

    /// Same as [`ArgMap::new`] with one-based positions.
    pub fn one_based(map: &[usize], target_arity: usize) -> Result<Self> {
        if map.contains(&0) {
            return Err(Error::Shape("one-based argument map contains 0".into()));
        }
        Self::new(map.iter().map(|&j| j - 1).collect(), target_arity)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((0..n).collect(), n)
    }

    pub fn source_arity(&self) -> usize {
        self.map.len()
    }

    pub fn target_arity(&self) -> usize {
        self.target_arity
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// The map `τ∘σ`: minor by `self`, then by `tau`, equals minor by this.
    pub fn then(&self, tau: &ArgMap) -> Result<ArgMap> {
        if tau.source_arity() != self.target_arity {
            return Err(Error::Shape("argument maps are not composable".into()));
        }
        ArgMap::new(
            self.map.iter().map(|&j| tau.map[j]).collect(),
            tau.target_arity,
        )
    }

    /// Every map `[n] → [m]`.
    pub fn all(n: usize, m: usize) -> Vec<ArgMap> {
        let total = m.pow(n as u32);
        (0..total)
            .map(|mut code| {
                let mut map = vec![0; n];
                for slot in map.iter_mut().rev() {
                    *slot = code % m;
                    code /= m;
                }
                ArgMap {
                    target_arity: m,
                    map,
                }
            })
            .collect()
    }
}

fn check_arity(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Shape("nullary functions are not supported".into()))
    } else if n > MAX_ARITY {
        Err(Error::Resource(format!(
            "arity {n} exceeds the maximum {MAX_ARITY}"
        )))
    } else {
        Ok(())
    }
}

impl BoolFn {
    /// Builds a function from its table; bits beyond `2^arity` must be zero.
    pub fn new(arity: usize, table: u64) -> Result<Self> {
        check_arity(arity)?;
        if table & !full_mask(arity) != 0 {
            return Err(Error::Shape(format!(
                "table {table:#x} has bits beyond the {} entries of arity {arity}",
                1 << arity
            )));
        }
        Ok(BoolFn {
            arity: arity as u8,
            table,
        })
    }

    #[inline]
    pub(crate) const fn from_raw(arity: usize, table: u64) -> Self {
        BoolFn {
            arity: arity as u8,
            table: table & full_mask(arity),
        }
    }

    /// Builds a function from a predicate on tuple indices.
    pub fn from_index_fn(arity: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        check_arity(arity)?;
        let mut table = 0u64;
        for idx in 0..(1usize << arity) {
            if f(idx) {
                table |= 1 << idx;
            }
        }
        Ok(BoolFn::from_raw(arity, table))
    }

    /// Builds a function from a predicate on argument tuples.
    pub fn from_tuple_fn(arity: usize, mut f: impl FnMut(&[bool]) -> bool) -> Result<Self> {
        let mut buf = vec![false; arity];
        Self::from_index_fn(arity, |idx| {
            for (i, b) in buf.iter_mut().enumerate() {
                *b = (idx >> (arity - 1 - i)) & 1 == 1;
            }
            f(&buf)
        })
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    #[inline]
    pub fn table(&self) -> u64 {
        self.table
    }

    /// Number of table entries, `2^arity`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        full_mask(self.arity())
    }

    /// Value on the tuple with the given index.
    #[inline]
    pub fn at(&self, idx: usize) -> bool {
        (self.table >> idx) & 1 == 1
    }

    pub fn eval(&self, input: &[bool]) -> Result<bool> {
        if input.len() != self.arity() {
            return Err(Error::Shape(format!(
                "tuple of length {} given to a function of arity {}",
                input.len(),
                self.arity
            )));
        }
        Ok(self.at(tuple_index(input)))
    }

    /// `f(0,…,0)`.
    #[inline]
    pub fn at_zero(&self) -> bool {
        self.at(0)
    }

    /// `f(1,…,1)`.
    #[inline]
    pub fn at_one(&self) -> bool {
        self.at(self.len() - 1)
    }

    // ---- named functions ----

    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        check_arity(arity)?;
        Ok(BoolFn::from_raw(arity, if value { u64::MAX } else { 0 }))
    }

    /// Projection onto argument `i` (zero-based) of an `n`-ary tuple.
    pub fn projection(n: usize, i: usize) -> Result<Self> {
        check_arity(n)?;
        if i >= n {
            return Err(Error::Shape(format!(
                "projection index {} exceeds arity {n}",
                i + 1
            )));
        }
        Ok(BoolFn::from_raw(n, VAR_MASK[n - 1 - i]))
    }

    pub fn identity() -> Self {
        BoolFn::from_raw(1, 0b10)
    }
    pub fn not() -> Self {
        BoolFn::from_raw(1, 0b01)
    }
    pub fn and() -> Self {
        BoolFn::from_raw(2, 0b1000)
    }
    pub fn or() -> Self {
        BoolFn::from_raw(2, 0b1110)
    }
    pub fn xor() -> Self {
        BoolFn::from_raw(2, 0b0110)
    }
    pub fn implies() -> Self {
        BoolFn::from_raw(2, 0b1011)
    }
    pub fn iff() -> Self {
        BoolFn::from_raw(2, 0b1001)
    }
    /// Ternary majority `μ`.
    pub fn majority() -> Self {
        BoolFn::from_raw(3, 0b1110_1000)
    }
    /// Ternary parity `x + y + z`.
    pub fn xor3() -> Self {
        BoolFn::from_raw(3, 0b1001_0110)
    }
    /// `x ∨ (y ∧ z)`.
    pub fn or_and() -> Self {
        BoolFn::from_tuple_fn(3, |a| a[0] || (a[1] && a[2])).unwrap()
    }
    /// `x ∧ (y ∨ z)`.
    pub fn and_or() -> Self {
        BoolFn::from_tuple_fn(3, |a| a[0] && (a[1] || a[2])).unwrap()
    }
    /// Discriminator: `t(x,y,z) = z` if `x = y`, else `x`.
    pub fn discriminator() -> Self {
        BoolFn::from_tuple_fn(3, |a| if a[0] == a[1] { a[2] } else { a[0] }).unwrap()
    }
    /// `th_k^n`: 1 iff at least `k` of the `n` arguments are 1.
    pub fn threshold(n: usize, k: usize) -> Result<Self> {
        BoolFn::from_index_fn(n, |idx| idx.count_ones() as usize >= k)
    }

    /// Symmetric function `λ_c`: `f(a) = c[w(a)]` with arity `len(c) - 1`.
    /// A single-entry vector gives the unary constant.
    pub fn lambda(c: &[bool]) -> Result<Self> {
        match c.len() {
            0 => Err(Error::Shape("empty λ-vector".into())),
            1 => BoolFn::constant(1, c[0]),
            len => BoolFn::from_index_fn(len - 1, |idx| c[idx.count_ones() as usize]),
        }
    }

    /// `λ_c` from a bit string such as `"0101"`.
    pub fn lambda_str(bits: &str) -> Result<Self> {
        BoolFn::lambda(&parse_bits(bits)?)
    }

    /// The λ-vector if the function is symmetric.
    pub fn lambda_vector(&self) -> Option<Vec<bool>> {
        let n = self.arity();
        let mut c: Vec<Option<bool>> = vec![None; n + 1];
        for idx in 0..self.len() {
            let w = idx.count_ones() as usize;
            let v = self.at(idx);
            match c[w] {
                None => c[w] = Some(v),
                Some(u) if u != v => return None,
                _ => {}
            }
        }
        Some(c.into_iter().map(|v| v.unwrap()).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.lambda_vector().is_some()
    }

    // ---- composition ----

    /// `f(a) = g(a_σ(1), …, a_σ(n))`.
    pub fn minor(&self, sigma: &ArgMap) -> Result<Self> {
        if sigma.source_arity() != self.arity() {
            return Err(Error::Shape(format!(
                "argument map of source arity {} applied to a function of arity {}",
                sigma.source_arity(),
                self.arity
            )));
        }
        let m = sigma.target_arity();
        let gs: Vec<BoolFn> = sigma
            .map()
            .iter()
            .map(|&j| BoolFn::from_raw(m, VAR_MASK[m - 1 - j]))
            .collect();
        self.compose(&gs)
    }

    /// `h(a) = f(g1(a), …, gk(a))`.
    pub fn compose(&self, gs: &[BoolFn]) -> Result<Self> {
        if gs.len() != self.arity() {
            return Err(Error::Shape(format!(
                "{} inner functions given to a function of arity {}",
                gs.len(),
                self.arity
            )));
        }
        let m = gs[0].arity();
        if gs.iter().any(|g| g.arity() != m) {
            return Err(Error::Shape(
                "inner functions have different arities".into(),
            ));
        }
        Ok(BoolFn::from_raw(
            m,
            compose_tables(self, gs.iter().map(|g| g.table), m),
        ))
    }

    /// `(f ∗ g)(a1,…,a_{m+n-1}) = f(g(a1,…,an), a_{n+1}, …)`.
    pub fn star(&self, g: &BoolFn) -> Result<Self> {
        let (m, n) = (self.arity(), g.arity());
        let r = m + n - 1;
        check_arity(r)?;
        let mut inner = Vec::with_capacity(m);
        inner.push(g.minor(&ArgMap::new((0..n).collect(), r)?)?);
        for j in n..r {
            inner.push(BoolFn::projection(r, j)?);
        }
        self.compose(&inner)
    }

    /// Outer negation `¬∘f`.
    #[inline]
    pub fn negate(&self) -> Self {
        BoolFn::from_raw(self.arity(), !self.table)
    }

    /// Table of `a ↦ f(ā)`.
    #[inline]
    pub fn reflect(&self) -> Self {
        let n = self.len();
        BoolFn::from_raw(self.arity(), self.table.reverse_bits() >> (64 - n))
    }

    /// `f^d(a) = ¬f(ā)`.
    #[inline]
    pub fn dual(&self) -> Self {
        self.reflect().negate()
    }

    /// Whether argument `i` (zero-based) is essential.
    pub fn is_essential(&self, i: usize) -> bool {
        let p = self.arity() - 1 - i;
        let hi = self.table & VAR_MASK[p];
        let lo = self.table & !VAR_MASK[p] & self.mask();
        (hi >> (1 << p)) != lo
    }

    pub fn essential_arity(&self) -> usize {
        (0..self.arity()).filter(|&i| self.is_essential(i)).count()
    }

    /// Zero-based indices of the essential arguments.
    pub fn essential_args(&self) -> Vec<usize> {
        (0..self.arity())
            .filter(|&i| self.is_essential(i))
            .collect()
    }

    #[inline]
    pub fn is_constant(&self) -> bool {
        self.table == 0 || self.table == self.mask()
    }

    /// Depth map and alternation number.
    pub fn alternation(&self) -> Alternation {
        let mut depth = vec![0u8; self.len()];
        for idx in 1..self.len() {
            let v = self.at(idx);
            let mut best = 0u8;
            let mut rest = idx;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let low = idx ^ bit;
                let d = depth[low] + u8::from(self.at(low) != v);
                best = best.max(d);
            }
            depth[idx] = best;
        }
        Alternation {
            alt: depth[self.len() - 1] as usize,
            depth,
        }
    }

    /// `Alt(f)`.
    pub fn alt(&self) -> usize {
        self.alternation().alt
    }

    // ---- predicates ----

    pub fn is_monotone(&self) -> bool {
        (0..self.arity()).all(|p| {
            let hi = (self.table & VAR_MASK[p]) >> (1 << p);
            let lo = self.table & !VAR_MASK[p] & self.mask();
            lo & !hi == 0
        })
    }

    pub fn is_self_dual(&self) -> bool {
        self.table == self.reflect().negate().table
    }

    pub fn is_reflexive(&self) -> bool {
        self.table == self.reflect().table
    }

    /// `f(a) ∨ f(ā) = 1` for all `a`.
    pub fn is_smaj(&self) -> bool {
        self.table | self.reflect().table == self.mask()
    }

    /// `f(a) ∧ f(ā) = 0` for all `a`.
    pub fn is_smin(&self) -> bool {
        self.table & self.reflect().table == 0
    }

    /// Algebraic normal form coefficients (bit `idx` = monomial on the set bits of `idx`).
    pub fn anf(&self) -> u64 {
        let mut t = self.table;
        for (p, &var) in VAR_MASK.iter().enumerate().take(self.arity()) {
            t ^= (t & !var) << (1 << p);
        }
        t & self.mask()
    }

    pub fn is_linear(&self) -> bool {
        let anf = self.anf();
        (0..self.len()).all(|idx| idx.count_ones() < 2 || (anf >> idx) & 1 == 0)
    }

    /// `f⁻¹(a)` is `a`-separating of the given rank.
    pub fn is_separating(&self, a: bool, rank: Rank) -> bool {
        let n = self.arity();
        let all = (1usize << n) - 1;
        // For each u ∈ f⁻¹(a): the coordinates where u differs from a.
        // A family is a-separating iff these sets do not cover all coordinates.
        let mut masks: Vec<usize> = (0..self.len())
            .filter(|&idx| self.at(idx) == a)
            .map(|idx| if a { !idx & all } else { idx })
            .collect();
        masks.sort_unstable();
        masks.dedup();
        match rank {
            Rank::Inf => masks.iter().fold(0, |acc, m| acc | m) != all,
            Rank::Fin(m) => !covers_with(&masks, all, 0, m as usize),
        }
    }

    /// Range² signature.
    pub fn range2(&self) -> Range2 {
        let r = self.reflect().table;
        let t = self.table;
        let mask = self.mask();
        let mut set = R2Set::EMPTY;
        if !t & !r & mask != 0 {
            set = set.with(R2Set::ZERO);
        }
        if t & r != 0 {
            set = set.with(R2Set::ONE);
        }
        if (t ^ r) & mask != 0 {
            set = set.with(R2Set::BOTH);
        }
        Range2 {
            r: set,
            a: self.at_zero(),
            b: self.at_one(),
        }
    }

    /// Every function of the given arity, in table order.
    pub fn all_of_arity(n: usize) -> impl Iterator<Item = BoolFn> {
        assert!((1..=5).contains(&n), "exhaustive iteration beyond arity 5");
        (0..(1u64 << (1 << n))).map(move |t| BoolFn::from_raw(n, t))
    }

    /// Every symmetric function of the given arity, by λ-vector.
    pub fn symmetric_of_arity(n: usize) -> impl Iterator<Item = BoolFn> {
        (0..(1u32 << (n + 1))).map(move |code| {
            let c: Vec<bool> = (0..=n).map(|i| (code >> i) & 1 == 1).collect();
            BoolFn::lambda(&c).unwrap()
        })
    }

    /// `"n:HEX"` text form.
    pub fn to_hex(&self) -> String {
        format!("{}:{:X}", self.arity, self.table)
    }

    /// Bit string of the table, tuple 0 first.
    pub fn table_bits(&self) -> String {
        (0..self.len())
            .map(|i| if self.at(i) { '1' } else { '0' })
            .collect()
    }

    /// λ-vector as a bit string, if symmetric.
    pub fn lambda_bits(&self) -> Option<String> {
        self.lambda_vector()
            .map(|c| c.iter().map(|&b| if b { '1' } else { '0' }).collect())
    }

    /// Compact human-readable form: `λ0101` for symmetric functions, `n:HEX` otherwise.
    pub fn describe(&self) -> String {
        match self.lambda_bits() {
            Some(bits) => format!("λ{bits}"),
            None => self.to_hex(),
        }
    }
}

fn covers_with(masks: &[usize], all: usize, acc: usize, budget: usize) -> bool {
    if acc == all {
        return true;
    }
    if budget == 0 {
        return false;
    }
    masks
        .iter()
        .enumerate()
        .any(|(i, &m)| m & !acc != 0 && covers_with(&masks[i + 1..], all, acc | m, budget - 1))
}

/// Table of `f(g1, …, gk)` where the inner tables have arity `m`.
pub(crate) fn compose_tables(f: &BoolFn, gs: impl Iterator<Item = u64>, m: usize) -> u64 {
    let k = f.arity();
    let mask = full_mask(m);
    let gs: Vec<u64> = gs.collect();
    let mut out = 0u64;
    for row in 0..(1usize << k) {
        if !f.at(row) {
            continue;
        }
        let mut term = mask;
        for (j, &g) in gs.iter().enumerate() {
            term &= if (row >> (k - 1 - j)) & 1 == 1 { g } else { !g };
        }
        out |= term;
    }
    out & mask
}

/// Index of a tuple under the big-endian convention.
pub fn tuple_index(input: &[bool]) -> usize {
    input.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
}

/// Parses a `0`/`1` string.
pub fn parse_bits(bits: &str) -> Result<Vec<bool>> {
    bits.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Parse(format!("invalid bit `{other}` in `{bits}`"))),
        })
        .collect()
}

/// Depth map `d_f` over tuple indices and `Alt(f) = d_f(1…1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alternation {
    pub alt: usize,
    pub depth: Vec<u8>,
}

/// Rank of a separating family: finite `m` or unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rank {
    Fin(u32),
    Inf,
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Fin(m) => write!(f, "{m}"),
            Rank::Inf => write!(f, "inf"),
        }
    }
}

/// Subset of `{{0}, {1}, {0,1}}`, as three bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct R2Set(u8);

impl R2Set {
    pub const EMPTY: R2Set = R2Set(0);
    pub const ZERO: R2Set = R2Set(1);
    pub const ONE: R2Set = R2Set(2);
    pub const BOTH: R2Set = R2Set(4);

    pub fn from_bits(bits: u8) -> Result<Self> {
        if bits > 7 {
            return Err(Error::Shape(format!("range² set bits {bits} out of range")));
        }
        Ok(R2Set(bits))
    }
    pub fn bits(self) -> u8 {
        self.0
    }
    pub fn with(self, other: R2Set) -> R2Set {
        R2Set(self.0 | other.0)
    }
    pub fn contains(self, other: R2Set) -> bool {
        self.0 & other.0 == other.0
    }
    pub fn is_subset(self, other: R2Set) -> bool {
        other.contains(self)
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Text form used in class names: `0`, `1`, `01`, joined by commas.
    pub fn name(self) -> String {
        let mut parts = Vec::new();
        if self.contains(R2Set::ZERO) {
            parts.push("0");
        }
        if self.contains(R2Set::ONE) {
            parts.push("1");
        }
        if self.contains(R2Set::BOTH) {
            parts.push("01");
        }
        parts.join(",")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut set = R2Set::EMPTY;
        for part in s.split(',') {
            set = set.with(match part.trim() {
                "0" => R2Set::ZERO,
                "1" => R2Set::ONE,
                "01" | "10" => R2Set::BOTH,
                other => return Err(Error::Parse(format!("bad range² element `{other}`"))),
            });
        }
        Ok(set)
    }
}

/// Range² signature `(R, f(0), f(1))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Range2 {
    pub r: R2Set,
    pub a: bool,
    pub b: bool,
}

impl fmt::Display for Range2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F^{{{}}}_{{{}{}}}",
            self.r.name(),
            u8::from(self.a),
            u8::from(self.b)
        )
    }
}

impl fmt::Display for BoolFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for BoolFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolFn({})", self.describe())
    }
}

impl FromStr for BoolFn {
    type Err = Error;

    /// Accepts `n:HEX`, a λ-vector prefixed with `λ` or `L:`, or a function name.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(bits) = s.strip_prefix('λ').or_else(|| s.strip_prefix("L:")) {
            return BoolFn::lambda_str(bits);
        }
        if let Some((n, hex)) = s.split_once(':') {
            let n: usize = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad arity in truth table `{s}`")))?;
            check_arity(n)?;
            let table = u64::from_str_radix(hex, 16)
                .map_err(|_| Error::Parse(format!("bad hex table in `{s}`")))?;
            return BoolFn::new(n, table);
        }
        named_function(s).ok_or_else(|| Error::Parse(format!("cannot read `{s}` as a function")))
    }
}

/// Functions known by name in text input.
pub fn named_function(name: &str) -> Option<BoolFn> {
    Some(match name {
        "id" => BoolFn::identity(),
        "not" => BoolFn::not(),
        "0" => BoolFn::from_raw(1, 0),
        "1" => BoolFn::from_raw(1, 0b11),
        "and" => BoolFn::and(),
        "or" => BoolFn::or(),
        "xor" => BoolFn::xor(),
        "implies" => BoolFn::implies(),
        "iff" => BoolFn::iff(),
        "maj" => BoolFn::majority(),
        "xor3" => BoolFn::xor3(),
        "orand" => BoolFn::or_and(),
        "andor" => BoolFn::and_or(),
        "disc" => BoolFn::discriminator(),
        _ => return None,
    })
}

impl Serialize for BoolFn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for BoolFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
