//! Finite labeled posets, label-preserving homomorphisms, and alternating
//! chains.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::boolfn::BoolFn;
use crate::error::{Error, Result};

/// Largest poset handled (reachability is stored as `u64` rows).
pub const MAX_POSET: usize = 64;

/// A finite partial order on `0..n`, stored as cover relation plus reachability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    /// `up[x]` has bit `y` set iff `x ≤ y`.
    up: Vec<u64>,
}

impl Poset {
    /// Builds the order generated by `relations` (pairs `x < y`); the pairs
    /// need not be covers. Cycles are rejected.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_POSET {
            return Err(Error::Resource(format!(
                "poset size {n} outside 1..={MAX_POSET}"
            )));
        }
        let mut up: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &(x, y) in relations {
            if x >= n || y >= n {
                return Err(Error::Shape(format!("relation ({x},{y}) outside 0..{n}")));
            }
            up[x] |= 1 << y;
        }
        // transitive closure
        loop {
            let mut changed = false;
            for x in 0..n {
                let mut acc = up[x];
                let mut rest = up[x];
                while rest != 0 {
                    let y = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    acc |= up[y];
                }
                if acc != up[x] {
                    up[x] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && (up[x] >> y) & 1 == 1 && (up[y] >> x) & 1 == 1 {
                    return Err(Error::Contract(format!(
                        "relations are not antisymmetric: {x} and {y} lie on a cycle"
                    )));
                }
            }
        }
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && (up[x] >> y) & 1 == 1 {
                    // y covers x iff no z strictly between
                    let between = up[x] & !(1 << x) & !(1 << y);
                    let blocked = (0..n).any(|z| (between >> z) & 1 == 1 && (up[z] >> y) & 1 == 1);
                    if !blocked {
                        covers.push((x, y));
                    }
                }
            }
        }
        Ok(Poset { n, covers, up })
    }

    /// An antichain of `n` elements.
    pub fn antichain(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        (self.up[x] >> y) & 1 == 1
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Bitmask of `{y : y ≤ x}`.
    pub fn down_mask(&self, x: usize) -> u64 {
        (0..self.n)
            .filter(|&y| self.leq(y, x))
            .fold(0, |m, y| m | (1 << y))
    }

    /// Elements in a linear extension (smaller elements first, ties by index).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| (self.down_mask(x).count_ones(), x));
        order
    }

    /// All downsets as bitmasks, in increasing numeric order.
    pub fn downset_masks(&self) -> Result<Vec<u64>> {
        if self.n > 24 {
            return Err(Error::Resource(format!(
                "downset enumeration limited to 24 elements, poset has {}",
                self.n
            )));
        }
        let order = self.linear_extension();
        let below: Vec<u64> = (0..self.n).map(|x| self.down_mask(x) & !(1 << x)).collect();
        let mut out = Vec::new();
        fn rec(i: usize, order: &[usize], below: &[u64], acc: u64, out: &mut Vec<u64>) {
            if i == order.len() {
                out.push(acc);
                return;
            }
            let x = order[i];
            rec(i + 1, order, below, acc, out);
            if below[x] & !acc == 0 {
                rec(i + 1, order, below, acc | (1 << x), out);
            }
        }
        rec(0, &order, &below, 0, &mut out);
        out.sort_unstable();
        Ok(out)
    }
}

/// All downsets of `p`, each as a sorted element list.
pub fn downsets(p: &Poset) -> Result<Vec<Vec<usize>>> {
    Ok(p.downset_masks()?
        .into_iter()
        .map(|m| (0..p.len()).filter(|&x| (m >> x) & 1 == 1).collect())
        .collect())
}

/// Which endpoints a homomorphism must preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HomMode {
    Free,
    BotPreserving,
    TopPreserving,
    BotTopPreserving,
}

impl HomMode {
    pub const ALL: [HomMode; 4] = [
        HomMode::Free,
        HomMode::BotPreserving,
        HomMode::TopPreserving,
        HomMode::BotTopPreserving,
    ];

    fn bot(self) -> bool {
        matches!(self, HomMode::BotPreserving | HomMode::BotTopPreserving)
    }

    fn top(self) -> bool {
        matches!(self, HomMode::TopPreserving | HomMode::BotTopPreserving)
    }
}

/// A poset whose elements carry labels in `0..k`, with optional `⊥`/`⊤`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    pub poset: Poset,
    pub labels: Vec<u8>,
    pub k: u8,
    pub bottom: Option<usize>,
    pub top: Option<usize>,
}

impl LabeledPoset {
    pub fn new(
        poset: Poset,
        labels: Vec<u8>,
        k: u8,
        bottom: Option<usize>,
        top: Option<usize>,
    ) -> Result<Self> {
        if labels.len() != poset.len() {
            return Err(Error::Shape(format!(
                "{} labels for {} elements",
                labels.len(),
                poset.len()
            )));
        }
        if let Some(&bad) = labels.iter().find(|&&l| l >= k) {
            return Err(Error::Shape(format!("label {bad} outside 0..{k}")));
        }
        if let Some(b) = bottom {
            if b >= poset.len() || (0..poset.len()).any(|x| !poset.leq(b, x)) {
                return Err(Error::Contract(format!("element {b} is not a bottom")));
            }
        }
        if let Some(t) = top {
            if t >= poset.len() || (0..poset.len()).any(|x| !poset.leq(x, t)) {
                return Err(Error::Contract(format!("element {t} is not a top")));
            }
        }
        Ok(LabeledPoset {
            poset,
            labels,
            k,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// The alternating 2-chain `C^k_a`: `k+1` elements labeled `a, ¬a, a, …`.
    pub fn chain(len: usize, a: bool) -> Result<Self> {
        let n = len + 1;
        let rel: Vec<(usize, usize)> = (0..len).map(|i| (i, i + 1)).collect();
        let labels = (0..n).map(|i| (u8::from(a) + i as u8) % 2).collect();
        LabeledPoset::new(Poset::new(n, &rel)?, labels, 2, Some(0), Some(len))
    }

    /// Labels of the given elements as a string such as `"0101"`.
    pub fn label_string(&self, elems: &[usize]) -> String {
        elems
            .iter()
            .map(|&x| char::from(b'0' + self.labels[x]))
            .collect()
    }

    /// Depth map: `d(x)` is the length of the longest alternating chain ending at `x`.
    pub fn depth(&self) -> Vec<usize> {
        let order = self.poset.linear_extension();
        let mut d = vec![0usize; self.len()];
        for (i, &x) in order.iter().enumerate() {
            for &y in &order[..i] {
                if self.poset.lt(y, x) {
                    d[x] = d[x].max(d[y] + usize::from(self.labels[y] != self.labels[x]));
                }
            }
        }
        d
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "elements": (0..self.len()).collect::<Vec<_>>(),
            "covers": self.poset.covers(),
            "labels": self.labels,
        });
        if let Some(b) = self.bottom {
            v["bottom"] = b.into();
        }
        if let Some(t) = self.top {
            v["top"] = t.into();
        }
        v
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Repr {
            elements: Vec<usize>,
            covers: Vec<(usize, usize)>,
            labels: Vec<u8>,
            bottom: Option<usize>,
            top: Option<usize>,
        }
        let r: Repr = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("poset JSON: {e}")))?;
        let k = r.labels.iter().copied().max().map_or(1, |m| m + 1).max(2);
        let poset = Poset::new(r.elements.len(), &r.covers)?;
        LabeledPoset::new(poset, r.labels, k, r.bottom, r.top)
    }

    /// Graphviz rendering; `names` overrides the numeric element names.
    pub fn to_dot(&self, names: Option<&[String]>) -> String {
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n");
        for x in 0..self.len() {
            let name = names.map_or_else(|| x.to_string(), |n| n[x].clone());
            let _ = writeln!(
                s,
                "  n{x} [label=\"{}:{}\"];",
                name.replace('"', "'"),
                self.labels[x]
            );
        }
        for &(a, b) in self.poset.covers() {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

/// The labeled `n`-cube of `f` with bottom `0…0` and top `1…1`.
pub fn fn_poset(f: &BoolFn) -> Result<LabeledPoset> {
    let size = f.len();
    let mut rel = Vec::new();
    for x in 0..size {
        for b in 0..f.arity() {
            if x & (1 << b) == 0 {
                rel.push((x, x | (1 << b)));
            }
        }
    }
    let labels = (0..size).map(|x| u8::from(f.at(x))).collect();
    LabeledPoset::new(Poset::new(size, &rel)?, labels, 2, Some(0), Some(size - 1))
}

/// Searches for an order- and label-preserving map `P → Q`.
pub fn hom_exists(p: &LabeledPoset, q: &LabeledPoset, mode: HomMode) -> Result<Option<Vec<usize>>> {
    if mode.bot() && (p.bottom.is_none() || q.bottom.is_none()) {
        return Err(Error::Contract(
            "⊥-preserving search needs ⊥ in both posets".into(),
        ));
    }
    if mode.top() && (p.top.is_none() || q.top.is_none()) {
        return Err(Error::Contract(
            "⊤-preserving search needs ⊤ in both posets".into(),
        ));
    }
    let order = p.poset.linear_extension();
    let mut domains: Vec<Vec<usize>> = (0..p.len())
        .map(|x| {
            (0..q.len())
                .filter(|&y| q.labels[y] == p.labels[x])
                .collect()
        })
        .collect();
    if mode.bot() {
        let (pb, qb) = (p.bottom.unwrap(), q.bottom.unwrap());
        domains[pb].retain(|&y| y == qb);
    }
    if mode.top() {
        let (pt, qt) = (p.top.unwrap(), q.top.unwrap());
        domains[pt].retain(|&y| y == qt);
    }
    let mut assign = vec![usize::MAX; p.len()];

    fn rec(
        i: usize,
        order: &[usize],
        p: &LabeledPoset,
        q: &LabeledPoset,
        domains: &[Vec<usize>],
        assign: &mut Vec<usize>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let x = order[i];
        'cand: for &y in &domains[x] {
            for &z in &order[..i] {
                let hz = assign[z];
                if p.poset.leq(z, x) && !q.poset.leq(hz, y) {
                    continue 'cand;
                }
                if p.poset.leq(x, z) && !q.poset.leq(y, hz) {
                    continue 'cand;
                }
            }
            // forward check: every later element must keep a candidate
            assign[x] = y;
            let feasible = order[i + 1..].iter().all(|&w| {
                domains[w].iter().any(|&c| {
                    (!p.poset.leq(x, w) || q.poset.leq(y, c))
                        && (!p.poset.leq(w, x) || q.poset.leq(c, y))
                })
            });
            if feasible && rec(i + 1, order, p, q, domains, assign) {
                return true;
            }
            assign[x] = usize::MAX;
        }
        false
    }

    if rec(0, &order, p, q, &domains, &mut assign) {
        Ok(Some(assign))
    } else {
        Ok(None)
    }
}

/// Whether `h` is a homomorphism `P → Q` honoring `mode`.
pub fn is_homomorphism(p: &LabeledPoset, q: &LabeledPoset, h: &[usize], mode: HomMode) -> bool {
    h.len() == p.len()
        && (0..p.len()).all(|x| h[x] < q.len() && q.labels[h[x]] == p.labels[x])
        && (0..p.len()).all(|x| (0..p.len()).all(|y| !p.poset.leq(x, y) || q.poset.leq(h[x], h[y])))
        && (!mode.bot() || h[p.bottom.unwrap()] == q.bottom.unwrap())
        && (!mode.top() || h[p.top.unwrap()] == q.top.unwrap())
}

/// Closed-form existence of a homomorphism between alternating 2-chains
/// `C^k_a → C^l_b`.
///
/// The one-element chain `C^0_a` has `⊥ = ⊤`, so it admits a `⊥⊤`-map only
/// onto another one-element chain.
pub fn chain_hom_rule(k: usize, a: bool, l: usize, b: bool, mode: HomMode) -> bool {
    let parity = |x: bool, n: usize| (u8::from(x) as usize + n) % 2;
    match mode {
        HomMode::Free => k < l || (k == l && a == b),
        HomMode::BotPreserving => k <= l && a == b,
        HomMode::TopPreserving => k <= l && parity(a, k) == parity(b, l),
        HomMode::BotTopPreserving => k <= l && a == b && k % 2 == l % 2 && (k > 0 || l == 0),
    }
}

/// A longest alternating chain, starting at `⊥` when one is designated;
/// ties broken by the lexicographically smallest element sequence.
pub fn longest_alternating_chain(p: &LabeledPoset) -> Vec<usize> {
    let n = p.len();
    let order = p.poset.linear_extension();
    // g[x]: longest alternating chain starting at x and going up
    let mut g = vec![0usize; n];
    for &x in order.iter().rev() {
        for y in 0..n {
            if p.poset.lt(x, y) && p.labels[x] != p.labels[y] {
                g[x] = g[x].max(g[y] + 1);
            }
        }
    }
    let start = match p.bottom {
        Some(b) => b,
        None => (0..n)
            .max_by_key(|&x| (g[x], std::cmp::Reverse(x)))
            .unwrap(),
    };
    let mut chain = vec![start];
    let mut cur = start;
    while g[cur] > 0 {
        let next = (0..n)
            .find(|&y| p.poset.lt(cur, y) && p.labels[cur] != p.labels[y] && g[y] + 1 == g[cur])
            .expect("a successor realizing the chain length");
        chain.push(next);
        cur = next;
    }
    chain
}

/// Collapses a 2-labeled poset with `⊥` onto the chain `C^k_a`, where `k` is
/// the length of its longest alternating chain and `a = label(⊥)`.
/// Returns the chain and the homomorphism `h(x) = a_{d(x)}`.
pub fn collapse_to_chain(p: &LabeledPoset) -> Result<(LabeledPoset, Vec<usize>)> {
    if p.k > 2 || p.labels.iter().any(|&l| l > 1) {
        return Err(Error::Contract("collapse needs a 2-labeled poset".into()));
    }
    let Some(b) = p.bottom else {
        return Err(Error::Contract("collapse needs a designated ⊥".into()));
    };
    let d = p.depth();
    let k = d.iter().copied().max().unwrap_or(0);
    let chain = LabeledPoset::chain(k, p.labels[b] == 1)?;
    let h = d;
    if !is_homomorphism(p, &chain, &h, HomMode::BotPreserving) {
        return Err(Error::Contract(
            "depth map failed to be a homomorphism".into(),
        ));
    }
    Ok((chain, h))
}

/// Labels reachable along a chain, used for diagnostics.
pub fn chain_labels(p: &LabeledPoset, chain: &[usize]) -> BTreeSet<u8> {
    chain.iter().map(|&x| p.labels[x]).collect()
}
