//! Enumeration of compositions `g(h1, …, hk)` with inner functions drawn from
//! a fixed list.
//!
//! Inner functions are given as tables over `P` points (all `2^n` tuples for
//! an `n`-ary set, or the `n+1` weight classes for symmetric functions).
//! After the first `j` arguments are chosen, all that matters at point `p` is
//! the residual function `g(h1(p), …, hj(p), ·)`, a chunk of `2^(k-j)` bits
//! of `g`'s table. Tuples with equal residuals at every point are merged, so
//! the search visits distinct states instead of all `|inner|^k` tuples.

use std::collections::{HashMap, HashSet};
use std::hash::{BuildHasherDefault, Hasher};

use crate::boolfn::BoolFn;
use crate::error::{Error, Result};

/// Multiplicative hasher for the integer keys used by the search layers.
#[derive(Default, Clone, Copy)]
pub(crate) struct MixHasher(u64);

impl Hasher for MixHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(5) ^ u64::from(b)).wrapping_mul(0x517c_c1b7_2722_0a95);
        }
    }

    fn write_u64(&mut self, i: u64) {
        let x = (self.0 ^ i).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        self.0 = x ^ (x >> 29);
    }

    fn write_u128(&mut self, i: u128) {
        self.write_u64(i as u64);
        self.write_u64((i >> 64) as u64);
    }
}

pub(crate) type FastMap<K, V> = HashMap<K, V, BuildHasherDefault<MixHasher>>;
pub(crate) type FastSet<K> = HashSet<K, BuildHasherDefault<MixHasher>>;

fn chunk_mask(w: usize) -> u128 {
    if w >= 128 {
        u128::MAX
    } else {
        (1u128 << w) - 1
    }
}

#[derive(Default)]
struct Layer {
    states: Vec<u128>,
    /// `(parent state index, inner index)` for witness reconstruction.
    parent: Vec<(u32, u32)>,
}

impl Layer {
    fn push(&mut self, index: &mut FastMap<u128, u32>, s: u128, parent: (u32, u32)) {
        if let std::collections::hash_map::Entry::Vacant(e) = index.entry(s) {
            e.insert(self.states.len() as u32);
            self.states.push(s);
            self.parent.push(parent);
        }
    }
}

/// Splits a state of 2-bit residuals into the points where the residual
/// maps 1 to 1 and the points where it maps 0 to 1.
fn split_unary(s: u128, points: usize) -> (u64, u64) {
    let (mut on_one, mut on_zero) = (0u64, 0u64);
    for p in 0..points {
        on_zero |= (((s >> (2 * p)) & 1) as u64) << p;
        on_one |= (((s >> (2 * p + 1)) & 1) as u64) << p;
    }
    (on_one, on_zero)
}

/// Walks the results of `g(h1, …, hk)` with every `hi` from `inner`.
///
/// Tuples are merged once their residual states agree, except for the last
/// argument, which is applied bit-parallel; `visit` may therefore see the
/// same table more than once. Returning `true` from `visit` stops the
/// search and yields that result with the indices of a witnessing tuple.
pub fn compose_search(
    g: &BoolFn,
    inner: &[u64],
    points: usize,
    mut visit: impl FnMut(u64) -> bool,
) -> Result<Option<(u64, Vec<usize>)>> {
    let k = g.arity();
    if points == 0 || points > 64 {
        return Err(Error::Shape(format!("{points} evaluation points")));
    }
    if points << (k - 1) > 128 {
        return Err(Error::Resource(format!(
            "composition search with an outer function of arity {k} over {points} points"
        )));
    }
    if inner.is_empty() {
        return Ok(None);
    }
    let pmask: u64 = if points == 64 {
        u64::MAX
    } else {
        (1u64 << points) - 1
    };
    let table = g.table() as u128;

    // layer j holds the residuals after the first j arguments, j = 1..k-1
    let mut layers: Vec<Layer> = Vec::with_capacity(k.saturating_sub(1));
    for j in 1..k {
        let w = 1usize << (k - j);
        let mut index = FastMap::default();
        let mut next = Layer::default();
        match layers.last() {
            None => {
                for (hi, &h) in inner.iter().enumerate() {
                    let mut s = 0u128;
                    for p in 0..points {
                        let b = ((h >> p) & 1) as usize;
                        s |= ((table >> (b * w)) & chunk_mask(w)) << (p * w);
                    }
                    next.push(&mut index, s, (u32::MAX, hi as u32));
                }
            }
            Some(prev) => {
                for (si, &s) in prev.states.iter().enumerate() {
                    for (hi, &h) in inner.iter().enumerate() {
                        let mut t = 0u128;
                        for p in 0..points {
                            let b = ((h >> p) & 1) as usize;
                            t |= ((s >> (2 * p * w + b * w)) & chunk_mask(w)) << (p * w);
                        }
                        next.push(&mut index, t, (si as u32, hi as u32));
                    }
                }
            }
        }
        layers.push(next);
    }

    let finals: Vec<(u64, u64)> = match layers.last() {
        None => {
            let on = |b: bool| if b { pmask } else { 0 };
            vec![(on(g.at(1)), on(g.at(0)))]
        }
        Some(last) => last
            .states
            .iter()
            .map(|&s| split_unary(s, points))
            .collect(),
    };
    for (si, &(on_one, on_zero)) in finals.iter().enumerate() {
        for (hi, &h) in inner.iter().enumerate() {
            let t = ((h & on_one) | (!h & on_zero)) & pmask;
            if visit(t) {
                let mut path = vec![hi];
                let mut cur = si;
                for layer in layers.iter().rev() {
                    let (p, h) = layer.parent[cur];
                    path.push(h as usize);
                    cur = p as usize;
                }
                path.reverse();
                return Ok(Some((t, path)));
            }
        }
    }
    Ok(None)
}

/// All distinct results of `g(h1, …, hk)` over `inner`, in increasing order.
pub fn compose_images(g: &BoolFn, inner: &[u64], points: usize) -> Result<Vec<u64>> {
    if points <= 20 {
        let mut seen = vec![0u64; ((1usize << points) / 64).max(1)];
        // stop once every table of this width has been produced
        let all = 1u64 << points;
        let mut count = 0u64;
        compose_search(g, inner, points, |t| {
            let (w, b) = ((t / 64) as usize, 1u64 << (t % 64));
            if seen[w] & b == 0 {
                seen[w] |= b;
                count += 1;
            }
            count == all
        })?;
        let mut out = Vec::new();
        for (w, &word) in seen.iter().enumerate() {
            let mut rest = word;
            while rest != 0 {
                out.push(w as u64 * 64 + rest.trailing_zeros() as u64);
                rest &= rest - 1;
            }
        }
        Ok(out)
    } else {
        let mut seen = FastSet::default();
        compose_search(g, inner, points, |t| {
            seen.insert(t);
            false
        })?;
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }
}

/// Finds `h1, …, hk` from `inner` with `g(h1, …, hk) = target`.
pub fn find_composition(
    g: &BoolFn,
    inner: &[u64],
    points: usize,
    target: u64,
) -> Result<Option<Vec<usize>>> {
    Ok(compose_search(g, inner, points, |t| t == target)?.map(|(_, w)| w))
}
