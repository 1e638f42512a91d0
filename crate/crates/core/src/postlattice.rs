//! Post's lattice of clones on `{0,1}`, encoded as data.
//!
//! Each [`CloneId`] has a membership predicate, a finite generating set and a
//! place in the stored Hasse diagram. The separating families `W_m`, `U_m`
//! and their variants are materialized for `m ∈ {2, 3, ∞}`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::boolfn::{BoolFn, Rank};
use crate::compose::compose_images;
use crate::error::{Error, Result};
use crate::fnset::FnSet;

/// A named clone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CloneId {
    Omega,
    T0,
    T1,
    Tc,
    M,
    M0,
    M1,
    Mc,
    S,
    Sc,
    SM,
    L,
    L0,
    L1,
    LS,
    Lc,
    V,
    V0,
    V1,
    Vc,
    Lambda,
    Lambda0,
    Lambda1,
    LambdaC,
    Omega1,
    IStar,
    I,
    I0,
    I1,
    Ic,
    /// 0-separating functions of rank `m`.
    W(Rank),
    TcW(Rank),
    MW(Rank),
    McW(Rank),
    /// 1-separating functions of rank `m`.
    U(Rank),
    TcU(Rank),
    MU(Rank),
    McU(Rank),
}

use CloneId::*;

const RANKS: [Rank; 3] = [Rank::Fin(2), Rank::Fin(3), Rank::Inf];

fn rank_suffix(r: Rank) -> String {
    match r {
        Rank::Fin(m) => m.to_string(),
        Rank::Inf => "inf".into(),
    }
}

/// Monotone functions that are ORs (`a = false`) or ANDs (`a = true`) of
/// variables, plus the absorbing constant.
fn is_join_like(f: &BoolFn, and: bool) -> bool {
    let n = f.arity();
    let g = if and { f.dual() } else { *f };
    if g.at_one() && g.is_constant() {
        return true;
    }
    let mut vars = 0usize;
    for i in 0..n {
        if g.at(1 << (n - 1 - i)) {
            vars |= 1 << (n - 1 - i);
        }
    }
    (0..g.len()).all(|idx| g.at(idx) == (idx & vars != 0))
}

impl CloneId {
    /// The 54 clones of the inventory, in a fixed order.
    pub fn inventory() -> &'static [CloneId] {
        static INV: OnceLock<Vec<CloneId>> = OnceLock::new();
        INV.get_or_init(|| {
            let mut v = vec![
                Omega, T0, T1, Tc, M, M0, M1, Mc, S, Sc, SM, L, L0, L1, LS, Lc, V, V0, V1, Vc,
                Lambda, Lambda0, Lambda1, LambdaC, Omega1, IStar, I, I0, I1, Ic,
            ];
            for ctor in [W, TcW, MW, McW, U, TcU, MU, McU] {
                for r in RANKS {
                    v.push(ctor(r));
                }
            }
            v
        })
    }

    /// ASCII alias.
    pub fn name(&self) -> String {
        match *self {
            Omega => "Omega".into(),
            T0 => "T0".into(),
            T1 => "T1".into(),
            Tc => "Tc".into(),
            M => "M".into(),
            M0 => "M0".into(),
            M1 => "M1".into(),
            Mc => "Mc".into(),
            S => "S".into(),
            Sc => "Sc".into(),
            SM => "SM".into(),
            L => "L".into(),
            L0 => "L0".into(),
            L1 => "L1".into(),
            LS => "LS".into(),
            Lc => "Lc".into(),
            V => "V".into(),
            V0 => "V0".into(),
            V1 => "V1".into(),
            Vc => "Vc".into(),
            Lambda => "Lambda".into(),
            Lambda0 => "Lambda0".into(),
            Lambda1 => "Lambda1".into(),
            LambdaC => "Lambdac".into(),
            Omega1 => "Omega1".into(),
            IStar => "Istar".into(),
            I => "I".into(),
            I0 => "I0".into(),
            I1 => "I1".into(),
            Ic => "Ic".into(),
            W(r) => format!("W{}", rank_suffix(r)),
            TcW(r) => format!("TcW{}", rank_suffix(r)),
            MW(r) => format!("MW{}", rank_suffix(r)),
            McW(r) => format!("McW{}", rank_suffix(r)),
            U(r) => format!("U{}", rank_suffix(r)),
            TcU(r) => format!("TcU{}", rank_suffix(r)),
            MU(r) => format!("MU{}", rank_suffix(r)),
            McU(r) => format!("McU{}", rank_suffix(r)),
        }
    }

    /// Looks up an inventory clone by alias.
    pub fn from_name(name: &str) -> Option<CloneId> {
        let alias = match name {
            "Om01" | "OI" => Some(Tc),
            "Om0x" | "OX" => Some(T0),
            "Omx1" | "XI" => Some(T1),
            "Lambdac" | "LambdaC" => Some(LambdaC),
            "IStar" => Some(IStar),
            _ => None,
        };
        alias.or_else(|| Self::inventory().iter().copied().find(|c| c.name() == name))
    }

    /// Like [`CloneId::from_name`] with an error listing the valid names.
    pub fn parse(name: &str) -> Result<CloneId> {
        Self::from_name(name).ok_or_else(|| Error::UnknownName {
            name: name.to_string(),
            valid: Self::inventory()
                .iter()
                .map(|c| c.name())
                .collect::<Vec<_>>()
                .join(", "),
        })
    }

    /// Short description of the defining property.
    pub fn description(&self) -> String {
        match *self {
            Omega => "all functions".into(),
            T0 => "0-preserving: f(0…0) = 0".into(),
            T1 => "1-preserving: f(1…1) = 1".into(),
            Tc => "constant-preserving: 0- and 1-preserving".into(),
            M => "monotone".into(),
            M0 => "monotone, 0-preserving".into(),
            M1 => "monotone, 1-preserving".into(),
            Mc => "monotone, constant-preserving".into(),
            S => "self-dual".into(),
            Sc => "self-dual, constant-preserving".into(),
            SM => "self-dual, monotone".into(),
            L => "linear".into(),
            L0 => "linear, 0-preserving".into(),
            L1 => "linear, 1-preserving".into(),
            LS => "linear, self-dual".into(),
            Lc => "linear, constant-preserving".into(),
            V => "disjunctions of variables and constants".into(),
            V0 => "disjunctions and the constant 0".into(),
            V1 => "disjunctions and the constant 1".into(),
            Vc => "disjunctions of variables".into(),
            Lambda => "conjunctions of variables and constants".into(),
            Lambda0 => "conjunctions and the constant 0".into(),
            Lambda1 => "conjunctions and the constant 1".into(),
            LambdaC => "conjunctions of variables".into(),
            Omega1 => "essentially at most unary".into(),
            IStar => "projections and negated projections".into(),
            I => "projections and constants".into(),
            I0 => "projections and the constant 0".into(),
            I1 => "projections and the constant 1".into(),
            Ic => "projections".into(),
            W(r) => format!("f⁻¹(0) is 0-separating of rank {r}"),
            TcW(r) => format!("{}, 0-preserving", W(r).description()),
            MW(r) => format!("{}, monotone", W(r).description()),
            McW(r) => format!("{}, monotone, 0-preserving", W(r).description()),
            U(r) => format!("f⁻¹(1) is 1-separating of rank {r}"),
            TcU(r) => format!("{}, 1-preserving", U(r).description()),
            MU(r) => format!("{}, monotone", U(r).description()),
            McU(r) => format!("{}, monotone, 1-preserving", U(r).description()),
        }
    }

    pub fn contains(&self, f: &BoolFn) -> bool {
        let t0 = || !f.at_zero();
        let t1 = || f.at_one();
        match *self {
            Omega => true,
            T0 => t0(),
            T1 => t1(),
            Tc => t0() && t1(),
            M => f.is_monotone(),
            M0 => t0() && f.is_monotone(),
            M1 => t1() && f.is_monotone(),
            Mc => t0() && t1() && f.is_monotone(),
            S => f.is_self_dual(),
            Sc => t0() && f.is_self_dual(),
            SM => f.is_self_dual() && f.is_monotone(),
            L => f.is_linear(),
            L0 => t0() && f.is_linear(),
            L1 => t1() && f.is_linear(),
            LS => f.is_self_dual() && f.is_linear(),
            Lc => t0() && t1() && f.is_linear(),
            V => is_join_like(f, false),
            V0 => t0() && is_join_like(f, false),
            V1 => t1() && is_join_like(f, false),
            Vc => t0() && t1() && is_join_like(f, false),
            Lambda => is_join_like(f, true),
            Lambda0 => t0() && is_join_like(f, true),
            Lambda1 => t1() && is_join_like(f, true),
            LambdaC => t0() && t1() && is_join_like(f, true),
            Omega1 => f.essential_arity() <= 1,
            IStar => f.essential_arity() <= 1 && f.is_self_dual(),
            I => f.essential_arity() <= 1 && f.is_monotone(),
            I0 => t0() && f.essential_arity() <= 1 && f.is_monotone(),
            I1 => t1() && f.essential_arity() <= 1 && f.is_monotone(),
            Ic => t0() && t1() && f.essential_arity() <= 1 && f.is_monotone(),
            W(r) => f.is_separating(false, r),
            TcW(r) => t0() && f.is_separating(false, r),
            MW(r) => f.is_monotone() && f.is_separating(false, r),
            McW(r) => t0() && f.is_monotone() && f.is_separating(false, r),
            U(r) => f.is_separating(true, r),
            TcU(r) => t1() && f.is_separating(true, r),
            MU(r) => f.is_monotone() && f.is_separating(true, r),
            McU(r) => t1() && f.is_monotone() && f.is_separating(true, r),
        }
    }

    /// A finite generating set (projections are implicit).
    pub fn generators(&self) -> Vec<BoolFn> {
        let zero = BoolFn::constant(1, false).unwrap();
        let one = BoolFn::constant(1, true).unwrap();
        let f = |s: &str| -> BoolFn { s.parse().unwrap() };
        let th = |n: usize, k: usize| BoolFn::threshold(n, k).unwrap();
        // x ∨ (y ∧ ¬z) and its dual x ∧ (y ∨ ¬z)
        let or_and_not = BoolFn::from_tuple_fn(3, |a| a[0] || (a[1] && !a[2])).unwrap();
        let and_or_not = or_and_not.dual();
        // x ∧ (y ↔ z)
        let and_iff = BoolFn::from_tuple_fn(3, |a| a[0] && (a[1] == a[2])).unwrap();
        let and_not = BoolFn::from_tuple_fn(2, |a| a[0] && !a[1]).unwrap();
        let rank = |r: Rank| match r {
            Rank::Fin(m) => Some(m as usize),
            Rank::Inf => None,
        };
        match *self {
            Omega => vec![BoolFn::and(), BoolFn::not()],
            T0 => vec![BoolFn::and(), BoolFn::xor()],
            T1 => vec![BoolFn::or(), BoolFn::iff()],
            Tc => vec![BoolFn::or(), and_iff],
            M => vec![BoolFn::and(), BoolFn::or(), zero, one],
            M0 => vec![BoolFn::and(), BoolFn::or(), zero],
            M1 => vec![BoolFn::and(), BoolFn::or(), one],
            Mc => vec![BoolFn::and(), BoolFn::or()],
            S => vec![
                BoolFn::from_tuple_fn(3, |a| (a[0] as u8 + !a[1] as u8 + !a[2] as u8) >= 2)
                    .unwrap(),
            ],
            Sc => vec![
                BoolFn::from_tuple_fn(3, |a| (a[0] as u8 + a[1] as u8 + !a[2] as u8) >= 2).unwrap(),
            ],
            SM => vec![BoolFn::majority()],
            L => vec![BoolFn::xor(), one],
            L0 => vec![BoolFn::xor()],
            L1 => vec![BoolFn::iff()],
            LS => vec![f("λ1010")],
            Lc => vec![BoolFn::xor3()],
            V => vec![BoolFn::or(), zero, one],
            V0 => vec![BoolFn::or(), zero],
            V1 => vec![BoolFn::or(), one],
            Vc => vec![BoolFn::or()],
            Lambda => vec![BoolFn::and(), zero, one],
            Lambda0 => vec![BoolFn::and(), zero],
            Lambda1 => vec![BoolFn::and(), one],
            LambdaC => vec![BoolFn::and()],
            Omega1 => vec![BoolFn::not(), one],
            IStar => vec![BoolFn::not()],
            I => vec![zero, one],
            I0 => vec![zero],
            I1 => vec![one],
            Ic => vec![],
            W(r) => match rank(r) {
                Some(m) => vec![BoolFn::implies(), th(m + 1, 2)],
                None => vec![BoolFn::implies()],
            },
            TcW(r) => match rank(r) {
                Some(m) => vec![or_and_not, th(m + 1, 2)],
                None => vec![or_and_not],
            },
            MW(r) => match rank(r) {
                Some(m) => vec![th(m + 1, 2), one],
                None => vec![BoolFn::or_and(), one],
            },
            McW(r) => match rank(r) {
                Some(m) => vec![BoolFn::or_and(), th(m + 1, 2)],
                None => vec![BoolFn::or_and()],
            },
            U(r) => match rank(r) {
                Some(m) => vec![and_not, th(m + 1, m)],
                None => vec![and_not],
            },
            TcU(r) => match rank(r) {
                Some(m) => vec![and_or_not, th(m + 1, m)],
                None => vec![and_or_not],
            },
            MU(r) => match rank(r) {
                Some(m) => vec![th(m + 1, m), zero],
                None => vec![BoolFn::and_or(), zero],
            },
            McU(r) => match rank(r) {
                Some(m) => vec![BoolFn::and_or(), th(m + 1, m)],
                None => vec![BoolFn::and_or()],
            },
        }
    }

    /// The dual clone `{f^d : f ∈ C}`.
    pub fn dual(&self) -> CloneId {
        match *self {
            T0 => T1,
            T1 => T0,
            M0 => M1,
            M1 => M0,
            L0 => L1,
            L1 => L0,
            V => Lambda,
            V0 => Lambda1,
            V1 => Lambda0,
            Vc => LambdaC,
            Lambda => V,
            Lambda0 => V1,
            Lambda1 => V0,
            LambdaC => Vc,
            I0 => I1,
            I1 => I0,
            W(r) => U(r),
            TcW(r) => TcU(r),
            MW(r) => MU(r),
            McW(r) => McU(r),
            U(r) => W(r),
            TcU(r) => TcW(r),
            MU(r) => MW(r),
            McU(r) => McW(r),
            other => other,
        }
    }

    /// Whether every member is essentially at most unary.
    pub fn is_essentially_unary(&self) -> bool {
        matches!(self, Omega1 | IStar | I | I0 | I1 | Ic)
    }

    fn index(&self) -> usize {
        Self::inventory()
            .iter()
            .position(|c| c == self)
            .expect("inventory clone")
    }
}

impl fmt::Display for CloneId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for CloneId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CloneId::parse(s)
    }
}

impl Serialize for CloneId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for CloneId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CloneId::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Covering pairs `(lower, upper)` of the Hasse diagram.
pub fn hasse_edges() -> &'static [(CloneId, CloneId)] {
    static EDGES: OnceLock<Vec<(CloneId, CloneId)>> = OnceLock::new();
    EDGES.get_or_init(|| {
        let (two, three, inf) = (Rank::Fin(2), Rank::Fin(3), Rank::Inf);
        let mut e = vec![
            (Ic, IStar),
            (IStar, Omega1),
            (I, Omega1),
            (Omega1, L),
            (Ic, I0),
            (I0, I),
            (Ic, I1),
            (I1, I),
            (Ic, Lc),
            (Ic, SM),
            (I0, L0),
            (I1, L1),
            (IStar, LS),
            (Ic, LambdaC),
            (I0, Lambda0),
            (I1, Lambda1),
            (I, Lambda),
            (Ic, Vc),
            (I0, V0),
            (I1, V1),
            (I, V),
            (LambdaC, Lambda0),
            (Lambda0, Lambda),
            (LambdaC, Lambda1),
            (Lambda1, Lambda),
            (LambdaC, McU(inf)),
            (Lambda0, MU(inf)),
            (Lambda1, M1),
            (Lambda, M),
            (Vc, V0),
            (V0, V),
            (Vc, V1),
            (V1, V),
            (Vc, McW(inf)),
            (V0, M0),
            (V1, MW(inf)),
            (V, M),
            (SM, McU(two)),
            (SM, McW(two)),
            (Lc, LS),
            (LS, L),
            (Lc, L0),
            (L0, L),
            (Lc, L1),
            (L1, L),
            (Lc, Sc),
            (LS, S),
            (L0, T0),
            (L1, T1),
            (L, Omega),
            (SM, Sc),
            (Sc, S),
            (Sc, Tc),
            (S, Omega),
            (Mc, M0),
            (M0, M),
            (Mc, M1),
            (M1, M),
            (Mc, Tc),
            (M0, T0),
            (M1, T1),
            (M, Omega),
            (Tc, T0),
            (T0, Omega),
            (Tc, T1),
            (T1, Omega),
            (McU(two), Mc),
            (MU(two), M0),
            (TcU(two), Tc),
            (U(two), T0),
            (McW(two), Mc),
            (MW(two), M1),
            (TcW(two), Tc),
            (W(two), T1),
        ];
        // The four-element squares of the separating families and the steps ∞ → 3 → 2.
        for (mc, m, tc, all) in [
            (
                McU as fn(Rank) -> CloneId,
                MU as fn(Rank) -> CloneId,
                TcU as fn(Rank) -> CloneId,
                U as fn(Rank) -> CloneId,
            ),
            (McW, MW, TcW, W),
        ] {
            for r in RANKS {
                e.push((mc(r), tc(r)));
                e.push((tc(r), all(r)));
                e.push((mc(r), m(r)));
                e.push((m(r), all(r)));
            }
            for (hi, lo) in [(inf, three), (three, two)] {
                for ctor in [mc, m, tc, all] {
                    e.push((ctor(hi), ctor(lo)));
                }
            }
        }
        e
    })
}

fn leq_matrix() -> &'static Vec<Vec<bool>> {
    static LEQ: OnceLock<Vec<Vec<bool>>> = OnceLock::new();
    LEQ.get_or_init(|| {
        let inv = CloneId::inventory();
        let n = inv.len();
        let mut r = vec![vec![false; n]; n];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
        }
        for (lo, hi) in hasse_edges() {
            r[lo.index()][hi.index()] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if r[i][k] {
                    for j in 0..n {
                        if r[k][j] {
                            r[i][j] = true;
                        }
                    }
                }
            }
        }
        r
    })
}

/// `c ⊆ d` in the stored lattice order.
pub fn clone_leq(c: CloneId, d: CloneId) -> bool {
    leq_matrix()[c.index()][d.index()]
}

/// `c ⊊ d`.
pub fn clone_lt(c: CloneId, d: CloneId) -> bool {
    c != d && clone_leq(c, d)
}

pub fn clone_contains(c: CloneId, f: &BoolFn) -> bool {
    c.contains(f)
}

/// All members of arity `1..=cap`, by filtering every function.
pub fn clone_members(c: CloneId, cap: usize) -> Result<FnSet> {
    FnSet::from_predicate(cap, |f| c.contains(f))
}

/// The `n`-ary members of `c` as a list.
pub fn clone_members_at(c: CloneId, n: usize) -> Result<Vec<BoolFn>> {
    Ok(clone_members(c, n)?.members(n).collect())
}

/// The clone generated by `gens`, restricted to arities `1..=cap`.
///
/// The `n`-ary part of a clone is the closure of the `n`-ary projections
/// under the generators, so each arity is closed independently.
pub fn clone_closure_upto(gens: &[BoolFn], cap: usize) -> Result<FnSet> {
    let mut out = FnSet::empty(cap)?;
    for n in 1..=cap {
        let mut known: HashSet<u64> = (0..n)
            .map(|i| BoolFn::projection(n, i).unwrap().table())
            .collect();
        loop {
            let current: Vec<u64> = known.iter().copied().collect();
            let before = known.len();
            for g in gens {
                for t in compose_images(g, &current, 1 << n)? {
                    known.insert(t);
                }
            }
            if known.len() == before {
                break;
            }
        }
        for t in known {
            out.insert(&BoolFn::new(n, t)?)?;
        }
    }
    Ok(out)
}

/// The generators of `F`'s members with arity `≤ cap` — convenience for closure from a set.
pub fn clone_closure_of_set(f: &FnSet) -> Result<FnSet> {
    let gens: Vec<BoolFn> = f.iter().collect();
    clone_closure_upto(&gens, f.cap())
}
