//! The `C`-minor quasi-order `f ≤_C g ⟺ f ∈ {g}C`.
//!
//! Brute-force decisions go through the composition search; closed-form
//! class labels and minor posets are provided for the ten source clones
//! with a known classification: the monotone family `M, M0, M1, Mc` and the
//! discriminator clones `Sc, S, Tc, T0, T1, Ω`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::boolfn::{BoolFn, R2Set};
use crate::class::{ClassAtom, ClassExpr};
use crate::compose::{compose_images, find_composition};
use crate::error::{Error, Result};
use crate::fnset::FnSet;
use crate::kposet::{downsets as poset_downsets, LabeledPoset, Poset};
use crate::postlattice::{clone_members, CloneId};

/// The source clones with a closed-form classification.
pub const CLASSIFIED: [CloneId; 10] = [
    CloneId::M,
    CloneId::M0,
    CloneId::M1,
    CloneId::Mc,
    CloneId::Sc,
    CloneId::S,
    CloneId::Tc,
    CloneId::T0,
    CloneId::T1,
    CloneId::Omega,
];

/// The monotone sources, whose minor posets are infinite.
pub const MONOTONE_FAMILY: [CloneId; 4] = [CloneId::M, CloneId::M0, CloneId::M1, CloneId::Mc];

/// The discriminator sources, with finitely many classes.
pub const DISCRIMINATOR_FAMILY: [CloneId; 6] = [
    CloneId::Sc,
    CloneId::S,
    CloneId::Tc,
    CloneId::T0,
    CloneId::T1,
    CloneId::Omega,
];

fn check_classified(c: CloneId) -> Result<()> {
    if CLASSIFIED.contains(&c) {
        Ok(())
    } else {
        Err(Error::Contract(format!(
            "no closed-form classification for source clone {c}; supported: {}",
            CLASSIFIED.map(|c| c.name()).join(", ")
        )))
    }
}

/// Payload of a minor class label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelPayload {
    /// `A_k^{ab}`: alternation number `k`, `f(0) = a`, `f(1) = b`.
    Alt { k: u32, a: bool, b: bool },
    /// `F^R_{ab}`, or `F^R` when the endpoints are free.
    Range2 {
        r: R2Set,
        a: Option<bool>,
        b: Option<bool>,
    },
    /// The constant functions with value `a`.
    Const(bool),
    /// Non-constant functions of `Ω_{ab}` (`None` = unrestricted).
    NonConst { a: Option<bool>, b: Option<bool> },
}

/// An equivalence class of `≡_C` for a classified source clone `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorClassLabel {
    pub source: CloneId,
    pub payload: LabelPayload,
}

fn b01(b: bool) -> char {
    if b {
        '1'
    } else {
        '0'
    }
}

fn bx(b: Option<bool>) -> char {
    b.map_or('x', b01)
}

impl fmt::Display for MinorClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.payload {
            LabelPayload::Alt { k, a, b } => write!(f, "A{k}_{}{}", b01(a), b01(b)),
            LabelPayload::Range2 {
                r,
                a: None,
                b: None,
            } => write!(f, "F^{{{}}}", r.name()),
            LabelPayload::Range2 { r, a, b } => {
                write!(f, "F^{{{}}}_{{{}{}}}", r.name(), bx(a), bx(b))
            }
            LabelPayload::Const(a) => write!(f, "C{}", b01(a)),
            LabelPayload::NonConst { a: None, b: None } => f.write_str("Om-nonconst"),
            LabelPayload::NonConst { a, b } if a.is_some() && b.is_some() && a != b => {
                write!(f, "Om{}{}", bx(a), bx(b))
            }
            LabelPayload::NonConst { a, b } => write!(f, "Om{}{}-nonconst", bx(a), bx(b)),
        }
    }
}

impl Serialize for MinorClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Every range² set of a non-constant function.
fn nonconstant_r2() -> [R2Set; 5] {
    [3u8, 4, 5, 6, 7].map(|b| R2Set::from_bits(b).unwrap())
}

impl MinorClassLabel {
    /// The class as a symbolic expression.
    pub fn to_expr(&self) -> ClassExpr {
        match self.payload {
            LabelPayload::Alt { k, a, b } => {
                ClassExpr::atom(ClassAtom::AltExactly(k)).restrict(Some(a), Some(b))
            }
            LabelPayload::Range2 { r, a, b } => ClassExpr::atom(ClassAtom::Range2Class { r, a, b }),
            LabelPayload::Const(a) => ClassExpr::atom(ClassAtom::ConstVal(a)),
            LabelPayload::NonConst { a, b } if a.is_some() && b.is_some() && a != b => {
                ClassExpr::values(a, b)
            }
            LabelPayload::NonConst { a, b } => ClassExpr::union(
                nonconstant_r2()
                    .into_iter()
                    .map(|r| ClassExpr::atom(ClassAtom::Range2Class { r, a, b }))
                    .collect(),
            ),
        }
    }

    pub fn contains(&self, f: &BoolFn) -> bool {
        class_label(f, self.source)
            .map(|l| l == *self)
            .unwrap_or(false)
    }

    /// Smallest arity of a member, with one member of that arity.
    pub fn representative(&self) -> BoolFn {
        (1..=4)
            .flat_map(BoolFn::all_of_arity)
            .find(|f| self.contains(f))
            .expect("every class has a member of arity ≤ 4 within the cutoffs used")
    }
}

/// The class of `f` under `≡_c`.
pub fn class_label(f: &BoolFn, c: CloneId) -> Result<MinorClassLabel> {
    check_classified(c)?;
    let (a, b) = (f.at_zero(), f.at_one());
    let payload = match c {
        CloneId::M | CloneId::M0 | CloneId::M1 | CloneId::Mc => LabelPayload::Alt {
            k: f.alt() as u32,
            a,
            b,
        },
        CloneId::Sc => LabelPayload::Range2 {
            r: f.range2().r,
            a: Some(a),
            b: Some(b),
        },
        CloneId::S => LabelPayload::Range2 {
            r: f.range2().r,
            a: None,
            b: None,
        },
        _ if f.is_constant() => LabelPayload::Const(a),
        CloneId::Tc => LabelPayload::NonConst {
            a: Some(a),
            b: Some(b),
        },
        CloneId::T0 => LabelPayload::NonConst {
            a: Some(a),
            b: None,
        },
        CloneId::T1 => LabelPayload::NonConst {
            a: None,
            b: Some(b),
        },
        _ => LabelPayload::NonConst { a: None, b: None },
    };
    Ok(MinorClassLabel { source: c, payload })
}

/// Closed-form comparability of two classes of the same source clone.
pub fn label_leq(x: &MinorClassLabel, y: &MinorClassLabel) -> Result<bool> {
    if x.source != y.source {
        return Err(Error::Contract(
            "labels from different source clones".into(),
        ));
    }
    use LabelPayload::*;
    Ok(match (x.source, x.payload, y.payload) {
        (c, Alt { k, a, b }, Alt { k: l, a: a2, b: b2 }) => match c {
            CloneId::M => k < l || (k == l && a == a2),
            CloneId::M0 => k <= l && a == a2,
            CloneId::M1 => k <= l && b == b2,
            _ => k <= l && a == a2 && b == b2,
        },
        (
            _,
            Range2 { r, a, b },
            Range2 {
                r: r2,
                a: a2,
                b: b2,
            },
        ) => a == a2 && b == b2 && r.is_subset(r2),
        (_, p, q) if p == q => true,
        (_, Const(v), NonConst { a, b }) => a.is_none_or(|a| a == v) && b.is_none_or(|b| b == v),
        _ => false,
    })
}

/// Every label of a discriminator source, in a fixed order.
pub fn discriminator_labels(c: CloneId) -> Result<Vec<MinorClassLabel>> {
    let mk = |payload| MinorClassLabel { source: c, payload };
    let rs: Vec<R2Set> = (1..8u8).map(|b| R2Set::from_bits(b).unwrap()).collect();
    let pair = |a: bool, b: bool| {
        if a == b {
            if a {
                R2Set::ONE
            } else {
                R2Set::ZERO
            }
        } else {
            R2Set::BOTH
        }
    };
    Ok(match c {
        CloneId::Sc => {
            let mut v = Vec::new();
            for (a, b) in [(false, false), (false, true), (true, false), (true, true)] {
                for &r in &rs {
                    if r.contains(pair(a, b)) {
                        v.push(mk(LabelPayload::Range2 {
                            r,
                            a: Some(a),
                            b: Some(b),
                        }));
                    }
                }
            }
            v
        }
        CloneId::S => rs
            .iter()
            .map(|&r| {
                mk(LabelPayload::Range2 {
                    r,
                    a: None,
                    b: None,
                })
            })
            .collect(),
        CloneId::Tc => vec![
            mk(LabelPayload::Const(false)),
            mk(LabelPayload::Const(true)),
            mk(LabelPayload::NonConst {
                a: Some(false),
                b: Some(false),
            }),
            mk(LabelPayload::NonConst {
                a: Some(true),
                b: Some(true),
            }),
            mk(LabelPayload::NonConst {
                a: Some(false),
                b: Some(true),
            }),
            mk(LabelPayload::NonConst {
                a: Some(true),
                b: Some(false),
            }),
        ],
        CloneId::T0 => vec![
            mk(LabelPayload::Const(false)),
            mk(LabelPayload::Const(true)),
            mk(LabelPayload::NonConst {
                a: Some(false),
                b: None,
            }),
            mk(LabelPayload::NonConst {
                a: Some(true),
                b: None,
            }),
        ],
        CloneId::T1 => vec![
            mk(LabelPayload::Const(false)),
            mk(LabelPayload::Const(true)),
            mk(LabelPayload::NonConst {
                a: None,
                b: Some(false),
            }),
            mk(LabelPayload::NonConst {
                a: None,
                b: Some(true),
            }),
        ],
        CloneId::Omega => vec![
            mk(LabelPayload::Const(false)),
            mk(LabelPayload::Const(true)),
            mk(LabelPayload::NonConst { a: None, b: None }),
        ],
        other => {
            return Err(Error::Contract(format!(
                "{other} is not a discriminator source clone"
            )))
        }
    })
}

/// Labels of a monotone-family source with each chain truncated to its
/// first `cutoff + 1` elements.
pub fn monotone_labels(c: CloneId, cutoff: u32) -> Result<Vec<MinorClassLabel>> {
    let mk = |k: u32, a: bool| MinorClassLabel {
        source: c,
        payload: LabelPayload::Alt {
            k,
            a,
            b: a ^ (k % 2 == 1),
        },
    };
    let mut v = Vec::new();
    match c {
        CloneId::Mc => {
            // chains indexed by (a, b): Alt runs over one parity class
            for (a, odd) in [(false, false), (false, true), (true, true), (true, false)] {
                for i in 0..=cutoff {
                    v.push(mk(2 * i + u32::from(odd), a));
                }
            }
        }
        CloneId::M0 | CloneId::M1 | CloneId::M => {
            for a in [false, true] {
                for k in 0..=cutoff {
                    if c == CloneId::M1 {
                        // chains indexed by f(1) = b; generate via a = b + k
                        let b = a;
                        v.push(mk(k, b ^ (k % 2 == 1)));
                    } else {
                        v.push(mk(k, a));
                    }
                }
            }
        }
        other => {
            return Err(Error::Contract(format!(
                "{other} is not a monotone-family source clone"
            )))
        }
    }
    Ok(v)
}

/// A minor poset: classes plus the induced order.
#[derive(Clone, Debug)]
pub struct MinorPoset {
    pub source: CloneId,
    pub classes: Vec<MinorClassLabel>,
    pub poset: Poset,
}

impl MinorPoset {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.classes.iter().map(|l| l.to_string()).collect()
    }

    /// The poset with every element labeled 0, for DOT/JSON export.
    pub fn to_labeled(&self) -> LabeledPoset {
        LabeledPoset::new(self.poset.clone(), vec![0; self.len()], 1, None, None)
            .expect("valid labeled poset")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "source": self.source.name(),
            "elements": self.names(),
            "covers": self.poset.covers(),
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph minors {\n  rankdir=BT;\n");
        for (i, l) in self.classes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{l}\"];\n"));
        }
        for &(a, b) in self.poset.covers() {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    /// The class expression of a downset given by element indices.
    pub fn downset_expr(&self, elems: &[usize]) -> ClassExpr {
        ClassExpr::union(elems.iter().map(|&i| self.classes[i].to_expr()).collect())
    }
}

/// The `c`-minor poset. Monotone-family sources need a cutoff (their posets
/// are infinite); discriminator sources ignore it.
pub fn minor_poset(c: CloneId, cutoff: Option<u32>) -> Result<MinorPoset> {
    check_classified(c)?;
    let classes = if MONOTONE_FAMILY.contains(&c) {
        let Some(k) = cutoff else {
            return Err(Error::Contract(format!(
                "the {c}-minor poset is infinite; give a cutoff"
            )));
        };
        monotone_labels(c, k)?
    } else {
        discriminator_labels(c)?
    };
    let mut rel = Vec::new();
    for (i, x) in classes.iter().enumerate() {
        for (j, y) in classes.iter().enumerate() {
            if i != j && label_leq(x, y)? {
                rel.push((i, j));
            }
        }
    }
    let poset = Poset::new(classes.len(), &rel)?;
    Ok(MinorPoset {
        source: c,
        classes,
        poset,
    })
}

/// All downsets of a poset, canonically ordered.
pub fn downsets(p: &Poset) -> Result<Vec<Vec<usize>>> {
    poset_downsets(p)
}

/// `f ≤_c g` by exhaustive search for `h1, …, hm ∈ c` with `f = g(h1, …, hm)`.
pub fn leq_minor_bruteforce(f: &BoolFn, g: &BoolFn, c: CloneId) -> Result<bool> {
    Ok(minor_witness(f, g, c)?.is_some())
}

/// A witnessing tuple for `f ≤_c g`, if one exists.
pub fn minor_witness(f: &BoolFn, g: &BoolFn, c: CloneId) -> Result<Option<Vec<BoolFn>>> {
    let n = f.arity();
    if n > 4 {
        return Err(Error::Resource(format!(
            "minor search limited to arity 4, got {n}"
        )));
    }
    let inner = clone_members(c, n)?.tables(n);
    Ok(find_composition(g, &inner, 1 << n, f.table())?.map(|w| {
        w.into_iter()
            .map(|i| BoolFn::new(n, inner[i]).unwrap())
            .collect()
    }))
}

/// `{g}·c` at arities `1..=cap`: every function below `g`.
pub fn minor_downset(g: &BoolFn, c: CloneId, cap: usize) -> Result<FnSet> {
    let mut out = FnSet::empty(cap)?;
    for n in 1..=cap {
        let inner = clone_members(c, n)?.tables(n);
        for t in compose_images(g, &inner, 1 << n)? {
            out.insert(&BoolFn::new(n, t)?)?;
        }
    }
    Ok(out)
}
