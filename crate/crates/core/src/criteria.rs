//! Lie and Jordan membership criteria and the skew-right-commutative basis.
//!
//! An element `f` of the free Zinbiel algebra lies in the Lie subalgebra
//! generated by the letters exactly when `p(f) = -f`; a homogeneous element of
//! degree `n` lies in the Jordan subalgebra exactly when `D(f) = n! f`. The
//! Lie part has the basis `bar(w)` over words whose last two letters ascend.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::element::ZinElement;
use crate::error::{Error, Result};
use crate::maps::{bar, bar_word, dynkin, p_map};
use crate::product::{shuffle_into, zin_mul};
use crate::scalar::Scalar;
use crate::word::{GeneratorId, MultiDegree, Word};

/// A word `a1 ... a(n-1) an` with `n >= 2` and `a(n-1) < an`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewWord(Word);

impl SkewWord {
    pub fn new(word: Word) -> Result<Self> {
        let l = word.letters();
        if l.len() < 2 {
            return Err(Error::DegreeTooSmall { min: 2, found: l.len() as u32 });
        }
        if l[l.len() - 2] >= l[l.len() - 1] {
            return Err(Error::ShapeMismatch("last two letters must ascend"));
        }
        Ok(SkewWord(word))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    /// `w - p(w)`.
    pub fn bar(&self) -> ZinElement {
        bar_word(&self.0).expect("length >= 2")
    }
}

impl fmt::Debug for SkewWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bar({:?})", self.0)
    }
}

pub fn is_lie(f: &ZinElement) -> bool {
    p_map(f) == -f
}

/// Coefficients `c` with `f = Σ c_w bar(w)` over skew words.
///
/// Callers split off the degree-one part first; it is rejected here.
pub fn skew_coordinates(f: &ZinElement) -> Result<BTreeMap<SkewWord, Scalar>> {
    for w in f.support() {
        let l = w.letters();
        if l.len() < 2 {
            return Err(Error::DegreeOneSupport);
        }
        if l[l.len() - 2] == l[l.len() - 1] {
            return Err(Error::CorruptLie);
        }
    }
    if !is_lie(f) {
        return Err(Error::NotLie);
    }
    Ok(f.terms()
        .filter_map(|(w, c)| SkewWord::new(w.clone()).ok().map(|s| (s, c.clone())))
        .collect())
}

/// `Σ c_w bar(w)`.
pub fn from_skew_coordinates(coords: &BTreeMap<SkewWord, Scalar>) -> ZinElement {
    let mut out = ZinElement::zero();
    for (s, c) in coords {
        out.add_term(s.0.clone(), c.clone());
        out.add_term(s.0.swap_last_two().expect("length >= 2"), -c);
    }
    out
}

fn require_total(d: &MultiDegree, min: u32) -> Result<()> {
    if d.total() < min {
        return Err(Error::DegreeTooSmall { min, found: d.total() });
    }
    Ok(())
}

/// Skew words of content `d`, in canonical order.
pub fn enumerate_skew_basis(d: &MultiDegree) -> Result<Vec<SkewWord>> {
    require_total(d, 2)?;
    Ok(d.words().into_iter().filter_map(|w| SkewWord::new(w).ok()).collect())
}

/// `Σ_{i<j} (n-2)! m_i m_j / (m_1! ... m_q!)`.
pub fn dim_st(d: &MultiDegree) -> Result<u64> {
    require_total(d, 2)?;
    let n = d.total();
    let counts: Vec<u32> = d.generators().map(|(_, c)| c).collect();
    let fact = |k: u32| -> BigInt { (2..=k).fold(BigInt::from(1u32), |acc, i| acc * i) };
    let denom = counts.iter().fold(BigInt::from(1u32), |acc, &m| acc * fact(m));
    let mut pairs = BigInt::from(0u32);
    for i in 0..counts.len() {
        for j in i + 1..counts.len() {
            pairs += BigInt::from(counts[i]) * counts[j];
        }
    }
    let num = fact(n - 2) * pairs;
    debug_assert!((&num % &denom) == BigInt::from(0u32));
    Ok((num / denom).to_u64().expect("dimension fits in u64"))
}

/// `D(f_n) = n! f_n` on every total-degree component.
pub fn is_jordan(f: &ZinElement) -> bool {
    f.degree_components()
        .into_iter()
        .all(|(n, part)| dynkin(&part) == part.scale(&Scalar::factorial(n as u32)))
}

/// `Σ_{σ ∈ S_n} a_σ(1) ... a_σ(n)`: every arrangement of the letters, so a
/// word with letter multiplicities `k_1, ..., k_r` appears `k_1! ... k_r!` times.
pub fn jordan_symmetrize(letters: &[GeneratorId]) -> ZinElement {
    assert!(!letters.is_empty(), "non-empty multiset");
    let d = MultiDegree::of_letters(letters);
    let weight = d
        .generators()
        .fold(Scalar::one(), |acc, (_, k)| acc * Scalar::factorial(k));
    ZinElement::from_terms(d.words().into_iter().map(|w| (w, weight.clone())))
}

fn sh(u: &[GeneratorId], v: &[GeneratorId], tail: &[GeneratorId]) -> ZinElement {
    let mut out = ZinElement::zero();
    shuffle_into(u, v, tail, &Scalar::one(), &mut out);
    out
}

fn bar_of(f: ZinElement) -> ZinElement {
    bar(&f).expect("every term has a two-letter tail")
}

fn cat(a: &[GeneratorId], b: &[GeneratorId]) -> Vec<GeneratorId> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

/// Pieces of a word `w = w0 a b` used by the rewrite formulas.
struct Tail<'a> {
    /// `w0`
    head: &'a [GeneratorId],
    /// `a`
    a: GeneratorId,
    /// `b`
    b: GeneratorId,
}

impl<'a> Tail<'a> {
    fn of(w: &'a Word) -> Result<Self> {
        let l = w.letters();
        if l.len() < 2 {
            return Err(Error::ShapeMismatch("words need at least two letters"));
        }
        Ok(Tail { head: &l[..l.len() - 2], a: l[l.len() - 2], b: l[l.len() - 1] })
    }
    /// `w0 a b`
    fn word(&self) -> Vec<GeneratorId> {
        cat(self.head, &[self.a, self.b])
    }
    /// `w0 b a`
    fn swapped(&self) -> Vec<GeneratorId> {
        cat(self.head, &[self.b, self.a])
    }
    /// `w0 a`
    fn drop_last(&self) -> Vec<GeneratorId> {
        cat(self.head, &[self.a])
    }
    /// `w0 b`
    fn drop_second_last(&self) -> Vec<GeneratorId> {
        cat(self.head, &[self.b])
    }
}

/// `bar(u) ∘ bar(v)` written through shuffles and bars.
pub fn lemma33_rhs(u: &Word, v: &Word) -> Result<ZinElement> {
    let iu = Tail::of(u)?;
    let jv = Tail::of(v)?;
    let (im1, im) = (iu.a, iu.b);
    let (jn1, jn) = (jv.a, jv.b);
    let mut out = ZinElement::zero();
    if v.len() == 2 {
        out += &bar_of(ZinElement::from_word(Word::new(cat(&iu.word(), &[jn1, jn]))));
        out -= &bar_of(ZinElement::from_word(Word::new(cat(&iu.swapped(), &[jn1, jn]))));
        out += &sh(&iu.drop_last(), &[jn1], &[im, jn]);
        out -= &sh(&iu.drop_second_last(), &[jn1], &[im1, jn]);
        out -= &sh(&iu.drop_last(), &[jn], &[im, jn1]);
        out += &sh(&iu.drop_second_last(), &[jn], &[im1, jn1]);
    } else {
        out += &bar_of(sh(&iu.word(), jv.head, &[jn1, jn]));
        out -= &bar_of(sh(&iu.swapped(), jv.head, &[jn1, jn]));
        out += &sh(&iu.drop_last(), &jv.drop_last(), &[im, jn]);
        out -= &sh(&iu.drop_second_last(), &jv.drop_last(), &[im1, jn]);
        out -= &sh(&iu.drop_last(), &jv.drop_second_last(), &[im, jn1]);
        out += &sh(&iu.drop_second_last(), &jv.drop_second_last(), &[im1, jn1]);
    }
    Ok(out)
}

/// `[bar(u), g]` as a combination of bars.
pub fn lemma34_rhs(u: &Word, g: GeneratorId) -> Result<ZinElement> {
    let iu = Tail::of(u)?;
    let one = |w: Vec<GeneratorId>| bar_of(ZinElement::from_word(Word::new(w)));
    let mut out = ZinElement::zero();
    if u.len() == 2 {
        out += &one(alloc::vec![iu.a, iu.b, g]);
        out -= &one(alloc::vec![iu.b, iu.a, g]);
        out -= &one(alloc::vec![g, iu.a, iu.b]);
    } else {
        out += &one(cat(&iu.word(), &[g]));
        out -= &one(cat(&iu.swapped(), &[g]));
        out -= &bar_of(sh(&[g], iu.head, &[iu.a, iu.b]));
    }
    Ok(out)
}

/// `[bar(u), bar(v)]` as a combination of bars.
///
/// Shuffles with an empty head are read with the empty word as the unit, which
/// covers the two-letter cases with the same eight-term expression.
pub fn lemma35_rhs(u: &Word, v: &Word) -> Result<ZinElement> {
    let iu = Tail::of(u)?;
    let jv = Tail::of(v)?;
    let (im1, im) = (iu.a, iu.b);
    let (jn1, jn) = (jv.a, jv.b);
    let mut out = ZinElement::zero();
    out += &bar_of(sh(&iu.word(), jv.head, &[jn1, jn]));
    out -= &bar_of(sh(&iu.swapped(), jv.head, &[jn1, jn]));
    out -= &bar_of(sh(&jv.word(), iu.head, &[im1, im]));
    out += &bar_of(sh(&jv.swapped(), iu.head, &[im1, im]));
    out += &bar_of(sh(&iu.drop_last(), &jv.drop_last(), &[im, jn]));
    out -= &bar_of(sh(&iu.drop_second_last(), &jv.drop_last(), &[im1, jn]));
    out -= &bar_of(sh(&iu.drop_last(), &jv.drop_second_last(), &[im, jn1]));
    out += &bar_of(sh(&iu.drop_second_last(), &jv.drop_second_last(), &[im1, jn1]));
    Ok(out)
}

/// For Lie `b`, `c`: both `(a∘b)∘c - (a∘c)∘b` and `b∘c - c∘b` are Lie.
pub fn corollary23_check(a: &ZinElement, b: &ZinElement, c: &ZinElement) -> Result<bool> {
    if !is_lie(b) || !is_lie(c) {
        return Err(Error::NotLieInput);
    }
    let first = &zin_mul(&zin_mul(a, b), c) - &zin_mul(&zin_mul(a, c), b);
    let second = &zin_mul(b, c) - &zin_mul(c, b);
    Ok(is_lie(&first) && is_lie(&second))
}
