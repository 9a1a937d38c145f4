//! Elements of the free Zinbiel algebra in the left-normed word basis.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::scalar::Scalar;
use crate::word::{Alphabet, GeneratorId, MultiDegree, Word};

/// A finite linear combination of words with rational coefficients.
///
/// Zero coefficients are never stored, so two elements are equal exactly when
/// their term maps are equal.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ZinElement {
    terms: BTreeMap<Word, Scalar>,
}

/// Result of [`ZinElement::multidegree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    Zero,
    Homogeneous(MultiDegree),
    Mixed,
}

impl ZinElement {
    pub fn zero() -> Self {
        ZinElement::default()
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(w, Scalar::one())
    }

    pub fn generator(g: GeneratorId) -> Self {
        Self::from_word(Word::letter(g))
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut e = ZinElement::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut e = ZinElement::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    /// Builds from strictly increasing words with non-zero coefficients.
    pub(crate) fn from_sorted_nonzero(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        ZinElement { terms: terms.into_iter().collect() }
    }

    /// Adds `sign · rhs`, merging the two sorted maps when `rhs` is not small.
    fn merge_in(&mut self, rhs: &ZinElement, negate: bool) {
        let signed = |c: &Scalar| if negate { -c } else { c.clone() };
        if rhs.terms.len() * 8 < self.terms.len() {
            for (w, c) in &rhs.terms {
                self.add_term(w.clone(), signed(c));
            }
            return;
        }
        let lhs = core::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + rhs.terms.len());
        let mut a = lhs.into_iter().peekable();
        let mut b = rhs.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((wa, _)), Some((wb, _))) => match wa.cmp(wb) {
                    core::cmp::Ordering::Less => out.push(a.next().expect("peeked")),
                    core::cmp::Ordering::Greater => {
                        let (w, c) = b.next().expect("peeked");
                        out.push((w.clone(), signed(c)));
                    }
                    core::cmp::Ordering::Equal => {
                        let (w, mut c) = a.next().expect("peeked");
                        let (_, d) = b.next().expect("peeked");
                        if negate {
                            c -= d;
                        } else {
                            c += d;
                        }
                        if !c.is_zero() {
                            out.push((w, c));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().expect("peeked")),
                (None, Some(_)) => {
                    let (w, c) = b.next().expect("peeked");
                    out.push((w.clone(), signed(c)));
                }
                (None, None) => break,
            }
        }
        self.terms = out.into_iter().collect();
    }

    /// Sum of words, each with coefficient one (repeats accumulate).
    pub fn sum_of_words(words: impl IntoIterator<Item = Word>) -> Self {
        let mut e = ZinElement::zero();
        for w in words {
            e.add_term(w, Scalar::one());
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Scalar) -> ZinElement {
        if c.is_zero() {
            return ZinElement::zero();
        }
        ZinElement { terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    /// Applies a word-to-word map linearly (coefficients are kept).
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Word) -> ZinElement {
        let mut out = ZinElement::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// `self ∘ g` for a single generator: appends `g` to every word.
    pub fn push_letter(&self, g: GeneratorId) -> ZinElement {
        ZinElement { terms: self.terms.iter().map(|(w, c)| (w.push(g), c.clone())).collect() }
    }

    /// Smallest and largest word length in the support.
    pub fn degree_range(&self) -> Option<(usize, usize)> {
        let lo = self.terms.keys().next()?.len();
        let hi = self.terms.keys().next_back()?.len();
        Some((lo, hi))
    }

    pub fn multidegree(&self) -> Grading {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Grading::Zero;
        };
        let d = first.multidegree();
        if it.all(|w| w.multidegree() == d) {
            Grading::Homogeneous(d)
        } else {
            Grading::Mixed
        }
    }

    /// Split into multidegree components, in canonical multidegree order.
    pub fn homogeneous_components(&self) -> Vec<(MultiDegree, ZinElement)> {
        let mut parts: BTreeMap<MultiDegree, ZinElement> = BTreeMap::new();
        for (w, c) in &self.terms {
            parts.entry(w.multidegree()).or_default().terms.insert(w.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// Components split by total degree only.
    pub fn degree_components(&self) -> Vec<(usize, ZinElement)> {
        let mut parts: BTreeMap<usize, ZinElement> = BTreeMap::new();
        for (w, c) in &self.terms {
            parts.entry(w.len()).or_default().terms.insert(w.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// Element text format: one `<sign><num>/<den> <letters>` line per term, or `0`.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push('\n');
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let a = c.abs();
            let _ = write!(s, "{sign}{}/{} {}", a.numer(), a.denom(), alphabet.format_word(w));
        }
        s
    }
}

impl fmt::Debug for ZinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}*{:?}", c.abs(), w)?;
        }
        Ok(())
    }
}

impl From<Word> for ZinElement {
    fn from(w: Word) -> Self {
        ZinElement::from_word(w)
    }
}

impl AddAssign<&ZinElement> for ZinElement {
    fn add_assign(&mut self, rhs: &ZinElement) {
        self.merge_in(rhs, false);
    }
}

impl SubAssign<&ZinElement> for ZinElement {
    fn sub_assign(&mut self, rhs: &ZinElement) {
        self.merge_in(rhs, true);
    }
}

impl Add<&ZinElement> for &ZinElement {
    type Output = ZinElement;
    fn add(self, rhs: &ZinElement) -> ZinElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&ZinElement> for &ZinElement {
    type Output = ZinElement;
    fn sub(self, rhs: &ZinElement) -> ZinElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for ZinElement {
    type Output = ZinElement;
    fn add(mut self, rhs: ZinElement) -> ZinElement {
        self += &rhs;
        self
    }
}

impl Sub for ZinElement {
    type Output = ZinElement;
    fn sub(mut self, rhs: ZinElement) -> ZinElement {
        self -= &rhs;
        self
    }
}

impl Neg for &ZinElement {
    type Output = ZinElement;
    fn neg(self) -> ZinElement {
        ZinElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Neg for ZinElement {
    type Output = ZinElement;
    fn neg(self) -> ZinElement {
        -&self
    }
}
