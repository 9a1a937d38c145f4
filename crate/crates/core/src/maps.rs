//! Linear maps on the word basis: the involution `p`, `bar = id - p`, and the
//! Dynkin-type map `D` into nested anticommutators.

use crate::element::ZinElement;
use crate::error::{Error, Result};
use crate::product::anticommutator;
use crate::word::Word;

/// `p(x) = -x` on letters; on longer words the last two letters are exchanged.
pub fn p_map(f: &ZinElement) -> ZinElement {
    let mut out = ZinElement::zero();
    for (w, c) in f.terms() {
        match w.swap_last_two() {
            Some(s) => out.add_term(s, c.clone()),
            None => out.add_term(w.clone(), -c),
        }
    }
    out
}

/// `bar(f) = f - p(f)`, defined only away from degree one.
pub fn bar(f: &ZinElement) -> Result<ZinElement> {
    let mut out = ZinElement::zero();
    for (w, c) in f.terms() {
        let swapped = w.swap_last_two().ok_or(Error::DegreeOneSupport)?;
        out.add_term(w.clone(), c.clone());
        out.add_term(swapped, -c);
    }
    Ok(out)
}

/// `bar(w) = w - p(w)` for a single word of length at least two.
pub fn bar_word(w: &Word) -> Result<ZinElement> {
    bar(&ZinElement::from_word(w.clone()))
}

/// Nested anticommutator `{{..{a1, a2}..}, an}` of the letters of `w`.
///
/// A single letter maps to itself.
pub fn dynkin_word(w: &Word) -> ZinElement {
    let mut letters = w.letters().iter();
    let first = *letters.next().expect("non-empty");
    letters.fold(ZinElement::generator(first), |acc, &g| {
        anticommutator(&acc, &ZinElement::generator(g))
    })
}

/// Linear extension of [`dynkin_word`].
pub fn dynkin(f: &ZinElement) -> ZinElement {
    let mut out = ZinElement::zero();
    for (w, c) in f.terms() {
        out += &dynkin_word(w).scale(c);
    }
    out
}
