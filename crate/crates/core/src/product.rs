//! The right-Zinbiel product, the shuffle product, and their (anti)commutators.
//!
//! For words `u` and `v = v' b` the Zinbiel product is `u ∘ v = (u ⧢ v') b`,
//! and `u ∘ b = ub` for a single letter. Shuffles are produced by the merge
//! recursion on last letters,
//! `ua ⧢ vb = (u ⧢ vb) a + (ua ⧢ v) b`,
//! so a shuffle of lengths `m` and `n` costs `C(m + n, m)` words.

use alloc::vec::Vec;

use crate::element::ZinElement;
use crate::scalar::Scalar;
use crate::word::{GeneratorId, Word};

/// Adds `c · (u ⧢ v) t` to `out`, where `t` is a fixed tail of letters.
///
/// Either of `u`, `v` may be empty (the empty word is the shuffle unit). If
/// everything is empty nothing is added.
pub fn shuffle_into(u: &[GeneratorId], v: &[GeneratorId], tail: &[GeneratorId], c: &Scalar, out: &mut ZinElement) {
    let n = u.len() + v.len() + tail.len();
    if n == 0 || c.is_zero() {
        return;
    }
    // `rev` collects letters chosen from the back, so the finished word is
    // `prefix ++ reverse(rev)`.
    let mut rev: Vec<GeneratorId> = tail.iter().rev().copied().collect();
    merge(u, v, &mut rev, c, out);
}

fn merge(u: &[GeneratorId], v: &[GeneratorId], rev: &mut Vec<GeneratorId>, c: &Scalar, out: &mut ZinElement) {
    if u.is_empty() || v.is_empty() {
        let rest = if u.is_empty() { v } else { u };
        let mut letters = Vec::with_capacity(rest.len() + rev.len());
        letters.extend_from_slice(rest);
        letters.extend(rev.iter().rev());
        out.add_term(Word::new(letters), c.clone());
        return;
    }
    let (ua, a) = u.split_at(u.len() - 1);
    rev.push(a[0]);
    merge(ua, v, rev, c, out);
    rev.pop();
    let (vb, b) = v.split_at(v.len() - 1);
    rev.push(b[0]);
    merge(u, vb, rev, c, out);
    rev.pop();
}

/// `u ⧢ v`: the sum over all riffle interleavings, each with coefficient one.
pub fn shuffle_words(u: &Word, v: &Word) -> ZinElement {
    let mut out = ZinElement::zero();
    shuffle_into(u.letters(), v.letters(), &[], &Scalar::one(), &mut out);
    out
}

fn zinbiel_words_into(u: &Word, v: &Word, c: &Scalar, out: &mut ZinElement) {
    let (head, last) = v.letters().split_at(v.len() - 1);
    shuffle_into(u.letters(), head, last, c, out);
}

/// `u ∘ v` on basis words.
pub fn word_zinbiel_mul(u: &Word, v: &Word) -> ZinElement {
    let mut out = ZinElement::zero();
    zinbiel_words_into(u, v, &Scalar::one(), &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Zinbiel,
    Shuffle,
}

/// Adds `sign · f ∘ g` (or `f ⧢ g`) to `out`, pair by pair.
fn bilinear_slow(f: &ZinElement, g: &ZinElement, kind: Kind, negate: bool, out: &mut ZinElement) {
    for (u, a) in f.terms() {
        for (v, b) in g.terms() {
            let c = if negate { -(a * b) } else { a * b };
            match kind {
                Kind::Zinbiel => zinbiel_words_into(u, v, &c, out),
                Kind::Shuffle => shuffle_into(u.letters(), v.letters(), &[], &c, out),
            }
        }
    }
}

/// Words of at most 16 letters with indices below 256, packed one byte per
/// letter with the first letter most significant. Letters are non-zero, so
/// numeric order on packed words is the word order (length, then lexicographic).
mod packed {
    use alloc::collections::BTreeMap;
    use alloc::vec::Vec;

    use num_bigint::BigInt;

    use super::Kind;
    use crate::element::ZinElement;
    use crate::scalar::Scalar;
    use crate::word::{GeneratorId, Word};

    pub const MAX_LEN: usize = 16;

    fn bytes(w: &Word) -> Option<Vec<u8>> {
        w.letters().iter().map(|g| u8::try_from(g.index()).ok()).collect()
    }

    fn max_len(f: &ZinElement) -> usize {
        f.support().map(Word::len).max().unwrap_or(0)
    }

    pub fn fits(f: &ZinElement, g: &ZinElement) -> bool {
        max_len(f) + max_len(g) <= MAX_LEN
    }

    fn merge(u: &[u8], v: &[u8], suffix: u128, slen: u32, out: &mut Vec<u128>) {
        if u.is_empty() || v.is_empty() {
            let rest = if u.is_empty() { v } else { u };
            let prefix = rest.iter().fold(0u128, |p, &l| p << 8 | l as u128);
            out.push(if slen == 0 { prefix } else { prefix << (8 * slen) | suffix });
            return;
        }
        let (ua, a) = u.split_at(u.len() - 1);
        merge(ua, v, suffix | (a[0] as u128) << (8 * slen), slen + 1, out);
        let (vb, b) = v.split_at(v.len() - 1);
        merge(u, vb, suffix | (b[0] as u128) << (8 * slen), slen + 1, out);
    }

    fn decode(mut p: u128) -> Word {
        let mut letters = Vec::with_capacity(MAX_LEN);
        while p != 0 {
            letters.push(GeneratorId::new((p & 0xff) as u32));
            p >>= 8;
        }
        letters.reverse();
        Word::new(letters)
    }

    fn gcd(mut a: i128, mut b: i128) -> i128 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs()
    }

    fn lcm(a: i128, b: i128) -> Option<i128> {
        (a / gcd(a, b)).checked_mul(b)
    }

    /// Terms with integer coefficients over a common denominator.
    struct Integral {
        terms: Vec<(Vec<u8>, i128)>,
        den: i128,
    }

    fn integral(f: &ZinElement) -> Option<Integral> {
        let mut raw = Vec::with_capacity(f.len());
        let mut den = 1i128;
        for (w, c) in f.terms() {
            let n = i128::from(i64::try_from(c.numer()).ok()?);
            let d = i128::from(i64::try_from(c.denom()).ok()?);
            den = lcm(den, d)?;
            raw.push((bytes(w)?, n, d));
        }
        let terms = raw.into_iter().map(|(w, n, d)| Some((w, n.checked_mul(den / d)?))).collect::<Option<_>>()?;
        Some(Integral { terms, den })
    }

    /// `Σ ±f_i ⋆ g_i` with exact integer accumulation, or `None` when a
    /// letter, coefficient or intermediate value does not fit.
    pub fn combine(parts: &[(&ZinElement, &ZinElement, bool)], kind: Kind) -> Option<ZinElement> {
        let mut encoded = Vec::with_capacity(parts.len());
        let mut common = 1i128;
        for (f, g, neg) in parts {
            let (fi, gi) = (integral(f)?, integral(g)?);
            let den = fi.den.checked_mul(gi.den)?;
            common = lcm(common, den)?;
            encoded.push((fi, gi, den, *neg));
        }
        let mut map: BTreeMap<u128, i128> = BTreeMap::new();
        let mut buf = Vec::new();
        for (fi, gi, den, neg) in &encoded {
            let scale = if *neg { -(common / den) } else { common / den };
            for (u, a) in &fi.terms {
                for (v, b) in &gi.terms {
                    let c = a.checked_mul(*b)?.checked_mul(scale)?;
                    buf.clear();
                    match kind {
                        Kind::Zinbiel => {
                            let (head, last) = v.split_at(v.len() - 1);
                            merge(u, head, last[0] as u128, 1, &mut buf);
                        }
                        Kind::Shuffle => merge(u, v, 0, 0, &mut buf),
                    }
                    buf.sort_unstable();
                    let mut i = 0;
                    while i < buf.len() {
                        let w = buf[i];
                        let mut j = i + 1;
                        while j < buf.len() && buf[j] == w {
                            j += 1;
                        }
                        let term = c.checked_mul((j - i) as i128)?;
                        let slot = map.entry(w).or_insert(0);
                        *slot = slot.checked_add(term)?;
                        i = j;
                    }
                }
            }
        }
        let den = BigInt::from(common);
        let small_den = i64::try_from(common).ok();
        let scalar = |c: i128| match (i64::try_from(c), small_den) {
            (Ok(n), Some(d)) => Scalar::new(n, d),
            _ => Scalar::from_big(BigInt::from(c), den.clone()),
        };
        // Packed order equals word order, so the output is already sorted.
        Some(ZinElement::from_sorted_nonzero(
            map.into_iter().filter(|(_, c)| *c != 0).map(|(w, c)| (decode(w), scalar(c))),
        ))
    }
}

/// `Σ sign_i · f_i ⋆ g_i` for a list of signed pairs.
fn combine(parts: &[(&ZinElement, &ZinElement, bool)], kind: Kind) -> ZinElement {
    if parts.iter().all(|(f, g, _)| packed::fits(f, g)) {
        if let Some(out) = packed::combine(parts, kind) {
            return out;
        }
    }
    let mut out = ZinElement::zero();
    for (f, g, neg) in parts {
        bilinear_slow(f, g, kind, *neg, &mut out);
    }
    out
}

/// Bilinear extension of [`word_zinbiel_mul`].
pub fn zin_mul(f: &ZinElement, g: &ZinElement) -> ZinElement {
    combine(&[(f, g, false)], Kind::Zinbiel)
}

/// Bilinear extension of [`shuffle_words`].
pub fn shuffle_mul(f: &ZinElement, g: &ZinElement) -> ZinElement {
    combine(&[(f, g, false)], Kind::Shuffle)
}

/// `[f, g] = f ∘ g - g ∘ f`.
pub fn commutator(f: &ZinElement, g: &ZinElement) -> ZinElement {
    combine(&[(f, g, false), (g, f, true)], Kind::Zinbiel)
}

/// `{f, g} = f ∘ g + g ∘ f`.
pub fn anticommutator(f: &ZinElement, g: &ZinElement) -> ZinElement {
    combine(&[(f, g, false), (g, f, false)], Kind::Zinbiel)
}

/// Reference implementations without the packed fast path.
pub mod reference {
    use super::{bilinear_slow, Kind};
    use crate::element::ZinElement;

    pub fn zin_mul(f: &ZinElement, g: &ZinElement) -> ZinElement {
        let mut out = ZinElement::zero();
        bilinear_slow(f, g, Kind::Zinbiel, false, &mut out);
        out
    }

    pub fn shuffle_mul(f: &ZinElement, g: &ZinElement) -> ZinElement {
        let mut out = ZinElement::zero();
        bilinear_slow(f, g, Kind::Shuffle, false, &mut out);
        out
    }
}

/// Left-normed product `((f1 ∘ f2) ∘ f3) ... ∘ fn`. Panics on an empty list.
pub fn left_normed(factors: &[ZinElement]) -> ZinElement {
    let (first, rest) = factors.split_first().expect("at least one factor");
    rest.iter().fold(first.clone(), |acc, f| zin_mul(&acc, f))
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;
    use crate::word::gen;

    fn w(ix: &[u32]) -> Word {
        Word::from_indices(ix)
    }
    fn words(list: &[&[u32]]) -> ZinElement {
        ZinElement::sum_of_words(list.iter().map(|ix| w(ix)))
    }
    // a=1 b=2 c=3 d=4
    #[test]
    fn zinbiel_words() {
        assert_eq!(word_zinbiel_mul(&w(&[1]), &w(&[2])), words(&[&[1, 2]]));
        assert_eq!(word_zinbiel_mul(&w(&[1, 2]), &w(&[3])), words(&[&[1, 2, 3]]));
        assert_eq!(
            word_zinbiel_mul(&w(&[1, 2]), &w(&[3, 4])),
            words(&[&[1, 2, 3, 4], &[1, 3, 2, 4], &[3, 1, 2, 4]])
        );
    }

    #[test]
    fn shuffles() {
        assert_eq!(shuffle_words(&w(&[1]), &w(&[2])), words(&[&[1, 2], &[2, 1]]));
        assert_eq!(
            shuffle_words(&w(&[1, 2]), &w(&[3, 4])),
            words(&[&[1, 2, 3, 4], &[1, 3, 2, 4], &[3, 1, 2, 4], &[1, 3, 4, 2], &[3, 1, 4, 2], &[3, 4, 1, 2]])
        );
        assert_eq!(
            shuffle_words(&w(&[1]), &w(&[1])),
            ZinElement::monomial(w(&[1, 1]), Scalar::from_int(2))
        );
        assert_eq!(shuffle_words(&w(&[1, 2]), &w(&[3])), words(&[&[1, 2, 3], &[1, 3, 2], &[3, 1, 2]]));
    }

    #[test]
    fn bilinear_extensions() {
        let x = ZinElement::generator(gen(1));
        let y = ZinElement::generator(gen(2));
        let z = ZinElement::generator(gen(3));
        assert!(zin_mul(&ZinElement::zero(), &x).is_zero());
        assert_eq!(zin_mul(&(&x + &y), &z), words(&[&[1, 3], &[2, 3]]));
        assert_eq!(
            zin_mul(&words(&[&[1, 2]]), &words(&[&[3, 4], &[4, 3]])),
            words(&[&[1, 2, 3, 4], &[1, 3, 2, 4], &[3, 1, 2, 4], &[1, 2, 4, 3], &[1, 4, 2, 3], &[4, 1, 2, 3]])
        );
        assert!(shuffle_mul(&ZinElement::zero(), &x).is_zero());
        assert_eq!(shuffle_mul(&x, &(&y + &z)), words(&[&[1, 2], &[2, 1], &[1, 3], &[3, 1]]));
    }

    #[test]
    fn brackets() {
        let x = ZinElement::generator(gen(1));
        let y = ZinElement::generator(gen(2));
        assert_eq!(commutator(&x, &y), &words(&[&[1, 2]]) - &words(&[&[2, 1]]));
        assert!(commutator(&x, &x).is_zero());
        assert_eq!(anticommutator(&x, &y), words(&[&[1, 2], &[2, 1]]));
        assert_eq!(left_normed(&[x.clone(), y.clone(), x.clone()]), words(&[&[1, 2, 1]]));
    }

    #[test]
    fn shuffle_with_empty_side() {
        let mut out = ZinElement::zero();
        shuffle_into(&[], &[gen(2), gen(1)], &[gen(3)], &Scalar::one(), &mut out);
        assert_eq!(out, words(&[&[2, 1, 3]]));
        let mut none = ZinElement::zero();
        shuffle_into(&[], &[], &[], &Scalar::one(), &mut none);
        assert!(none.is_zero());
    }
}
