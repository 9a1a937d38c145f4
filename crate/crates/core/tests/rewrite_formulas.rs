//! The shuffle/bar rewrite formulas for products and brackets of skew
//! elements, checked against direct expansion for every pair of skew words of
//! total degree at most seven over three letters.

use zinbiel_core::criteria::{is_lie, lemma33_rhs, lemma34_rhs, lemma35_rhs, SkewWord};
use zinbiel_core::maps::bar_word;
use zinbiel_core::{commutator, gen, zin_mul, MultiDegree, Word, ZinElement};

/// Skew words of length `n` over `q` letters.
fn skew_words(n: u32, q: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut counts = vec![0u32; q as usize];
    fn rec(k: usize, left: u32, counts: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k + 1 == counts.len() {
            counts[k] = left;
            out.push(counts.clone());
            return;
        }
        for c in 0..=left {
            counts[k] = c;
            rec(k + 1, left - c, counts, out);
        }
    }
    let mut all = Vec::new();
    rec(0, n, &mut counts, &mut all);
    for c in all {
        let d = MultiDegree::from_counts(&c);
        out.extend(d.words().into_iter().filter(|w| SkewWord::new(w.clone()).is_ok()));
    }
    out
}

fn pairs(max_total: u32, q: u32) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for m in 2..=max_total - 2 {
        for n in 2..=max_total - m {
            for u in skew_words(m, q) {
                for v in skew_words(n, q) {
                    out.push((u.clone(), v));
                }
            }
        }
    }
    out
}

#[test]
fn zinbiel_product_of_bars_matches_expansion() {
    let mut checked = 0;
    for (u, v) in pairs(7, 3) {
        let direct = zin_mul(&bar_word(&u).unwrap(), &bar_word(&v).unwrap());
        assert_eq!(lemma33_rhs(&u, &v).unwrap(), direct, "u={u:?} v={v:?}");
        checked += 1;
    }
    assert!(checked > 500);
}

#[test]
fn bracket_of_bar_with_letter_matches_expansion() {
    for m in 2..=6 {
        for u in skew_words(m, 3) {
            for g in 1..=3 {
                let direct = commutator(&bar_word(&u).unwrap(), &ZinElement::generator(gen(g)));
                let rhs = lemma34_rhs(&u, gen(g)).unwrap();
                assert_eq!(rhs, direct, "u={u:?} g={g}");
                assert!(is_lie(&rhs));
            }
        }
    }
}

#[test]
fn bracket_of_bars_matches_expansion() {
    for (u, v) in pairs(7, 3) {
        let direct = commutator(&bar_word(&u).unwrap(), &bar_word(&v).unwrap());
        let rhs = lemma35_rhs(&u, &v).unwrap();
        assert_eq!(rhs, direct, "u={u:?} v={v:?}");
    }
}
