//! Seeded generators for random test inputs.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use zinbiel_core::analytic::TruncPoly;
use zinbiel_core::tortkara::AcTree;
use zinbiel_core::{gen, MultiDegree, Scalar, Word, ZinElement};

pub type Rand = ChaCha8Rng;

pub fn rng(seed: u64) -> Rand {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Non-zero rational with numerator in `-4..=4` and denominator in `1..=3`.
pub fn scalar(r: &mut Rand) -> Scalar {
    let mut n = 0;
    while n == 0 {
        n = r.gen_range(-4i64..=4);
    }
    Scalar::new(n, r.gen_range(1..=3))
}

pub fn word(r: &mut Rand, q: u32, len: usize) -> Word {
    Word::from_indices(&(0..len).map(|_| r.gen_range(1..=q)).collect::<Vec<_>>())
}

/// Word of length `len >= 2` whose last two letters ascend; needs `q >= 2`.
pub fn skew_word(r: &mut Rand, q: u32, len: usize) -> Word {
    let mut letters: Vec<u32> = (0..len - 2).map(|_| r.gen_range(1..=q)).collect();
    let a = r.gen_range(1..q);
    letters.push(a);
    letters.push(r.gen_range(a + 1..=q));
    Word::from_indices(&letters)
}

/// Sum of up to `max_terms` random words of length `1..=max_len`.
pub fn element(r: &mut Rand, q: u32, max_len: usize, max_terms: usize) -> ZinElement {
    let terms = r.gen_range(1..=max_terms);
    ZinElement::from_terms((0..terms).map(|_| {
        let len = r.gen_range(1..=max_len);
        (word(r, q, len), scalar(r))
    }))
}

/// Random combination of words of content `d`.
pub fn homogeneous(r: &mut Rand, d: &MultiDegree, max_terms: usize) -> ZinElement {
    let words = d.words();
    let terms = r.gen_range(1..=max_terms);
    ZinElement::from_terms((0..terms).map(|_| (words.choose(r).expect("non-empty").clone(), scalar(r))))
}

/// Random bracketing with `leaves` random leaves from `x1..xq`.
pub fn bracket_tree(r: &mut Rand, q: u32, leaves: usize) -> AcTree {
    if leaves == 1 {
        return AcTree::leaf(gen(r.gen_range(1..=q)));
    }
    let k = r.gen_range(1..leaves);
    AcTree::node(bracket_tree(r, q, k), bracket_tree(r, q, leaves - k))
}

pub fn trunc_poly(r: &mut Rand, max_degree: usize, cap: usize) -> TruncPoly {
    let deg = r.gen_range(0..=max_degree);
    let coeffs = (0..=deg)
        .map(|_| if r.gen_bool(0.3) { Scalar::zero() } else { scalar(r) })
        .collect();
    TruncPoly::new(coeffs, cap)
}

/// Splits `total` into `parts` positive lengths, uniformly over compositions.
pub fn composition(r: &mut Rand, total: usize, parts: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = (1..total).collect();
    cuts.shuffle(r);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts.into_iter().chain([total]) {
        out.push(c - prev);
        prev = c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = element(&mut rng(7), 3, 4, 3);
        let b = element(&mut rng(7), 3, 4, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn shapes() {
        let mut r = rng(1);
        for _ in 0..50 {
            let w = skew_word(&mut r, 3, 4);
            let l = w.letters();
            assert!(l[2] < l[3]);
            let c = composition(&mut r, 6, 3);
            assert_eq!(c.iter().sum::<usize>(), 6);
            assert!(c.iter().all(|&p| p > 0));
            assert_eq!(bracket_tree(&mut r, 2, 5).size(), 5);
        }
    }
}
