//! Randomized and exhaustive verification suites, each producing a [`Report`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use zinbiel_core::analytic::{check_remark1, Remark1Outcome, TruncPoly};
use zinbiel_core::criteria::{corollary23_check, dim_st, is_lie, lemma33_rhs, lemma34_rhs, lemma35_rhs};
use zinbiel_core::maps::bar_word;
use zinbiel_core::report::Report;
use zinbiel_core::speciality::{IdealComponents, IdealPresentation};
use zinbiel_core::tortkara::{
    degree4_relation_check, eval_tree, free_tortkara_multilinear_dim, left_normed_rank, s_identity_scan, verify_tortkara,
};
use zinbiel_core::{
    bar, commutator, gen, shuffle_mul, word_zinbiel_mul, zin_mul, Alphabet, GeneratorId, MultiDegree, Word, ZinElement,
};

use crate::random::{self, Rand};

/// Number of trials run and how many failed, with the first failing input.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub trials: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.trials > 0 && self.failures == 0
    }

    /// Adds a check named `name` whose expected outcome is zero failures.
    pub fn report(&self, r: &mut Report, name: &str) -> bool {
        let mut computed = format!("{} failures in {} trials", self.failures, self.trials);
        if let Some(f) = &self.first_failure {
            let _ = write!(computed, " (first: {f})");
        }
        r.check(name, format!("0 failures in {} trials", self.trials), computed, self.passed())
    }
}

fn x(i: u32) -> ZinElement {
    ZinElement::generator(gen(i))
}

/// `a(bc) = (ab + ba)c` on random triples of total degree at most `max_total`
/// over three generators.
pub fn zinbiel_identity(r: &mut Rand, trials: usize, max_total: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..trials {
        let total = rand::Rng::gen_range(r, 3..=max_total.max(3));
        let lens = random::composition(r, total, 3);
        let [a, b, c] = [0, 1, 2].map(|k| random::element(r, 3, lens[k], 3));
        let lhs = zin_mul(&a, &zin_mul(&b, &c));
        let rhs = zin_mul(&(zin_mul(&a, &b) + zin_mul(&b, &a)), &c);
        t.record(lhs == rhs, || format!("{a:?} | {b:?} | {c:?}"));
    }
    t
}

/// Commutativity and associativity of the shuffle product.
pub fn shuffle_laws(r: &mut Rand, trials: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..trials {
        let [a, b, c] = [0, 1, 2].map(|_| random::element(r, 3, 3, 2));
        let ok = shuffle_mul(&a, &b) == shuffle_mul(&b, &a)
            && shuffle_mul(&shuffle_mul(&a, &b), &c) == shuffle_mul(&a, &shuffle_mul(&b, &c));
        t.record(ok, || format!("{a:?} | {b:?} | {c:?}"));
    }
    t
}

/// `u ∘ v` against direct enumeration of interleavings, over every pair of
/// two-letter words with `|u| + |v| <= max_total`.
pub fn product_recursions(max_total: usize) -> Tally {
    let mut t = Tally::default();
    let words = |n: usize| (0u32..1 << n).map(move |m| Word::from_indices(&(0..n).map(|k| (m >> k & 1) + 1).collect::<Vec<_>>()));
    for m in 1..max_total {
        for n in 1..=max_total - m {
            for u in words(m) {
                for v in words(n) {
                    let ok = word_zinbiel_mul(&u, &v) == enumerated_product(&u, &v);
                    t.record(ok, || format!("{u:?} o {v:?}"));
                }
            }
        }
    }
    t
}

fn enumerated_product(u: &Word, v: &Word) -> ZinElement {
    let (head, last) = v.letters().split_at(v.len() - 1);
    let n = u.len() + head.len();
    let mut out = ZinElement::zero();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != u.len() {
            continue;
        }
        let (mut i, mut j) = (0, 0);
        let mut w: Vec<GeneratorId> = Vec::with_capacity(n + 1);
        for k in 0..n {
            if mask >> k & 1 == 1 {
                w.push(u.letters()[i]);
                i += 1;
            } else {
                w.push(head[j]);
                j += 1;
            }
        }
        w.push(last[0]);
        out += &ZinElement::from_word(Word::new(w));
    }
    out
}

/// Tortkara residuals and the degree-four relation on all `4^4` quadruples of generators.
pub fn tortkara_on_generators() -> Tally {
    let mut t = Tally::default();
    for m in 0..256u32 {
        let [a, b, c, d] = [0, 1, 2, 3].map(|k| x((m >> (2 * k) & 3) + 1));
        let (r2, r3) = verify_tortkara(&a, &b, &c, &d);
        let r4 = degree4_relation_check(&a, &b, &c, &d);
        t.record(r2.is_zero() && r3.is_zero() && r4.is_zero(), || format!("{a:?},{b:?},{c:?},{d:?}"));
    }
    t
}

/// The same residuals on random quadruples of degree at most three.
pub fn tortkara_random(r: &mut Rand, trials: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..trials {
        let [a, b, c, d] = [0; 4].map(|_| random::element(r, 4, 3, 2));
        let (r2, r3) = verify_tortkara(&a, &b, &c, &d);
        let r4 = degree4_relation_check(&a, &b, &c, &d);
        t.record(r2.is_zero() && r3.is_zero() && r4.is_zero(), || format!("{a:?} | {b:?} | {c:?} | {d:?}"));
    }
    t
}

/// The closed forms for `bar(u)∘bar(v)`, `[bar(u), x]` and `[bar(u), bar(v)]`.
pub fn rewrite_formulas(r: &mut Rand, trials: usize, max_total: usize) -> Tally {
    let mut t = Tally::default();
    let max_total = max_total.max(4);
    for _ in 0..trials {
        let total = rand::Rng::gen_range(r, 4..=max_total);
        let m = rand::Rng::gen_range(r, 2..=total - 2);
        let u = random::skew_word(r, 3, m);
        let v = random::skew_word(r, 3, total - m);
        let g = gen(rand::Rng::gen_range(r, 1..=3));
        let (bu, bv) = (bar_word(&u).expect("len >= 2"), bar_word(&v).expect("len >= 2"));
        let ok = lemma33_rhs(&u, &v).ok() == Some(zin_mul(&bu, &bv))
            && lemma34_rhs(&u, g).ok() == Some(commutator(&bu, &ZinElement::generator(g)))
            && lemma35_rhs(&u, &v).ok() == Some(commutator(&bu, &bv));
        t.record(ok, || format!("u={u:?} v={v:?} g={g:?}"));
    }
    t
}

/// For Lie `b, c` and any `a`: `abc - acb` and `bc - cb` are Lie.
pub fn lie_closure(r: &mut Rand, trials: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..trials {
        let a = random::element(r, 3, 2, 2);
        let lie = |r: &mut Rand| {
            let len = rand::Rng::gen_range(r, 2..=3);
            bar(&ZinElement::from_word(random::skew_word(r, 3, len))).expect("len >= 2")
        };
        let (b, c) = (lie(r), lie(r));
        t.record(corollary23_check(&a, &b, &c) == Ok(true), || format!("{a:?} | {b:?} | {c:?}"));
    }
    t
}

/// Evaluations of random bracket trees (with `2..=max_leaves` leaves over
/// `q` generators) satisfy `p(f) = -f`.
pub fn bracket_trees_are_lie(r: &mut Rand, trials: usize, max_leaves: usize, q: u32) -> Tally {
    let mut t = Tally::default();
    let assignment: BTreeMap<GeneratorId, ZinElement> = (1..=q).map(|i| (gen(i), x(i))).collect();
    for _ in 0..trials {
        let leaves = rand::Rng::gen_range(r, 2..=max_leaves.max(2));
        let tree = random::bracket_tree(r, q, leaves);
        let f = eval_tree(&tree, &assignment).expect("all leaves assigned");
        t.record(is_lie(&f), || format!("{tree:?}"));
    }
    t
}

/// Everything `verify core` runs.
pub fn verify_core(max_degree: usize, trials: usize, seed: u64) -> Report {
    let mut r = random::rng(seed);
    let mut rep = Report::new("core identities");
    rep.field("max_degree", max_degree);
    rep.field("trials", trials);
    rep.field("seed", seed);
    let (r2, r3) = verify_tortkara(&x(1), &x(2), &x(3), &x(4));
    rep.check_eq("jacobiator convention: residuals on x1..x4 vanish", "true", r2.is_zero() && r3.is_zero());
    zinbiel_identity(&mut r, trials, max_degree).report(&mut rep, "Zinbiel identity");
    shuffle_laws(&mut r, trials).report(&mut rep, "shuffle commutative and associative");
    product_recursions(max_degree.min(8)).report(&mut rep, "product equals enumerated interleavings");
    tortkara_on_generators().report(&mut rep, "Tortkara identities on generator quadruples");
    tortkara_random(&mut r, trials).report(&mut rep, "Tortkara identities on random quadruples");
    rewrite_formulas(&mut r, trials, max_degree).report(&mut rep, "product and bracket formulas for skew bars");
    lie_closure(&mut r, trials).report(&mut rep, "abc - acb and bc - cb are Lie");
    bracket_trees_are_lie(&mut r, trials, max_degree, 4).report(&mut rep, "bracket evaluations are Lie");
    rep
}

pub fn mdim_value(n: u32) -> zinbiel_core::Result<usize> {
    free_tortkara_multilinear_dim(n)
}

pub fn scan_report(n: u32) -> zinbiel_core::Result<Report> {
    let s = s_identity_scan(n)?;
    let mut r = Report::new(format!("s-identity scan, multilinear degree {n}"));
    r.field("ambient_dim", s.ambient_dim);
    r.field("consequence_rank", s.consequence_rank);
    r.field("free_tortkara_dim", s.free_dim);
    r.field("special_dim", s.special_dim);
    r.field("image_rank", s.image_rank);
    r.field("kernel_dim", s.kernel.len());
    let names = Alphabet::numbered(n);
    for (i, k) in s.kernel.iter().enumerate() {
        r.field(format!("kernel[{i}]"), k.to_text(&names).replace('\n', " "));
    }
    r.check_eq("consequences vanish in Zin", "true", s.consequences_vanish);
    r.check_eq("image rank equals special dim", s.special_dim, s.image_rank);
    r.check_eq("free dim equals special dim", s.special_dim, s.free_dim);
    r.check_eq("kernel modulo consequences", 0, s.kernel.len());
    Ok(r)
}

pub fn two_gen_report(max_degree: u32) -> zinbiel_core::Result<Report> {
    let mut r = Report::new("two-generator left-normed brackets");
    r.field("generators", "x < y");
    for n in 2..=max_degree {
        let rank = left_normed_rank(n)?;
        let mut st = 0u64;
        for k in 1..n {
            st += dim_st(&MultiDegree::from_counts(&[k, n - k]))?;
        }
        r.check_eq(format!("n={n} rank"), 1u64 << (n - 2), rank);
        r.check_eq(format!("n={n} sum of dim_st"), 1u64 << (n - 2), st);
    }
    Ok(r)
}

/// Multidegrees over `q` generators with total in `2..=max_total`, ascending.
pub fn multidegrees(q: u32, max_total: u32) -> Vec<MultiDegree> {
    let mut out = Vec::new();
    let mut counts = vec![0u32; q as usize];
    loop {
        let total: u32 = counts.iter().sum();
        if (2..=max_total).contains(&total) {
            out.push(MultiDegree::from_counts(&counts));
        }
        let mut k = 0;
        loop {
            if k == counts.len() {
                out.sort();
                return out;
            }
            counts[k] += 1;
            if counts.iter().sum::<u32>() <= max_total {
                break;
            }
            counts[k] = 0;
            k += 1;
        }
    }
}

/// Cohn inclusion at every multidegree up to `max_total` over the presentation's alphabet.
pub fn cohn_report(p: &IdealPresentation, max_total: u32) -> zinbiel_core::Result<Report> {
    let mut r = Report::new(format!("Cohn inclusion for {}", p.label));
    r.field("bound", format!("all multidegrees of total <= {max_total}"));
    r.field("generators", p.alphabet.names().join(","));
    let mut comps = IdealComponents::new(p);
    for d in multidegrees(p.alphabet.len() as u32, max_total) {
        let out = comps.cohn(&d)?;
        let name = describe(&d, &p.alphabet);
        let verdict = if out.holds() { "holds" } else { "fails" };
        r.check_eq(
            format!("{name} (alpha {}, {{alpha}} cap ST {})", out.alpha_rank, out.intersection_rank),
            "holds",
            verdict,
        );
        if let zinbiel_core::speciality::CohnVerdict::Fails(w) = &out.verdict {
            r.field(format!("witness {name}"), w.to_text(&p.alphabet).replace('\n', " "));
        }
    }
    Ok(r)
}

/// `x^2.y` style multidegree label.
pub fn describe(d: &MultiDegree, a: &Alphabet) -> String {
    let parts: Vec<String> = d
        .generators()
        .map(|(g, k)| if k == 1 { a.name(g) } else { format!("{}^{k}", a.name(g)) })
        .collect();
    parts.join(".")
}

/// Random ideals generated by one element `bar(f∘x∘y)` over `{x, y}`; the
/// inclusion must hold in every multidegree of total at most `max_total`.
pub fn two_generator_cohn(r: &mut Rand, presentations: usize, max_total: u32) -> zinbiel_core::Result<Tally> {
    let mut t = Tally::default();
    let alphabet = Alphabet::new(["x", "y"]).expect("valid");
    let degrees = multidegrees(2, max_total);
    for _ in 0..presentations {
        let f = random::element(r, 2, 2, 2);
        let g = bar(&f.push_letter(gen(1)).push_letter(gen(2)))?;
        let p = IdealPresentation::new(alphabet.clone(), "bar(f.x.y)", [g.clone()])?;
        let mut comps = IdealComponents::new(&p);
        let mut holds = true;
        for d in &degrees {
            holds &= comps.cohn(d)?.holds();
        }
        t.record(holds, || format!("{g:?}"));
    }
    Ok(t)
}

pub fn integration_algebras(cap: usize, trials: usize, seed: u64) -> zinbiel_core::Result<Remark1Outcome> {
    let mut r = random::rng(seed);
    let quads: Vec<[TruncPoly; 4]> = (0..trials).map(|_| [0; 4].map(|_| random::trunc_poly(&mut r, 2, cap))).collect();
    let mut out = check_remark1(cap, &quads)?;
    out.report.field("seed", seed);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multidegree_listing() {
        let ds = multidegrees(2, 3);
        let totals: Vec<u32> = ds.iter().map(MultiDegree::total).collect();
        assert_eq!(totals, vec![2, 2, 2, 3, 3, 3, 3]);
    }

    #[test]
    fn small_suites_pass() {
        let rep = verify_core(5, 10, 1);
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn two_gen_small() {
        assert!(two_gen_report(5).unwrap().all_pass());
    }
}
