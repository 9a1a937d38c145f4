//! End-to-end acceptance run: one line per criterion, non-zero exit on failure.
//!
//! Runs without the libtest harness so the lines always reach stdout.

mod common;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::Rng;
use zinbiel::random::{self, rng};
use zinbiel::suites;
use zinbiel_core::criteria::{dim_st, enumerate_skew_basis, is_jordan, jordan_symmetrize};
use zinbiel_core::linalg::{kernel, to_vector, Coordinatizer, Row, Span, Subspace};
use zinbiel_core::maps::dynkin_word;
use zinbiel_core::speciality::{counterexample_certificate, st_component};
use zinbiel_core::tortkara::{bracket_evaluation_span, free_tortkara_multilinear_dim, left_normed_rank, s_identity_scan};
use zinbiel_core::{MultiDegree, Scalar, ZinElement};

/// Outcome of one criterion: pass flag plus a one-line summary.
struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into() }
    }
}

/// Accumulates sub-checks; the first failure is kept for the summary.
#[derive(Default)]
struct Checks {
    count: usize,
    failed: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failed.push(what());
        }
    }

    fn verdict(self, summary: &str) -> Verdict {
        match self.failed.first() {
            None => Verdict::new(true, format!("{summary} ({} checks)", self.count)),
            Some(first) => Verdict::new(false, format!("{summary}: {} of {} failed, first: {first}", self.failed.len(), self.count)),
        }
    }
}

fn tally(c: &mut Checks, name: &str, t: &suites::Tally) {
    c.check(t.passed(), || format!("{name}: {} failures in {} ({:?})", t.failures, t.trials, t.first_failure));
}

/// All count vectors of length `q` with total in `2..=max_total`.
fn count_vectors(q: usize, max_total: u32) -> Vec<Vec<u32>> {
    suites::multidegrees(q as u32, max_total)
        .iter()
        .map(|d| (1..=q as u32).map(|i| d.count(zinbiel_core::gen(i))).collect())
        .collect()
}

/// Integer partitions of `n` with exactly `parts` parts, non-increasing.
fn partitions(n: u32, parts: u32, max: u32) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, parts - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// Closed dimension formula evaluated independently in integers.
fn formula(counts: &[u32]) -> u128 {
    let n: u32 = counts.iter().sum();
    let mut pairs = 0u128;
    for i in 0..counts.len() {
        for j in i + 1..counts.len() {
            pairs += counts[i] as u128 * counts[j] as u128;
        }
    }
    let denom: u128 = counts.iter().map(|&m| factorial(m)).product();
    factorial(n - 2) * pairs / denom
}

fn criterion1() -> Verdict {
    let mut r = rng(101);
    let mut c = Checks::default();
    tally(&mut c, "Zinbiel identity", &suites::zinbiel_identity(&mut r, 500, 6));
    tally(&mut c, "Tortkara and degree-4 relation on random quadruples", &suites::tortkara_random(&mut r, 200));
    tally(&mut c, "Tortkara and degree-4 relation on generator quadruples", &suites::tortkara_on_generators());
    c.verdict("500 triples, 200 random quadruples, 256 generator quadruples")
}

fn criterion2() -> Verdict {
    let mut r = rng(202);
    let mut c = Checks::default();
    tally(&mut c, "bracket trees are Lie", &suites::bracket_trees_are_lie(&mut r, 500, 6, 4));
    let mut shapes = count_vectors(4, 6);
    for q in 5..=6 {
        for n in q..=6 {
            shapes.extend(partitions(n, q, n));
        }
    }
    let degrees = shapes.len();
    for counts in shapes {
        let d = MultiDegree::from_counts(&counts);
        let (brackets, st) = match (bracket_evaluation_span(&d), st_component(&d)) {
            (Ok(b), Ok(s)) => (b, s),
            (b, s) => {
                c.check(false, || format!("{counts:?}: {:?} {:?}", b.err(), s.err()));
                continue;
            }
        };
        let same = brackets.rank() == st.rank()
            && brackets.is_subspace_of(&st).unwrap_or(false)
            && st.is_subspace_of(&brackets).unwrap_or(false);
        c.check(same, || format!("{counts:?}: bracket rank {} vs skew rank {}", brackets.rank(), st.rank()));
        c.check(st.rank() as u128 == formula(&counts), || format!("{counts:?}: rank {} vs formula", st.rank()));
    }
    c.verdict(&format!("500 bracket trees Lie; bracket span = skew span in {degrees} multidegrees"))
}

fn criterion3() -> Verdict {
    let mut c = Checks::default();
    let degrees = count_vectors(4, 8);
    for counts in &degrees {
        let d = MultiDegree::from_counts(counts);
        let basis = enumerate_skew_basis(&d).expect("total >= 2");
        let closed = dim_st(&d).expect("total >= 2");
        let expected = formula(counts);
        c.check(basis.len() as u128 == expected && closed as u128 == expected, || {
            format!("{counts:?}: enumerated {}, dim_st {closed}, formula {expected}", basis.len())
        });
        let coords = Arc::new(Coordinatizer::new(d.words()));
        let mut span = Subspace::new(coords);
        for s in &basis {
            span.insert(&s.bar()).expect("same multidegree");
        }
        c.check(span.rank() == basis.len(), || format!("{counts:?}: rank {} of {}", span.rank(), basis.len()));
    }
    for (q, want) in [(3u32, 3u64), (4, 12), (5, 60)] {
        let got = dim_st(&MultiDegree::from_counts(&vec![1; q as usize])).expect("q >= 2");
        c.check(got == want, || format!("multilinear q={q}: {got} vs {want}"));
    }
    c.verdict(&format!("{} multidegrees with total <= 8 over 4 generators; multilinear 3, 12, 60", degrees.len()))
}

fn criterion4() -> Verdict {
    let mut c = Checks::default();
    let degrees: Vec<Vec<u32>> = (1..=6).map(|n| vec![n]).chain(count_vectors(4, 6)).collect();
    for counts in &degrees {
        let d = MultiDegree::from_counts(counts);
        let n = d.total();
        let nfact = Scalar::factorial(n);
        let f = jordan_symmetrize(&d.letters());
        let image: ZinElement = f.terms().fold(ZinElement::zero(), |mut acc, (w, k)| {
            acc += &dynkin_word(w).scale(k);
            acc
        });
        c.check(image == f.scale(&nfact), || format!("{counts:?}: D(sym) != n! sym"));

        let words = d.words();
        let coords = Coordinatizer::new(words.clone());
        let rows: Vec<Row> = words
            .iter()
            .map(|w| {
                let mut e = dynkin_word(w);
                e.add_term(w.clone(), -&nfact);
                to_vector(&e, &coords).expect("same multidegree")
            })
            .collect();
        let k = kernel(&rows, coords.dim()).expect("dimensions agree");
        c.check(k.len() == 1, || format!("{counts:?}: Jordan component rank {}", k.len()));
    }
    let mut r = rng(404);
    let mut rejected = 0;
    let trials = 200;
    for _ in 0..trials {
        let len = r.gen_range(2..=6);
        let w = loop {
            let w = random::word(&mut r, 3, len);
            if w.letters().windows(2).any(|p| p[0] != p[1]) {
                break w;
            }
        };
        let ok = !is_jordan(&ZinElement::from_word(w.clone()));
        rejected += ok as usize;
        c.check(ok, || format!("{w:?} accepted"));
    }
    c.verdict(&format!("{} multidegrees up to n = 6; {rejected}/{trials} random words rejected", degrees.len()))
}

fn criterion5() -> Verdict {
    let mut c = Checks::default();
    let mut ranks = Vec::new();
    for n in 2..=9u32 {
        let rank = left_normed_rank(n).expect("n >= 2");
        ranks.push(rank.to_string());
        c.check(rank == 1usize << (n - 2), || format!("n={n}: rank {rank}"));
    }
    c.verdict(&format!("left-normed ranks n=2..9: {}", ranks.join(",")))
}

fn criterion6() -> Verdict {
    let mut c = Checks::default();
    match counterexample_certificate() {
        Ok(rep) => {
            let computed = |name: &str| rep.checks.iter().find(|k| k.name.starts_with(name)).map(|k| k.computed.clone());
            c.check(rep.all_pass(), || format!("certificate:\n{rep}"));
            c.check(computed("rank [x,g1]").as_deref() == Some("3"), || "rank before".into());
            c.check(computed("rank after").as_deref() == Some("4"), || "rank after".into());
        }
        Err(e) => c.check(false, || format!("certificate: {e}")),
    }
    let mut r = rng(606);
    match suites::two_generator_cohn(&mut r, 100, 6) {
        Ok(t) => tally(&mut c, "two-generator Cohn", &t),
        Err(e) => c.check(false, || format!("two-generator Cohn: {e}")),
    }
    c.verdict("certificate with rank 3 -> 4; 100 two-generator ideals hold up to total 6")
}

fn criterion7() -> (Verdict, String) {
    let mut c = Checks::default();
    for n in 3..=5u32 {
        let want = (factorial(n) / 2) as usize;
        match (free_tortkara_multilinear_dim(n), s_identity_scan(n)) {
            (Ok(dim), Ok(scan)) => {
                c.check(dim == want && scan.free_dim == want, || format!("n={n}: dim {dim} vs {want}"));
                c.check(scan.kernel.is_empty() && scan.consequences_vanish, || format!("n={n}: kernel {}", scan.kernel.len()));
            }
            (a, b) => c.check(false, || format!("n={n}: {:?} {:?}", a.err(), b.err().map(|e| e.to_string()))),
        }
    }
    let extended = match s_identity_scan(6) {
        Ok(s) => format!(
            "n=6 (not gating): ambient {}, free dim {}, kernel {}",
            s.ambient_dim,
            s.free_dim,
            s.kernel.len()
        ),
        Err(e) => format!("n=6 (not gating): error {e}"),
    };
    (c.verdict("n!/2 with empty kernel for n = 3, 4, 5"), extended)
}

fn criterion8() -> Verdict {
    let mut c = Checks::default();
    match suites::integration_algebras(12, 100, 808) {
        Ok(out) => {
            c.check(out.report.all_pass(), || format!("report:\n{}", out.report));
            for (name, t) in [("diamond Zinbiel", &out.diamond_zinbiel), ("commutators agree", &out.brackets_agree)] {
                c.check(t.exact_trials >= 100 && t.holds(), || format!("{name}: {t:?}"));
            }
            // Deeper products may truncate; only truncation-free trials count.
            for (name, t) in [("left commutative", &out.star_left_commutative), ("cyclic associator", &out.star_cyclic_associator)] {
                c.check(t.holds(), || format!("{name}: {t:?}"));
            }
            let has = |v: &str| out.report.checks.iter().any(|k| k.pass && k.computed == v);
            c.check(has("x^4/4") && has("x^4/12") && has("x^3/3"), || "worked values".into());
        }
        Err(e) => c.check(false, || format!("integration algebras: {e}")),
    }
    c.verdict("cap 12, 100 truncation-free trials; x^4/4 vs x^4/12; [1,x] = x^3/3")
}

/// Dense Gauss-Jordan rank, independent of the sparse span code.
fn dense_rank(mut m: Vec<Vec<Scalar>>, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        let pivot: Vec<Scalar> = m[rank].iter().map(|v| v.clone() * inv.clone()).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v -= &(f.clone() * pv.clone());
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

fn criterion9() -> Verdict {
    let mut c = Checks::default();
    let mut r = rng(909);
    for _ in 0..50 {
        let dim = r.gen_range(1..=7);
        let k = r.gen_range(1..=8);
        let mut dense: Vec<Vec<Scalar>> = (0..k)
            .map(|_| (0..dim).map(|_| if r.gen_bool(0.4) { Scalar::zero() } else { random::scalar(&mut r) }).collect())
            .collect();
        // Force some dependencies.
        if k >= 3 {
            let (a, b) = (dense[0].clone(), dense[1].clone());
            dense[k - 1] = a.iter().zip(&b).map(|(x, y)| x.clone() * Scalar::new(2, 3) - y.clone()).collect();
        }
        let rows: Vec<Row> = dense.iter().map(|v| Row::from_dense(v)).collect();
        let span = Span::from_rows(dim, &rows).expect("dimensions agree");
        let oracle = dense_rank(dense.clone(), dim);
        c.check(span.rank() == oracle, || format!("rank {} vs oracle {oracle} on {dense:?}", span.rank()));
        let target: Vec<Scalar> = (0..dim).map(|_| random::scalar(&mut r)).collect();
        let mut extended = dense.clone();
        extended.push(target.clone());
        let inside = dense_rank(extended, dim) == oracle;
        c.check(span.contains(&Row::from_dense(&target)).ok() == Some(inside), || format!("membership of {target:?}"));
    }
    let mut golden = 0;
    for (name, args) in common::cases() {
        let first = common::run(&args);
        let second = common::run(&args);
        let path = common::golden_dir().join(format!("{name}.txt"));
        let stored = std::fs::read_to_string(&path).unwrap_or_default();
        c.check(first == second && first == stored, || format!("golden {name} differs"));
        golden += 1;
    }
    c.verdict(&format!("50 random systems match dense elimination; {golden} golden outputs stable"))
}

fn main() {
    let criteria: Vec<(u32, fn() -> Verdict)> = vec![
        (1, criterion1),
        (2, criterion2),
        (3, criterion3),
        (4, criterion4),
        (5, criterion5),
        (6, criterion6),
        (8, criterion8),
        (9, criterion9),
    ];
    let start = Instant::now();
    let (mut results, extended) = std::thread::scope(|s| {
        let handles: Vec<_> = criteria.iter().map(|&(n, f)| (n, s.spawn(f))).collect();
        let seventh = s.spawn(criterion7);
        let mut results: BTreeMap<u32, Verdict> =
            handles.into_iter().map(|(n, h)| (n, h.join().unwrap_or_else(|_| Verdict::new(false, "panicked")))).collect();
        let (v7, extended) = seventh.join().unwrap_or_else(|_| (Verdict::new(false, "panicked"), String::new()));
        results.insert(7, v7);
        (results, extended)
    });
    let mut all = true;
    for (n, v) in &mut results {
        if *n == 7 {
            v.detail = format!("{}; {extended}", v.detail);
        }
        println!("criterion {n}: {} {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        all &= v.pass;
    }
    println!("acceptance: {} in {:.1?}", if all { "PASS" } else { "FAIL" }, start.elapsed());
    if !all {
        std::process::exit(1);
    }
}
