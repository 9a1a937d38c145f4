//! Printer/parser round trips and ideal-component invariants on random inputs.

use proptest::prelude::*;

use zinbiel::eval::{eval, Env};
use zinbiel::parse::{parse, Expr, Func};
use zinbiel::random::{self, rng};
use zinbiel::suites::multidegrees;
use zinbiel_core::speciality::{st_component, IdealComponents, IdealPresentation};
use zinbiel_core::{bar, gen, Alphabet, Scalar};

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["x", "y", "z", "a1"]).prop_map(|s| Expr::Gen(s.to_string())),
        (0i64..5, 1i64..4).prop_map(|(n, d)| Expr::Lit(Scalar::new(n, d))),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Add(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Sub(b(l), b(r))),
            inner.clone().prop_map(move |e| Expr::Neg(b(e))),
            ((1i64..5, 1i64..4), inner.clone()).prop_map(move |((n, d), e)| Expr::Scale(Scalar::new(n, d), b(e))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Mul(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Shuffle(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Bracket(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Brace(b(l), b(r))),
            inner.clone().prop_map(|e| Expr::Call(Func::P, vec![e])),
            inner.clone().prop_map(|e| Expr::Call(Func::Bar, vec![e])),
            inner.clone().prop_map(|e| Expr::Call(Func::Dynkin, vec![e])),
            (inner.clone(), inner.clone(), inner).prop_map(|(a, b, c)| Expr::Call(Func::Jacobiator, vec![a, b, c])),
        ]
    })
}

fn value(e: &Expr) -> Result<String, String> {
    let mut env = Env::open();
    eval(e, &mut env).map(|v| v.to_text(&env.alphabet)).map_err(|err| err.to_string())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn printed_expressions_reparse(e in expr()) {
        let text = e.to_string();
        let parsed = parse(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        let again = parse(&parsed.to_string()).unwrap();
        prop_assert_eq!(&again, &parsed);
        // Printing may normalise the tree but never its meaning.
        prop_assert_eq!(value(&parsed).is_ok(), value(&e).is_ok());
        if let (Ok(a), Ok(b)) = (value(&parsed), value(&e)) {
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn generated_ideal_sits_inside_both_sides() {
    let mut r = rng(5);
    let alphabet = Alphabet::new(["x", "y"]).unwrap();
    for _ in 0..15 {
        let f = random::element(&mut r, 2, 2, 2);
        let g = bar(&f.push_letter(gen(2)).push_letter(gen(1)).push_letter(gen(2))).unwrap();
        if g.is_zero() {
            continue;
        }
        let p = IdealPresentation::new(alphabet.clone(), "random", [g]).unwrap();
        let mut comps = IdealComponents::new(&p);
        for d in multidegrees(2, 5) {
            let alpha = comps.alpha(&d).unwrap();
            let zin = comps.zin(&d).unwrap();
            let st = st_component(&d).unwrap();
            let cap = zin.intersect(&st).unwrap();
            assert!(alpha.is_subspace_of(&cap).unwrap(), "{d:?}");
            let out = comps.cohn(&d).unwrap();
            assert_eq!(out.alpha_rank, alpha.rank());
            assert_eq!(out.intersection_rank, cap.rank());
            assert!(out.alpha_rank <= out.intersection_rank);
            assert!(out.intersection_rank <= out.st_rank.min(out.zin_ideal_rank));
        }
    }
}
