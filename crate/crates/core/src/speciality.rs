//! Graded components of ideals of ST(X) and of Zin(X), and the Cohn-type
//! inclusion test `{α} ∩ ST(X) ⊆ α`, one multidegree at a time.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::criteria::{enumerate_skew_basis, is_lie};
use crate::element::ZinElement;
use crate::error::{Error, Result};
use crate::linalg::{solve_in_terms_of, to_vector, Coordinatizer, Subspace};
use crate::maps::{bar_word, p_map};
use crate::product::{commutator, zin_mul};
use crate::report::Report;
use crate::word::{Alphabet, GeneratorId, MultiDegree, Word};

/// Generators of an ideal of ST(X), grouped by multidegree.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    pub alphabet: Alphabet,
    pub label: String,
    generators: BTreeMap<MultiDegree, Vec<ZinElement>>,
}

impl IdealPresentation {
    /// Every generator must be Lie. Mixed generators are split into their
    /// homogeneous components, which are Lie again because `p` preserves
    /// multidegree. Zero generators are dropped.
    pub fn new(alphabet: Alphabet, label: impl Into<String>, generators: impl IntoIterator<Item = ZinElement>) -> Result<Self> {
        let mut by_degree: BTreeMap<MultiDegree, Vec<ZinElement>> = BTreeMap::new();
        for g in generators {
            if !is_lie(&g) {
                return Err(Error::BadGenerator);
            }
            for (d, part) in g.homogeneous_components() {
                by_degree.entry(d).or_default().push(part);
            }
        }
        Ok(IdealPresentation { alphabet, label: label.into(), generators: by_degree })
    }

    pub fn generators(&self) -> impl Iterator<Item = &ZinElement> {
        self.generators.values().flatten()
    }

    pub fn generators_of(&self, d: &MultiDegree) -> &[ZinElement] {
        self.generators.get(d).map(Vec::as_slice).unwrap_or(&[])
    }
}

fn word_space(d: &MultiDegree) -> Subspace<Word> {
    Subspace::new(Arc::new(Coordinatizer::new(d.words())))
}

/// Basis of ST(X) in multidegree `d`: letters in degree one, skew bars above.
fn st_basis(d: &MultiDegree) -> Vec<ZinElement> {
    match d.total() {
        0 => Vec::new(),
        1 => d.generators().map(|(g, _)| ZinElement::generator(g)).collect(),
        _ => enumerate_skew_basis(d)
            .map(|b| b.iter().map(|s| s.bar()).collect())
            .unwrap_or_default(),
    }
}

/// `ST(X)` in multidegree `d`, inside the full word component.
pub fn st_component(d: &MultiDegree) -> Result<Subspace<Word>> {
    if d.total() < 2 {
        return Err(Error::DegreeTooSmall { min: 2, found: d.total() });
    }
    let mut sub = word_space(d);
    for b in st_basis(d) {
        sub.insert(&b)?;
    }
    Ok(sub)
}

fn proper_parts(d: &MultiDegree) -> Vec<(MultiDegree, MultiDegree)> {
    d.sub_degrees()
        .into_iter()
        .filter(|s| !s.is_empty() && s != d)
        .filter_map(|s| {
            let rest = d.checked_sub(&s)?;
            Some((s, rest))
        })
        .collect()
}

/// Memoized graded components of `α` (in ST(X)) and `{α}` (in Zin(X)).
///
/// Both are computed by recursion on the multidegree: a component is spanned
/// by the generators of that degree together with products of lower
/// components by spanning elements of the complementary degree, which is
/// exactly the graded piece of the generated ideal.
pub struct IdealComponents<'a> {
    presentation: &'a IdealPresentation,
    alpha: BTreeMap<MultiDegree, Subspace<Word>>,
    zin: BTreeMap<MultiDegree, Subspace<Word>>,
}

impl<'a> IdealComponents<'a> {
    pub fn new(presentation: &'a IdealPresentation) -> Self {
        IdealComponents { presentation, alpha: BTreeMap::new(), zin: BTreeMap::new() }
    }

    /// Component of the ideal of ST(X) generated by the presentation.
    pub fn alpha(&mut self, d: &MultiDegree) -> Result<Subspace<Word>> {
        if let Some(s) = self.alpha.get(d) {
            return Ok(s.clone());
        }
        let mut sub = word_space(d);
        for g in self.presentation.generators_of(d) {
            sub.insert(g)?;
        }
        let full = st_basis(d).len();
        'outer: for (low, rest) in proper_parts(d) {
            let lower = self.alpha(&low)?;
            if lower.rank() == 0 {
                continue;
            }
            let partners = st_basis(&rest);
            for a in lower.basis_elements() {
                for s in &partners {
                    sub.insert(&commutator(&a, s))?;
                    if sub.rank() == full {
                        break 'outer;
                    }
                }
            }
        }
        self.alpha.insert(d.clone(), sub.clone());
        Ok(sub)
    }

    /// Component of the two-sided Zinbiel ideal generated by the presentation.
    pub fn zin(&mut self, d: &MultiDegree) -> Result<Subspace<Word>> {
        if let Some(s) = self.zin.get(d) {
            return Ok(s.clone());
        }
        let mut sub = word_space(d);
        for g in self.presentation.generators_of(d) {
            sub.insert(g)?;
        }
        let full = sub.coords().dim();
        'outer: for (low, rest) in proper_parts(d) {
            let lower = self.zin(&low)?;
            if lower.rank() == 0 {
                continue;
            }
            let words: Vec<ZinElement> = rest.words().into_iter().map(ZinElement::from_word).collect();
            for a in lower.basis_elements() {
                for w in &words {
                    sub.insert(&zin_mul(&a, w))?;
                    sub.insert(&zin_mul(w, &a))?;
                    if sub.rank() == full {
                        break 'outer;
                    }
                }
            }
        }
        self.zin.insert(d.clone(), sub.clone());
        Ok(sub)
    }

    pub fn cohn(&mut self, d: &MultiDegree) -> Result<CohnOutcome> {
        let st = st_component(d)?;
        let zin = self.zin(d)?;
        let alpha = self.alpha(d)?;
        let inter = zin.intersect(&st)?;
        let mut witness = None;
        for v in inter.basis_elements() {
            if !alpha.contains(&v)? {
                witness = Some(v);
                break;
            }
        }
        Ok(CohnOutcome {
            multidegree: d.clone(),
            st_rank: st.rank(),
            zin_ideal_rank: zin.rank(),
            intersection_rank: inter.rank(),
            alpha_rank: alpha.rank(),
            verdict: match witness {
                None => CohnVerdict::Holds,
                Some(w) => CohnVerdict::Fails(w),
            },
        })
    }
}

pub fn st_ideal_component(p: &IdealPresentation, d: &MultiDegree) -> Result<Subspace<Word>> {
    IdealComponents::new(p).alpha(d)
}

pub fn zin_ideal_component(p: &IdealPresentation, d: &MultiDegree) -> Result<Subspace<Word>> {
    IdealComponents::new(p).zin(d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohnVerdict {
    Holds,
    /// An element of `{α} ∩ ST(X)` outside `α`.
    Fails(ZinElement),
}

#[derive(Clone, Debug)]
pub struct CohnOutcome {
    pub multidegree: MultiDegree,
    pub st_rank: usize,
    pub zin_ideal_rank: usize,
    pub intersection_rank: usize,
    pub alpha_rank: usize,
    pub verdict: CohnVerdict,
}

impl CohnOutcome {
    pub fn holds(&self) -> bool {
        self.verdict == CohnVerdict::Holds
    }
}

/// Tests `{α}_d ∩ ST_d ⊆ α_d`.
pub fn cohn_check(p: &IdealPresentation, d: &MultiDegree) -> Result<CohnOutcome> {
    IdealComponents::new(p).cohn(d)
}

/// The three-generator ideal whose quotient of ST(x, y, z) is not special,
/// with `x < y < z` numbered 1, 2, 3. Returns the presentation and the
/// generators `g1, g2, g3`.
pub fn counterexample_presentation() -> (IdealPresentation, [ZinElement; 3]) {
    let g = |w: &[u32]| bar_word(&Word::from_indices(w)).expect("length 3");
    let gens = [g(&[2, 2, 3]), g(&[2, 1, 3]), g(&[2, 1, 2])];
    let alphabet = Alphabet::new(["x", "y", "z"]).expect("valid names");
    let p = IdealPresentation::new(alphabet, "g1=bar(yyz), g2=bar(yxz), g3=bar(yxy)", gens.clone()).expect("bars are Lie");
    (p, gens)
}

/// Certificate that `w = x∘g1 - y∘g2 + z∘g3` lies in `{α} ∩ ST` but not in `α`.
///
/// Returns the report when every check matches its expected outcome and
/// [`Error::CertificateViolation`] (carrying the rendered report) otherwise.
pub fn counterexample_certificate() -> Result<Report> {
    let (p, [g1, g2, g3]) = counterexample_presentation();
    let a = &p.alphabet;
    let letter = |i: u32| ZinElement::generator(GeneratorId::new(i));
    let (x, y, z) = (letter(1), letter(2), letter(3));
    let mut r = Report::new("three-generator non-speciality certificate");
    r.field("order", "x < y < z");
    r.field("g1", a_text(&g1, a));
    r.field("g2", a_text(&g2, a));
    r.field("g3", a_text(&g3, a));

    let mut w = zin_mul(&x, &g1);
    w -= &zin_mul(&y, &g2);
    w += &zin_mul(&z, &g3);
    r.field("w", a_text(&w, a));

    let bar_form = {
        let b = |v: &[u32]| bar_word(&Word::from_indices(v)).expect("length 4");
        &(&b(&[1, 2, 2, 3]) - &b(&[2, 2, 1, 3])) + &b(&[3, 2, 1, 2])
    };
    r.check_eq("w = bar(xyyz) - bar(yyxz) + bar(zyxy)", "equal", eq_text(w == bar_form));
    r.check_eq("p(w) = -w", "true", p_map(&w) == -&w);

    let d = MultiDegree::from_counts(&[1, 2, 1]);
    let mut comps = IdealComponents::new(&p);
    let zin = comps.zin(&d)?;
    r.check_eq("w in {alpha}", "true", zin.contains(&w)?);

    let coords = Coordinatizer::new(d.words());
    let brackets = [commutator(&x, &g1), commutator(&y, &g2), commutator(&z, &g3)];
    let rows = brackets.iter().map(|e| to_vector(e, &coords)).collect::<Result<Vec<_>>>()?;
    let target = to_vector(&w, &coords)?;
    let mut span = crate::linalg::Span::new(coords.dim());
    for row in &rows {
        span.insert(row)?;
    }
    let before = span.rank();
    span.insert(&target)?;
    let after = span.rank();
    r.check_eq("rank [x,g1],[y,g2],[z,g3]", 3, before);
    r.check_eq("rank after adjoining w", 4, after);
    let solution = solve_in_terms_of(&rows, &target, coords.dim())?;
    r.check_eq("solve w in [x,g1],[y,g2],[z,g3]", "NoSolution", if solution.is_some() { "solution" } else { "NoSolution" });

    let alpha = comps.alpha(&d)?;
    let mut bracket_space = Subspace::new(alpha.coords().clone());
    for e in &brackets {
        bracket_space.insert(e)?;
    }
    r.check_eq(
        "alpha at x.y^2.z equals span of the three brackets",
        "equal",
        eq_text(alpha.is_subspace_of(&bracket_space)? && bracket_space.is_subspace_of(&alpha)?),
    );
    let outcome = comps.cohn(&d)?;
    r.check_eq("cohn inclusion at x.y^2.z", "fails", if outcome.holds() { "holds" } else { "fails" });
    if let CohnVerdict::Fails(witness) = &outcome.verdict {
        r.field("witness", a_text(witness, a));
    }

    if r.all_pass() {
        Ok(r)
    } else {
        Err(Error::CertificateViolation(alloc::format!("{r}")))
    }
}

fn eq_text(b: bool) -> &'static str {
    if b {
        "equal"
    } else {
        "different"
    }
}

fn a_text(e: &ZinElement, a: &Alphabet) -> String {
    e.to_text(a).replace('\n', " ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::gen;

    fn md(c: &[u32]) -> MultiDegree {
        MultiDegree::from_counts(c)
    }

    #[test]
    fn st_component_ranks() {
        assert_eq!(st_component(&md(&[1, 1])).unwrap().rank(), 1);
        assert_eq!(st_component(&md(&[2, 1])).unwrap().rank(), 1);
        assert_eq!(st_component(&md(&[1, 1, 1])).unwrap().rank(), 3);
        assert!(st_component(&md(&[1])).is_err());
    }

    #[test]
    fn rejects_non_lie_generators() {
        let a = Alphabet::numbered(2);
        let e = ZinElement::from_word(Word::from_indices(&[1, 2]));
        assert_eq!(IdealPresentation::new(a, "bad", [e]).unwrap_err(), Error::BadGenerator);
    }

    #[test]
    fn small_ideals() {
        let xy = commutator(&ZinElement::generator(gen(1)), &ZinElement::generator(gen(2)));
        let p = IdealPresentation::new(Alphabet::numbered(2), "[x,y]", [xy]).unwrap();
        assert_eq!(st_ideal_component(&p, &md(&[1])).unwrap().rank(), 0);
        assert_eq!(st_ideal_component(&p, &md(&[1, 1])).unwrap().rank(), 1);
        assert!(cohn_check(&p, &md(&[1, 1])).unwrap().holds());
        // the whole of ST in degree >= 2 is generated by [x,y] on two letters
        let c = cohn_check(&p, &md(&[2, 2])).unwrap();
        assert!(c.holds());
    }

    #[test]
    fn ideal_components_contain_products() {
        let (p, [g1, ..]) = counterexample_presentation();
        let d = md(&[1, 2, 1]);
        let zin = zin_ideal_component(&p, &d).unwrap();
        let x = ZinElement::generator(gen(1));
        assert!(zin.contains(&zin_mul(&x, &g1)).unwrap());
        assert!(zin.contains(&zin_mul(&g1, &x)).unwrap());
        assert_eq!(st_ideal_component(&p, &d).unwrap().rank(), 3);
        let alpha = st_ideal_component(&p, &d).unwrap();
        assert!(alpha.is_subspace_of(&st_component(&d).unwrap()).unwrap());
    }

    #[test]
    fn certificate_passes() {
        let r = counterexample_certificate().unwrap();
        assert!(r.all_pass());
    }
}
