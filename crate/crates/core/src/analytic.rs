//! One-variable polynomial algebras built from integration:
//! `a ⋆ b = b ∫∫a` and `a ⋄ b = a ⋆ b + (∫a)(∫b)`.
//!
//! Polynomials are truncated at a degree cap; every value carries a flag
//! recording whether a non-zero term was ever dropped, so identity checks can
//! be restricted to computations that stayed exact.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncPoly {
    coeffs: Vec<Scalar>,
    cap: usize,
    exact: bool,
}

impl TruncPoly {
    pub fn zero(cap: usize) -> Self {
        TruncPoly { coeffs: Vec::new(), cap, exact: true }
    }

    /// Coefficients above `cap` are dropped and mark the value inexact.
    pub fn new(coeffs: Vec<Scalar>, cap: usize) -> Self {
        let mut p = TruncPoly { coeffs, cap, exact: true };
        p.normalize();
        p
    }

    pub fn monomial(k: usize, c: Scalar, cap: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        TruncPoly::new(coeffs, cap)
    }

    pub fn one(cap: usize) -> Self {
        TruncPoly::monomial(0, Scalar::one(), cap)
    }

    pub fn x(cap: usize) -> Self {
        TruncPoly::monomial(1, Scalar::one(), cap)
    }

    fn normalize(&mut self) {
        if self.coeffs.len() > self.cap + 1 {
            if self.coeffs[self.cap + 1..].iter().any(|c| !c.is_zero()) {
                self.exact = false;
            }
            self.coeffs.truncate(self.cap + 1);
        }
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// False once any non-zero term has been truncated along the way.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn same_cap(&self, other: &TruncPoly) -> Result<()> {
        if self.cap == other.cap {
            Ok(())
        } else {
            Err(Error::CapMismatch(self.cap, other.cap))
        }
    }

    pub fn add(&self, other: &TruncPoly) -> Result<TruncPoly> {
        self.same_cap(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        let mut p = TruncPoly::new(coeffs, self.cap);
        p.exact &= self.exact && other.exact;
        Ok(p)
    }

    pub fn sub(&self, other: &TruncPoly) -> Result<TruncPoly> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> TruncPoly {
        let mut p = TruncPoly::new(self.coeffs.iter().map(|v| v * c).collect(), self.cap);
        p.exact = self.exact;
        p
    }

    /// Ordinary polynomial product.
    pub fn mul(&self, other: &TruncPoly) -> Result<TruncPoly> {
        self.same_cap(other)?;
        if self.is_zero() || other.is_zero() {
            let mut z = TruncPoly::zero(self.cap);
            z.exact = self.exact && other.exact;
            return Ok(z);
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        let mut p = TruncPoly::new(coeffs, self.cap);
        p.exact &= self.exact && other.exact;
        Ok(p)
    }
}

impl fmt::Debug for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")?;
        if !self.exact {
            f.write_str(" (truncated)")?;
        }
        Ok(())
    }
}

/// `x^3/3` style: ascending powers joined by ` + ` / ` - `.
impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let a = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            let (num, den) = (a.numer(), a.denom());
            let one = num == 1.into();
            let unit_den = den == 1.into();
            match (k, one, unit_den) {
                (0, _, _) => write!(f, "{a}")?,
                (_, true, true) => f.write_str(&power)?,
                (_, true, false) => write!(f, "{power}/{den}")?,
                (_, false, true) => write!(f, "{num}{power}")?,
                (_, false, false) => write!(f, "{num}{power}/{den}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `∫₀ˣ p`; the top term moves past the cap and is dropped when non-zero.
pub fn integrate(p: &TruncPoly) -> TruncPoly {
    let mut coeffs = vec![Scalar::zero()];
    for (k, c) in p.coeffs.iter().enumerate() {
        coeffs.push(c * &Scalar::new(1, k as i64 + 1));
    }
    let mut out = TruncPoly::new(coeffs, p.cap);
    out.exact &= p.exact;
    out
}

/// `a ⋆ b = b ∫∫a`.
pub fn star_mul(a: &TruncPoly, b: &TruncPoly) -> Result<TruncPoly> {
    a.same_cap(b)?;
    b.mul(&integrate(&integrate(a)))
}

/// `a ⋄ b = a ⋆ b + (∫a)(∫b)`.
pub fn diamond_mul(a: &TruncPoly, b: &TruncPoly) -> Result<TruncPoly> {
    star_mul(a, b)?.add(&integrate(a).mul(&integrate(b))?)
}

type Product = fn(&TruncPoly, &TruncPoly) -> Result<TruncPoly>;

fn bracket(mul: Product, a: &TruncPoly, b: &TruncPoly) -> Result<TruncPoly> {
    mul(a, b)?.sub(&mul(b, a)?)
}

pub fn star_bracket(a: &TruncPoly, b: &TruncPoly) -> Result<TruncPoly> {
    bracket(star_mul, a, b)
}

pub fn diamond_bracket(a: &TruncPoly, b: &TruncPoly) -> Result<TruncPoly> {
    bracket(diamond_mul, a, b)
}

/// `a(bc) - (ab + ba)c` for the product `mul`.
fn zinbiel_residual(mul: Product, a: &TruncPoly, b: &TruncPoly, c: &TruncPoly) -> Result<TruncPoly> {
    let lhs = mul(a, &mul(b, c)?)?;
    let rhs = mul(&mul(a, b)?.add(&mul(b, a)?)?, c)?;
    lhs.sub(&rhs)
}

pub fn diamond_zinbiel_residual(a: &TruncPoly, b: &TruncPoly, c: &TruncPoly) -> Result<TruncPoly> {
    zinbiel_residual(diamond_mul, a, b, c)
}

pub fn star_zinbiel_residual(a: &TruncPoly, b: &TruncPoly, c: &TruncPoly) -> Result<TruncPoly> {
    zinbiel_residual(star_mul, a, b, c)
}

/// `a ⋆ (b ⋆ c) - b ⋆ (a ⋆ c)`.
pub fn star_left_commutative_residual(a: &TruncPoly, b: &TruncPoly, c: &TruncPoly) -> Result<TruncPoly> {
    star_mul(a, &star_mul(b, c)?)?.sub(&star_mul(b, &star_mul(a, c)?)?)
}

/// `(a, b, c) = a ⋆ (b ⋆ c) - (a ⋆ b) ⋆ c`.
pub fn star_associator(a: &TruncPoly, b: &TruncPoly, c: &TruncPoly) -> Result<TruncPoly> {
    star_mul(a, &star_mul(b, c)?)?.sub(&star_mul(&star_mul(a, b)?, c)?)
}

/// `([a,b],c,d) + ([b,c],a,d) + ([c,a],b,d)` with `⋆`-commutators.
pub fn star_cyclic_associator_residual(a: &TruncPoly, b: &TruncPoly, c: &TruncPoly, d: &TruncPoly) -> Result<TruncPoly> {
    let t1 = star_associator(&star_bracket(a, b)?, c, d)?;
    let t2 = star_associator(&star_bracket(b, c)?, a, d)?;
    let t3 = star_associator(&star_bracket(c, a)?, b, d)?;
    t1.add(&t2)?.add(&t3)
}

fn star_jacobiator(a: &TruncPoly, b: &TruncPoly, c: &TruncPoly) -> Result<TruncPoly> {
    let t1 = star_bracket(&star_bracket(a, b)?, c)?;
    let t2 = star_bracket(&star_bracket(b, c)?, a)?;
    let t3 = star_bracket(&star_bracket(c, a)?, b)?;
    t1.add(&t2)?.add(&t3)
}

/// The two Tortkara residuals in `(A, ⋆)^(-)`, as for the commutator algebra of Zin(X).
pub fn star_tortkara_residuals(a: &TruncPoly, b: &TruncPoly, c: &TruncPoly, d: &TruncPoly) -> Result<(TruncPoly, TruncPoly)> {
    let br = star_bracket;
    let ab = br(a, b)?;
    let cb = br(c, b)?;
    let jabc = star_jacobiator(a, b, c)?;
    let r2 = br(&ab, &cb)?.sub(&br(&jabc, b)?)?;
    let r3 = br(&ab, &br(c, d)?)?
        .add(&br(&br(a, d)?, &cb)?)?
        .sub(&br(&jabc, d)?)?
        .sub(&br(&star_jacobiator(a, d, c)?, b)?)?;
    Ok((r2, r3))
}

/// Tallies of one identity over the trials whose computation stayed exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub exact_trials: usize,
    pub nonzero: usize,
}

impl Tally {
    fn record(&mut self, r: &TruncPoly) {
        if r.is_exact() {
            self.exact_trials += 1;
            if !r.is_zero() {
                self.nonzero += 1;
            }
        }
    }

    fn record_pair(&mut self, r: &TruncPoly, s: &TruncPoly) {
        if r.is_exact() && s.is_exact() {
            self.exact_trials += 1;
            if !r.is_zero() || !s.is_zero() {
                self.nonzero += 1;
            }
        }
    }

    fn record_eq(&mut self, a: &TruncPoly, b: &TruncPoly) {
        if a.is_exact() && b.is_exact() {
            self.exact_trials += 1;
            if a.coeffs != b.coeffs {
                self.nonzero += 1;
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.exact_trials > 0 && self.nonzero == 0
    }
}

#[derive(Clone, Debug)]
pub struct Remark1Outcome {
    pub report: Report,
    pub diamond_zinbiel: Tally,
    pub brackets_agree: Tally,
    pub star_left_commutative: Tally,
    pub star_cyclic_associator: Tally,
    pub star_tortkara: Tally,
}

/// Runs every integration-algebra check on the supplied trial quadruples
/// `(a, b, c, d)`, counting only truncation-free computations.
pub fn check_remark1(cap: usize, trials: &[[TruncPoly; 4]]) -> Result<Remark1Outcome> {
    if cap < 8 {
        return Err(Error::CapTooSmall(cap));
    }
    let mut diamond_zinbiel = Tally::default();
    let mut brackets_agree = Tally::default();
    let mut star_left_commutative = Tally::default();
    let mut star_cyclic_associator = Tally::default();
    let mut star_tortkara = Tally::default();
    for [a, b, c, d] in trials {
        for p in [a, b, c, d] {
            a.same_cap(p)?;
        }
        if a.cap != cap {
            return Err(Error::CapMismatch(cap, a.cap));
        }
        diamond_zinbiel.record(&diamond_zinbiel_residual(a, b, c)?);
        brackets_agree.record_eq(&star_bracket(a, b)?, &diamond_bracket(a, b)?);
        star_left_commutative.record(&star_left_commutative_residual(a, b, c)?);
        star_cyclic_associator.record(&star_cyclic_associator_residual(a, b, c, d)?);
        let (r2, r3) = star_tortkara_residuals(a, b, c, d)?;
        star_tortkara.record_pair(&r2, &r3);
    }
    if diamond_zinbiel.exact_trials == 0 && brackets_agree.exact_trials == 0 {
        return Err(Error::CapTooSmall(cap));
    }

    let mut r = Report::new("integration algebras");
    r.field("cap", cap);
    r.field("trials", trials.len());
    let tally_check = |r: &mut Report, name: &str, t: &Tally| {
        r.check(
            name,
            "residual 0",
            format!("{} non-zero of {} truncation-free trials", t.nonzero, t.exact_trials),
            t.holds(),
        );
    };
    tally_check(&mut r, "diamond Zinbiel identity", &diamond_zinbiel);

    let one = TruncPoly::one(cap);
    let x = TruncPoly::x(cap);
    let lhs = star_mul(&one, &star_mul(&one, &one)?)?;
    let s11 = star_mul(&one, &one)?;
    let rhs = star_mul(&s11.add(&s11)?, &one)?;
    r.check_eq("star 1*(1*1)", "x^4/4", &lhs);
    r.check_eq("star (1*1+1*1)*1", "x^4/12", &rhs);
    r.check_eq("star fails the Zinbiel identity at a=b=c=1", "true", lhs != rhs);

    tally_check(&mut r, "star and diamond commutators agree", &brackets_agree);
    r.check_eq("star [1,x]", "x^3/3", star_bracket(&one, &x)?);
    r.check_eq("diamond [1,x]", "x^3/3", diamond_bracket(&one, &x)?);
    tally_check(&mut r, "star a(bc) = b(ac)", &star_left_commutative);
    tally_check(&mut r, "star cyclic associator identity", &star_cyclic_associator);
    tally_check(&mut r, "star commutator algebra is Tortkara", &star_tortkara);

    Ok(Remark1Outcome {
        report: r,
        diamond_zinbiel,
        brackets_agree,
        star_left_commutative,
        star_cyclic_associator,
        star_tortkara,
    })
}
